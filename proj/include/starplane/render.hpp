// Deterministic rendering of ASTs and algebra values as plain text (the
// grammar's own surface syntax), LaTeX-like text, and JSON.
#pragma once

#include <string>

#include "starplane/ast.hpp"
#include "starplane/diffop.hpp"

namespace starplane {

enum class RenderFormat { Plain, Latex, Json };

std::string render(const Ast& ast, RenderFormat fmt);
std::string render(const NCPoly& p, RenderFormat fmt);
std::string render(const Symbol& s, RenderFormat fmt);
std::string render(const DiffOpPoly& d, RenderFormat fmt);

}  // namespace starplane
