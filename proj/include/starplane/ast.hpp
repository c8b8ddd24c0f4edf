// Expression frontend: a small ASCII grammar for noncommutative words and
// commutative symbols.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] factor | atom ['^' exponent] | '(' expr ')'
//           | 'comm(' expr ',' expr ')' | 'star(' expr ',' expr [',' order] ')'
//   atom   := 'z' | 'zb' | 'zi' | 'zbi' | 'H' | 'r2' | 'i' | rational
//
// Exponents are integers in word mode; rationals are admitted in symbol mode.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starplane/ncpoly.hpp"
#include "starplane/symbol.hpp"

namespace starplane {

enum class AstKind {
    Number,
    Generator,
    Power,
    Negation,
    Sum,
    Product,
    CommCall,
    StarCall,
    FunctionCall
};

enum class GenId { Z, Zb, Zi, Zbi, H, R2, I };

const char* generator_name(GenId g);

struct SourceSpan {
    size_t begin = 0;
    size_t end = 0;
};

enum class ParseMode { Word, Symbol };

struct Ast {
    AstKind kind = AstKind::Number;
    SourceSpan span;
    Rational number{0};               // Number
    GenId gen = GenId::Z;             // Generator, Power base
    Rational exponent{1};             // Power
    std::vector<Ast> children;        // Sum/Product/Negation/Comm/Star
    std::optional<int> star_order;    // StarCall
    std::string func_name;            // FunctionCall (reserved by the grammar)
};

struct ParseResult {
    Ast root;
    ParseMode mode = ParseMode::Word;
};

ParseResult parse(const std::string& text, ParseMode mode);

// Structural equality; spans are ignored.
bool ast_equal(const Ast& a, const Ast& b);

// Word-mode translation: products preserve order, comm(a,b) stays raw
// (a b - b a, not normal-formed). Rejects star calls and fractional powers.
NCPoly to_ncpoly(const Ast& ast);

// Symbol-mode translation: like monomials merge; comm(a,b) is the star
// commutator and star(a,b[,n]) the star product at the given or ambient
// truncation order.
Symbol to_symbol(const Ast& ast, const StarConfig& cfg = StarConfig());

}  // namespace starplane
