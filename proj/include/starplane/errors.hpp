#pragma once

#include <stdexcept>
#include <string>

namespace starplane {

// Syntax error with a byte offset into the source text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg), position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric iteration failed to converge (or was detected as divergent).
class DivergenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Term-count cap exceeded (STARPLANE_MAX_TERMS).
class ResourceLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace starplane
