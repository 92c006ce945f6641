#pragma once

#include "slfree/polynomial.hpp"

#include <cstddef>
#include <string_view>

namespace slfree {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("at position " + std::to_string(pos) + ": " + what), pos_(pos) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := 'x' uint | rational | '(' expr ')'
//   rational := ['-'] uint ('/' uint)?
// Variables are x1..xn; '/' is only valid inside a rational literal.
Polynomial parse_polynomial(std::string_view text, int n);

}  // namespace slfree
