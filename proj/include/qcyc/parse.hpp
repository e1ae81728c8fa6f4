#pragma once

// Text grammar for monomials:
//   expr := term ('*' term)* | '1'
//   term := [orbit '@'] 'Y' '[' i ';' l [';' k] ']' ['^' int]
// Whitespace between tokens is ignored.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qcyc/criteria.hpp"
#include "qcyc/monomial.hpp"

namespace qcyc {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Monomial parse_monomial(const std::string& s);

// "[orbit@]i;l[;k]", e.g. "1;0" or "b@2;3;1".
Fundamental parse_fundamental(const std::string& s);

}  // namespace qcyc
