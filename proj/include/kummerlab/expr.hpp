#pragma once

#include <stdexcept>
#include <string>

#include "kummerlab/cyclotomic.hpp"
#include "kummerlab/quad_order.hpp"

namespace kummer {

/// Malformed element expression. position is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& found);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Integer polynomial in one variable. Grammar:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (['*'] factor)*
///   factor := primary ['^' digits]
///   primary:= digits | var | '(' expr ')'
PolyInt parse_polynomial(const std::string& src, char var);

CycElt parse_cyclotomic(const std::string& src, const CycRing& ring);
/// Polynomial in t reduced with t^2 = -u t - v.
QuadElt parse_quad(const std::string& src, const QuadOrder& O);

}  // namespace kummer
