#include "kummerlab/expr.hpp"

#include <cctype>

namespace kummer {

ParseError::ParseError(std::size_t position, const std::string& expected, const std::string& found)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " + expected +
                         ", found " + found),
      pos_(position) {}

namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  Parser(const std::string& s, char var) : s_(s), var_(var) {}

  PolyInt parse() {
    PolyInt r = expr();
    skip();
    if (i_ != s_.size()) fail("'+', '-', '*' or end of input");
    return r;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  [[noreturn]] void fail(const std::string& expected) {
    std::string found = i_ < s_.size() ? std::string("'") + s_[i_] + "'" : "end of input";
    throw ParseError(i_, expected, found);
  }
  bool starts_primary(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == var_ || c == '('; }

  PolyInt expr() {
    PolyInt acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[i_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek() == '+' || peek() == '-') {
      const bool minus = s_[i_++] == '-';
      PolyInt t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  PolyInt term() {
    PolyInt acc = factor();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++i_;
        acc = acc * factor();
      } else if (starts_primary(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  PolyInt factor() {
    PolyInt base = primary();
    if (peek() == '^') {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("exponent digits");
      const std::string digits = s_.substr(start, i_ - start);
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
        i_ = start;
        fail("exponent at most " + std::to_string(kMaxExponent));
      }
      unsigned long e = std::stoul(digits);
      PolyInt r = PolyInt::constant(Integer(1));
      while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
      }
      return r;
    }
    return base;
  }

  PolyInt primary() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return PolyInt::constant(Integer(s_.substr(start, i_ - start)));
    }
    if (c == var_) {
      ++i_;
      return PolyInt::monomial(Integer(1), 1);
    }
    if (c == '(') {
      ++i_;
      PolyInt r = expr();
      if (peek() != ')') fail("')'");
      ++i_;
      return r;
    }
    fail(std::string("integer, '") + var_ + "' or '('");
  }

  const std::string& s_;
  char var_;
  std::size_t i_ = 0;
};

}  // namespace

PolyInt parse_polynomial(const std::string& src, char var) { return Parser(src, var).parse(); }

CycElt parse_cyclotomic(const std::string& src, const CycRing& ring) {
  return ring.from_poly(parse_polynomial(src, 'a'));
}

QuadElt parse_quad(const std::string& src, const QuadOrder& O) {
  IntVec c = parse_polynomial(src, 't').coeffs();
  for (std::size_t k = c.size(); k-- > 2;) {
    // t^k = t^{k-2} (-u t - v)
    c[k - 1] -= O.u() * c[k];
    c[k - 2] -= O.v() * c[k];
    c[k] = 0;
  }
  c.resize(2, Integer(0));
  return {c[0], c[1]};
}

}  // namespace kummer
