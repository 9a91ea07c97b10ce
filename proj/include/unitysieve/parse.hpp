#pragma once

// Text grammar for polynomials, shared by the CLI and the report: terms
// `c*x^i*y^j` joined by `+`/`-`, exponents possibly negative, coefficient
// optional. Univariate polynomials use only x. Parse/print round-trips are
// exact.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "unitysieve/bilaurent.hpp"
#include "unitysieve/dense_poly.hpp"

namespace usv {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  BiLaurent parse() {
    BiLaurent result;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      result = result + parse_term(sign);
      skip_ws();
      first = false;
    }
    if (first) throw ParseError("empty polynomial", 0);
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  long parse_int() {
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected integer", pos_);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) throw ParseError("integer too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  BiLaurent parse_term(int sign) {
    mpz_class coeff = sign;
    int ex = 0, ey = 0;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_int();
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t vpos = pos_;
        char var = c;
        ++pos_;
        if (var != 'x' && var != 'y')
          throw ParseError(std::string("unknown variable '") + var +
                               "', only x and y are allowed",
                           vpos);
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<int>(parse_int());
        }
        (var == 'x' ? ex : ey) += e;
        saw_factor = true;
      } else {
        throw ParseError("expected coefficient or variable", pos_);
      }
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!saw_factor) throw ParseError("empty term", pos_);
    return BiLaurent::monomial(ex, ey, coeff);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline void print_monomial(std::ostream& os, const mpz_class& coeff, int ex, int ey,
                           bool leading) {
  mpz_class a = coeff;
  if (!leading) {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  } else if (a < 0) {
    os << "-";
    a = -a;
  }
  bool has_var = (ex != 0 || ey != 0);
  if (a != 1 || !has_var) {
    os << a.get_str();
    if (has_var) os << "*";
  }
  if (ex != 0) {
    os << "x";
    if (ex != 1) os << "^" << ex;
    if (ey != 0) os << "*";
  }
  if (ey != 0) {
    os << "y";
    if (ey != 1) os << "^" << ey;
  }
}

}  // namespace detail

inline BiLaurent parse_bilaurent(const std::string& s) {
  return detail::PolyParser(s).parse();
}

inline IntPoly parse_intpoly(const std::string& s) {
  BiLaurent p = parse_bilaurent(s);
  IntPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.y != 0) throw ParseError("univariate polynomial may use only x", 0);
    if (e.x < 0) throw ParseError("univariate polynomial needs nonnegative exponents", 0);
    out = out + IntPoly::monomial(e.x, c);
  }
  return out;
}

// Descending graded-lex display.
inline std::string to_string(const BiLaurent& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::print_monomial(os, it->second, it->first.x, it->first.y, leading);
    leading = false;
  }
  return os.str();
}

inline std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool leading = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i) == 0) continue;
    detail::print_monomial(os, p.coeff(i), i, 0, leading);
    leading = false;
  }
  return os.str();
}

}  // namespace usv
