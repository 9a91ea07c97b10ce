#pragma once

// Sparse bivariate Laurent polynomials with integer coefficients. Exponents
// may be negative; no zero coefficients are stored. Term order is graded
// lexicographic, which fixes the display order.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "unitysieve/dense_poly.hpp"

namespace usv {

struct Exps {
  int x = 0;
  int y = 0;
  friend bool operator==(const Exps& a, const Exps& b) { return a.x == b.x && a.y == b.y; }
};

struct GradedLex {
  bool operator()(const Exps& a, const Exps& b) const {
    long da = static_cast<long>(a.x) + a.y, db = static_cast<long>(b.x) + b.y;
    if (da != db) return da < db;
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

class BiLaurent {
 public:
  using TermMap = std::map<Exps, mpz_class, GradedLex>;

  BiLaurent() = default;
  explicit BiLaurent(long c) {
    if (c != 0) terms_[{0, 0}] = c;
  }
  static BiLaurent monomial(int i, int j, mpz_class c = 1) {
    BiLaurent p;
    if (c != 0) p.terms_[{i, j}] = std::move(c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
      terms_[{i, j}] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const BiLaurent& a, const BiLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BiLaurent& a, const BiLaurent& b) { return !(a == b); }

  friend BiLaurent operator+(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.x, e.y, c);
    return r;
  }
  friend BiLaurent operator-(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e.x, e.y, -c);
    return r;
  }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
    BiLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea.x + eb.x, ea.y + eb.y, ca * cb);
    return r;
  }

  BiLaurent pow(int e) const {
    if (e < 0) {
      if (terms_.size() != 1) throw std::domain_error("negative power of a non-monomial");
      const auto& [ex, c] = *terms_.begin();
      if (c != 1 && c != -1) throw std::domain_error("negative power of a non-unit monomial");
      mpz_class cc = (e % 2 == 0) ? mpz_class(1) : c;
      return monomial(ex.x * e, ex.y * e, cc);
    }
    BiLaurent r(1), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  BiLaurent swap_vars() const {
    BiLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.y, e.x}] = c;
    return r;
  }

  bool is_symmetric() const { return swap_vars() == *this; }

  // Substitute x -> sx, y -> sy. Negative exponents require the substituted
  // value to be a unit monomial.
  BiLaurent substitute(const BiLaurent& sx, const BiLaurent& sy) const {
    BiLaurent r;
    for (const auto& [e, c] : terms_) {
      BiLaurent t = monomial(0, 0, c) * sx.pow(e.x) * sy.pow(e.y);
      r = r + t;
    }
    return r;
  }

  int min_x_exp() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::min(m, e.x);
    return m;
  }
  int min_y_exp() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::min(m, e.y);
    return m;
  }

  // Multiply by the minimal monomial x^a y^b making all exponents
  // nonnegative. On the unit torus this changes no solutions.
  BiLaurent normalized_nonneg() const {
    int a = -min_x_exp(), b = -min_y_exp();
    if (a == 0 && b == 0) return *this;
    BiLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.x + a, e.y + b}] = c;
    return r;
  }

  int y_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.y);
    return d;
  }

  // As a polynomial in y over Z[x]. Requires nonnegative exponents.
  DensePoly<IntPoly> as_y_poly() const {
    if (min_x_exp() < 0 || min_y_exp() < 0)
      throw std::domain_error("as_y_poly: negative exponents, normalize first");
    DensePoly<IntPoly> p;
    p.c.assign(y_degree() + 1, IntPoly());
    for (const auto& [e, c] : terms_)
      p.c[e.y] = p.c[e.y] + IntPoly::monomial(e.x, c);
    p.trim();
    return p;
  }

 private:
  TermMap terms_;
};

}  // namespace usv
