#pragma once

// Dense polynomials over an exact coefficient ring, lowest degree first.
// Instantiated with mpz_class (univariate integer polynomials) and with
// DensePoly<mpz_class> itself (bivariate, as polynomials in y over Z[x]),
// which is the substrate for the subresultant-PRS resultant.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace usv {

template <class C>
struct DensePoly {
  std::vector<C> c;  // c[i] is the coefficient of degree i

  DensePoly() = default;
  explicit DensePoly(C c0) {
    c.push_back(std::move(c0));
    trim();
  }
  explicit DensePoly(std::vector<C> cs) : c(std::move(cs)) { trim(); }

  static DensePoly zero() { return DensePoly(); }
  static DensePoly one() { return DensePoly(C(1)); }
  // x^k
  static DensePoly monomial(int k, C coeff = C(1)) {
    DensePoly p;
    p.c.assign(k + 1, C(0));
    p.c[k] = std::move(coeff);
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == C(0)) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  const C& lc() const {
    if (c.empty()) throw std::logic_error("lc of zero polynomial");
    return c.back();
  }
  C coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return C(0);
    return c[i];
  }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c == b.c; }
  friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    DensePoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), C(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    DensePoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), C(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  friend DensePoly operator-(const DensePoly& a) {
    DensePoly r = a;
    for (auto& x : r.c) x = C(0) - x;
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    DensePoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend DensePoly operator*(const DensePoly& a, const C& s) {
    DensePoly r = a;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
  }

  DensePoly derivative() const {
    DensePoly r;
    for (std::size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * C(static_cast<long>(i)));
    r.trim();
    return r;
  }

  // Multiply by x^k.
  DensePoly shifted(int k) const {
    if (is_zero()) return DensePoly();
    DensePoly r;
    r.c.assign(c.size() + k, C(0));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }

  C eval(const C& x) const {
    C r(0);
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  }
};

template <class C>
DensePoly<C> pow(DensePoly<C> base, int e) {
  DensePoly<C> r = DensePoly<C>::one();
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// ---- coefficient-level exact helpers ------------------------------------

inline mpz_class exact_div_coeff(const mpz_class& a, const mpz_class& b) {
  if (b == 0) throw std::domain_error("exact division by zero");
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::domain_error("inexact coefficient division");
  return q;
}

inline mpz_class pow_coeff(const mpz_class& a, int e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

template <class C>
DensePoly<C> exact_div_coeff(const DensePoly<C>& a, const DensePoly<C>& b);

template <class C>
DensePoly<C> pow_coeff(const DensePoly<C>& a, int e) {
  return pow(a, e);
}

// Exact polynomial division (throws on nonzero remainder). Works over any
// ring: at each step the leading coefficient of the remainder must be
// divisible by lc(b).
template <class C>
std::pair<DensePoly<C>, DensePoly<C>> divmod_exact_steps(const DensePoly<C>& a,
                                                         const DensePoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  DensePoly<C> q, r = a;
  q.c.assign(std::max(0, a.degree() - b.degree() + 1), C(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    C t = exact_div_coeff(r.lc(), b.lc());
    int k = r.degree() - b.degree();
    q.c[k] = t;
    r = r - b.shifted(k) * t;
  }
  q.trim();
  return {q, r};
}

template <class C>
DensePoly<C> exact_div(const DensePoly<C>& a, const DensePoly<C>& b) {
  auto [q, r] = divmod_exact_steps(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <class C>
DensePoly<C> exact_div_coeff(const DensePoly<C>& a, const DensePoly<C>& b) {
  return exact_div(a, b);
}

// Scalar exact division of every coefficient.
template <class C>
DensePoly<C> exact_div_scalar(const DensePoly<C>& a, const C& s) {
  DensePoly<C> r = a;
  for (auto& x : r.c) x = exact_div_coeff(x, s);
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
DensePoly<C> pseudo_rem(DensePoly<C> a, const DensePoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
  int e = a.degree() - b.degree() + 1;
  if (e < 0) e = 0;
  const C& d = b.lc();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int k = a.degree() - b.degree();
    C t = a.lc();
    a = a * d - b.shifted(k) * t;
    --e;
  }
  // keep the exact power lc(b)^(deg a - deg b + 1) even if degree dropped fast
  while (e-- > 0) a = a * d;
  return a;
}

// ---- univariate integer polynomials -------------------------------------

using IntPoly = DensePoly<mpz_class>;

inline mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& x : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // 0 for the zero polynomial
}

// Content-free part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.lc() < 0) g = -g;
  return exact_div_scalar(p, g);
}

// gcd in Z[x] via the primitive PRS; result primitive with positive lc.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  mpz_class ca = content(a), cb = content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a) * cg;
}

// p / gcd(p, p'), primitive, positive leading coefficient.
inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of zero");
  IntPoly pp = primitive_part(p);
  IntPoly g = poly_gcd(pp, pp.derivative());
  return primitive_part(exact_div(pp, g));
}

// ---- resultant by the subresultant PRS ----------------------------------

// Res(a, b) with respect to the polynomial variable, coefficients in any
// exact ring C. The Sylvester-determinant route lives in the test suite as
// the independent oracle.
template <class C>
C resultant(DensePoly<C> a, DensePoly<C> b) {
  if (a.is_zero() || b.is_zero()) return C(0);
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    C r = pow_coeff(b.lc(), a.degree());
    return r;  // sign factor is + since one degree is even (0)
  }
  C g(1), h(1);
  while (true) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    DensePoly<C> rem = pseudo_rem(a, b);
    a = std::move(b);
    C divisor = g * pow_coeff(h, delta);
    if (rem.is_zero()) return C(0);  // common factor: degenerate resultant
    b = exact_div_scalar(rem, divisor);
    g = a.lc();
    if (delta > 0) h = exact_div_coeff(pow_coeff(g, delta), pow_coeff(h, delta - 1));
    if (b.degree() <= 0) break;
  }
  if (b.is_zero()) return C(0);
  int d = a.degree();
  C res = exact_div_coeff(pow_coeff(b.lc(), d), pow_coeff(h, d - 1));
  if (negate) res = C(0) - res;
  return res;
}

}  // namespace usv
