#pragma once

// Certified complex embedding of cyclotomic field elements. A ComplexBall is
// a high-precision center plus an error radius that provably contains the
// exact value under zeta_N -> exp(2*pi*i/N). Precision doubles per round
// until the requested radius is met. Sign predicates first test the relevant
// part for exact zero in the field, so refinement always terminates.

#include <mpfr.h>

#include <cmath>
#include <optional>
#include <stdexcept>

#include "unitysieve/cyclofield.hpp"

namespace usv {

// Minimal RAII wrapper over mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

struct ComplexBall {
  Real re, im;
  double radius = 0.0;

  double re_d() const { return re.to_double(); }
  double im_d() const { return im.to_double(); }
  double abs_d() const { return std::hypot(re_d(), im_d()); }
};

// Ball containing the exact complex value of `a`, radius <= target_radius.
inline ComplexBall embed_numeric(const CycloElem& a, double target_radius) {
  if (target_radius <= 0) throw std::invalid_argument("embed_numeric: radius must be positive");
  long n = a.modulus();
  double coeff_mass = 0.0;
  std::size_t nterms = 0;
  for (const auto& c : a.coeffs()) {
    if (c == 0) continue;
    coeff_mass += std::fabs(mpq_get_d(c.get_mpq_t()));
    ++nterms;
  }
  if (nterms == 0) {
    ComplexBall b{Real(64), Real(64), 0.0};
    return b;
  }
  for (mpfr_prec_t prec = 64; prec <= (1L << 22); prec *= 2) {
    Real re(prec), im(prec);
    Real pi(prec), angle(prec), t(prec), cv(prec), sv(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    const auto& cs = a.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k] == 0) continue;
      // angle = 2*pi*k/N
      mpfr_mul_si(angle.get(), pi.get(), 2 * static_cast<long>(k), MPFR_RNDN);
      mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
      mpfr_cos(cv.get(), angle.get(), MPFR_RNDN);
      mpfr_sin(sv.get(), angle.get(), MPFR_RNDN);
      mpfr_set_q(t.get(), cs[k].get_mpq_t(), MPFR_RNDN);
      mpfr_fma(re.get(), t.get(), cv.get(), re.get(), MPFR_RNDN);
      mpfr_fma(im.get(), t.get(), sv.get(), im.get(), MPFR_RNDN);
    }
    // Crude but safe forward bound: every term contributes a handful of
    // correctly rounded operations at precision prec.
    double err = (coeff_mass + 1.0) * static_cast<double>(8 * nterms + 8) *
                 std::ldexp(1.0, static_cast<int>(-prec + 4));
    if (err <= target_radius) return ComplexBall{re, im, err};
  }
  throw std::runtime_error("embed_numeric: requested radius below precision ceiling");
}

enum class SignKind { re_positive, im_positive, re_zero, im_zero };

inline bool sign_predicate(SignKind kind, const CycloElem& a) {
  CycloElem re2 = a + a.conj();        // 2 Re(a), a field element
  CycloElem im2i = a - a.conj();       // 2i Im(a)
  if (kind == SignKind::re_zero) return re2.is_zero();
  if (kind == SignKind::im_zero) return im2i.is_zero();
  if (kind == SignKind::re_positive && re2.is_zero()) return false;
  if (kind == SignKind::im_positive && im2i.is_zero()) return false;
  // Fast path for pure roots of unity: exact quadrant test on the exponent.
  if (auto k = a.as_root_of_unity()) {
    long n = a.modulus();
    long r = *k % n;
    if (kind == SignKind::re_positive) return 4 * r < n || 4 * r > 3 * n;
    return 0 < r && 2 * r < n;
  }
  for (double target = 1e-6;; target *= 1e-6) {
    ComplexBall b = embed_numeric(a, target);
    double v = (kind == SignKind::re_positive) ? b.re_d() : b.im_d();
    // to_double adds at most a few ulps on top of the ball radius
    double slack = 2 * b.radius + 1e-15 * std::fabs(v);
    if (std::fabs(v) > slack) return v > 0;
    if (target < 1e-280)
      throw std::runtime_error("sign_predicate: failed to separate from zero");
  }
}

}  // namespace usv
