#pragma once

// Cyclotomic polynomials Phi_n and detection of cyclotomic divisors of an
// integer polynomial.

#include <map>
#include <mutex>
#include <set>

#include "unitysieve/dense_poly.hpp"
#include "unitysieve/numtheory.hpp"

namespace usv {

namespace detail {
inline std::map<long, IntPoly>& cyclo_cache() {
  static std::map<long, IntPoly> cache;
  return cache;
}
inline std::mutex& cyclo_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

// Phi_n, by iterated exact division of x^n - 1 by Phi_d over proper
// divisors d. Divisors are monic, so all divisions stay in Z[x].
inline IntPoly cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  {
    std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
    auto it = detail::cyclo_cache().find(n);
    if (it != detail::cyclo_cache().end()) return it->second;
  }
  IntPoly num = IntPoly::monomial(static_cast<int>(n)) - IntPoly::one();
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = exact_div(num, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(detail::cyclo_mutex());
  detail::cyclo_cache().emplace(n, num);
  return num;
}

// Remainder of a by a monic divisor, staying in Z[x].
inline IntPoly rem_monic(IntPoly a, const IntPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    a = a - b.shifted(a.degree() - b.degree()) * a.lc();
  }
  return a;
}

inline bool divisible_by(const IntPoly& a, const IntPoly& monic_b) {
  return rem_monic(a, monic_b).is_zero();
}

// { n : Phi_n | F }. Candidates are bounded by phi(n) <= deg F, hence
// n <= 2 (deg F)^2 since phi(n) >= sqrt(n/2).
inline std::set<long> cyclotomic_divisors(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cyclotomic_divisors: zero polynomial");
  std::set<long> out;
  long d = f.degree();
  for (long n = 1; n <= 2 * d * d; ++n) {
    if (euler_phi(n) > d) continue;
    if (divisible_by(f, cyclotomic_poly(n))) out.insert(n);
  }
  return out;
}

}  // namespace usv
