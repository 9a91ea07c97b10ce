#pragma once

// Elementary arithmetic functions: Euler phi, Moebius mu, Ramanujan sums in
// closed form, and the inversion from a fraction mu(M)/phi(M) back to the set
// of admissible moduli M. All arguments at desk scale (<= ~10^6), so trial
// division is enough.

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace usv {

// Rational value in lowest terms with positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }

  Fraction abs() const { return Fraction(num < 0 ? -num : num, den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Prime factorization by trial division, (prime, multiplicity) pairs.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  std::int64_t r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline int moebius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  int sign = 1;
  for (auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// mu(M)/phi(M) in lowest terms.
inline Fraction fraction_mu_phi(std::int64_t m) {
  return Fraction(moebius(m), euler_phi(m));
}

// c_N(k) = phi(N) mu(M) / phi(M) with M = N/gcd(k,N). The quotient is always
// an integer. k may be negative or exceed N; k = 0 is treated as gcd = N.
inline std::int64_t ramanujan_sum(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("ramanujan_sum: N must be positive");
  std::int64_t r = ((k % n) + n) % n;
  std::int64_t g = (r == 0) ? n : std::gcd(r, n);
  std::int64_t m = n / g;
  std::int64_t num = euler_phi(n) * moebius(m);
  std::int64_t den = euler_phi(m);
  if (num % den != 0) throw std::logic_error("ramanujan_sum: non-integral value");
  return num / den;
}

// c_N(k) by the divisor-sum definition, sum over d | gcd(N,k) of d mu(N/d).
// Independent of the closed form above; kept for cross-checking.
inline std::int64_t ramanujan_sum_direct(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("ramanujan_sum_direct: N must be positive");
  std::int64_t r = ((k % n) + n) % n;
  std::int64_t g = (r == 0) ? n : std::gcd(r, n);
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d <= g; ++d)
    if (g % d == 0) sum += d * moebius(n / d);
  return sum;
}

// All M with mu(M)/phi(M) = v. phi(M) >= sqrt(M/2) makes the scan over
// M <= 2 d^2 complete, d the denominator of v.
inline std::set<std::int64_t> moduli_for_fraction(const Fraction& v) {
  if (v.num == 0)
    throw std::invalid_argument("moduli_for_fraction: zero has infinitely many preimages");
  std::set<std::int64_t> out;
  std::int64_t bound = 2 * v.den * v.den;
  for (std::int64_t m = 1; m <= bound; ++m)
    if (fraction_mu_phi(m) == v) out.insert(m);
  return out;
}

inline std::int64_t lcm_set(const std::set<std::int64_t>& s) {
  if (s.empty()) throw std::invalid_argument("lcm_set: empty set");
  std::int64_t l = 1;
  for (std::int64_t v : s) l = std::lcm(l, v);
  return l;
}

}  // namespace usv
