#pragma once

// Exact arithmetic in Q(zeta_N). Elements are canonical coefficient vectors
// of length phi(N) modulo Phi_N, so equality and zero tests are plain
// coefficient comparisons. Each modulus gets a cached context holding Phi_N
// and the reduction table of x^k mod Phi_N; the table also carries an int64
// fast path used by the brute-force enumeration.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "unitysieve/bilaurent.hpp"
#include "unitysieve/cyclotomic.hpp"
#include "unitysieve/dense_poly.hpp"

namespace usv {

class CycloContext {
 public:
  explicit CycloContext(long n) : n_(n) {
    if (n < 1) throw std::invalid_argument("CycloContext: N must be positive");
    phi_poly_ = cyclotomic_poly(n);
    phi_ = phi_poly_.degree();
    long need = std::max<long>(n, 2 * phi_ - 1);
    rows_.reserve(need);
    std::vector<mpz_class> cur(phi_, 0);
    cur[0] = 1;
    for (long k = 0; k < need; ++k) {
      rows_.push_back(cur);
      // cur <- x * cur mod Phi_N (Phi_N is monic)
      mpz_class top = cur[phi_ - 1];
      for (long i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (long i = 0; i < phi_; ++i) cur[i] -= top * phi_poly_.coeff(static_cast<int>(i));
    }
    build_fast_rows();
  }

  long modulus() const { return n_; }
  long degree() const { return phi_; }
  const IntPoly& minimal_poly() const { return phi_poly_; }

  // x^k mod Phi_N for 0 <= k < max(N, 2 phi - 1).
  const std::vector<mpz_class>& row(long k) const { return rows_.at(k); }

  bool has_fast_rows() const { return fast_ok_; }
  // int64 view of the first N rows; valid only when has_fast_rows().
  const std::vector<std::vector<std::int64_t>>& fast_rows() const { return fast_rows_; }

 private:
  void build_fast_rows() {
    fast_ok_ = true;
    fast_rows_.resize(n_);
    for (long k = 0; k < n_ && fast_ok_; ++k) {
      auto& fr = fast_rows_[k];
      fr.resize(phi_);
      for (long i = 0; i < phi_; ++i) {
        if (!rows_[k][i].fits_slong_p()) {
          fast_ok_ = false;
          break;
        }
        fr[i] = rows_[k][i].get_si();
      }
    }
    if (!fast_ok_) fast_rows_.clear();
  }

  long n_;
  long phi_;
  IntPoly phi_poly_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::vector<std::int64_t>> fast_rows_;
  bool fast_ok_ = false;
};

// Shared per-modulus cache; idempotent under concurrent first build.
inline std::shared_ptr<const CycloContext> cyclo_context(long n) {
  static std::map<long, std::shared_ptr<const CycloContext>> cache;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<const CycloContext>(n);
  std::lock_guard<std::mutex> lock(m);
  auto [it, inserted] = cache.emplace(n, ctx);
  return it->second;
}

class CycloElem {
 public:
  CycloElem() : n_(1), c_(1, 0) {}
  explicit CycloElem(long n) : n_(n), c_(cyclo_context(n)->degree(), 0) {}
  CycloElem(long n, std::vector<mpq_class> coeffs) : n_(n), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != cyclo_context(n)->degree())
      throw std::invalid_argument("CycloElem: coefficient vector has wrong length");
    canonicalize();
  }

  static CycloElem from_rational(long n, const mpq_class& v) {
    CycloElem e(n);
    e.c_[0] = v;
    e.c_[0].canonicalize();
    return e;
  }

  long modulus() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    check_same(a, b);
    CycloElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    check_same(a, b);
    CycloElem r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend CycloElem operator-(const CycloElem& a) {
    CycloElem r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    check_same(a, b);
    auto ctx = cyclo_context(a.n_);
    long phi = ctx->degree();
    std::vector<mpq_class> prod(2 * phi - 1, 0);
    for (long i = 0; i < phi; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < phi; ++j) {
        if (b.c_[j] == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    CycloElem r(a.n_);
    for (long i = 0; i < phi; ++i) r.c_[i] = prod[i];
    for (long d = phi; d < 2 * phi - 1; ++d) {
      if (prod[d] == 0) continue;
      const auto& row = ctx->row(d);
      for (long i = 0; i < phi; ++i)
        if (row[i] != 0) r.c_[i] += prod[d] * row[i];
    }
    return r;
  }
  friend CycloElem operator*(const CycloElem& a, const mpq_class& s) {
    CycloElem r = a;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  CycloElem inv() const;

  // zeta_N -> zeta_N^j, j coprime to N, extended linearly.
  CycloElem galois(long j) const {
    long jm = ((j % n_) + n_) % n_;
    if (std::gcd(jm, n_) != 1)
      throw std::invalid_argument("galois: exponent not coprime to modulus");
    auto ctx = cyclo_context(n_);
    CycloElem r(n_);
    for (long k = 0; k < ctx->degree(); ++k) {
      if (c_[k] == 0) continue;
      const auto& row = ctx->row((k * jm) % n_);
      for (long i = 0; i < ctx->degree(); ++i)
        if (row[i] != 0) r.c_[i] += c_[k] * row[i];
    }
    return r;
  }

  CycloElem conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

  // Same element represented in Q(zeta_M), N | M.
  CycloElem embed_into(long m) const {
    if (m % n_ != 0) throw std::invalid_argument("embed_into: modulus not a multiple");
    if (m == n_) return *this;
    auto ctx = cyclo_context(m);
    long step = m / n_;
    CycloElem r(m);
    for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
      if (c_[k] == 0) continue;
      const auto& row = ctx->row((k * step) % m);
      for (long i = 0; i < ctx->degree(); ++i)
        if (row[i] != 0) r.c_[i] += c_[k] * row[i];
    }
    return r;
  }

  // 2*Re and 2*Im/i as field elements: a + conj(a) and a - conj(a).
  CycloElem twice_real() const { return *this + conj(); }

  std::optional<mpq_class> as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return std::nullopt;
    return c_[0];
  }

  // If the element is zeta_N^k for some k, return k.
  std::optional<long> as_root_of_unity() const {
    auto ctx = cyclo_context(n_);
    for (long k = 0; k < n_; ++k) {
      const auto& row = ctx->row(k);
      bool eq = true;
      for (long i = 0; i < ctx->degree() && eq; ++i) eq = (c_[i] == row[i]);
      if (eq) return k;
    }
    return std::nullopt;
  }

  std::string str() const {
    std::ostringstream os;
    os << "Q(zeta_" << n_ << "):";
    bool any = false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      mpq_class a = c_[i];
      if (!any) {
        os << " ";
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (i == 0 || a != 1) {
        os << a.get_str();
        if (i > 0) os << "*";
      }
      if (i == 1) os << "z";
      if (i > 1) os << "z^" << i;
      any = true;
    }
    if (!any) os << " 0";
    return os.str();
  }

 private:
  static void check_same(const CycloElem& a, const CycloElem& b) {
    if (a.n_ != b.n_)
      throw std::invalid_argument("CycloElem: mixed moduli, embed_into first");
  }
  void canonicalize() {
    for (auto& x : c_) x.canonicalize();
  }

  long n_;
  std::vector<mpq_class> c_;
};

// zeta_N^k reduced modulo Phi_N, exponent reduced mod N first.
inline CycloElem root_of_unity(long n, long k) {
  auto ctx = cyclo_context(n);
  long km = ((k % n) + n) % n;
  const auto& row = ctx->row(km);
  std::vector<mpq_class> c(ctx->degree());
  for (long i = 0; i < ctx->degree(); ++i) c[i] = row[i];
  return CycloElem(n, std::move(c));
}

// ---- inverse via the extended Euclidean algorithm over Q[x] -------------

namespace detail {

using QPoly = DensePoly<mpq_class>;

inline std::pair<QPoly, QPoly> divmod_field(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  QPoly q, r = a;
  q.c.assign(std::max(0, a.degree() - b.degree() + 1), mpq_class(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    mpq_class t = r.lc() / b.lc();
    int k = r.degree() - b.degree();
    q.c[k] = t;
    r = r - b.shifted(k) * t;
  }
  q.trim();
  return {q, r};
}

}  // namespace detail

inline CycloElem CycloElem::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_N)");
  auto ctx = cyclo_context(n_);
  detail::QPoly a(std::vector<mpq_class>(c_.begin(), c_.end()));
  detail::QPoly m;
  for (int i = 0; i <= ctx->minimal_poly().degree(); ++i)
    m.c.push_back(mpq_class(ctx->minimal_poly().coeff(i)));
  m.trim();
  // extended Euclid: find u with u*a + v*m = gcd = const
  detail::QPoly r0 = m, r1 = a;
  detail::QPoly u0, u1 = detail::QPoly::one();  // coefficients of a
  while (!r1.is_zero() && r1.degree() > 0) {
    auto [q, r2] = detail::divmod_field(r0, r1);
    detail::QPoly u2 = u0 - q * u1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r1.is_zero()) throw std::domain_error("element not invertible (shares factor with Phi_N)");
  mpq_class scale = mpq_class(1) / r1.lc();
  detail::QPoly u = u1 * scale;
  std::vector<mpq_class> out(ctx->degree(), 0);
  for (int i = 0; i <= u.degree() && i < ctx->degree(); ++i) out[i] = u.coeff(i);
  return CycloElem(n_, std::move(out));
}

// Exact evaluation of a Laurent polynomial at field elements; negative
// exponents go through the field inverse.
inline CycloElem eval_bilaurent(const BiLaurent& p, const CycloElem& x, const CycloElem& y) {
  if (x.modulus() != y.modulus())
    throw std::invalid_argument("eval_bilaurent: mixed moduli");
  long n = x.modulus();
  auto power = [&](const CycloElem& base, int e) {
    CycloElem b = (e < 0) ? base.inv() : base;
    int k = e < 0 ? -e : e;
    CycloElem r = CycloElem::from_rational(n, 1);
    while (k > 0) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  };
  CycloElem acc(n);
  for (const auto& [e, c] : p.terms()) {
    CycloElem t = power(x, e.x) * power(y, e.y) * mpq_class(c);
    acc = acc + t;
  }
  return acc;
}

}  // namespace usv
