#pragma once

// The proof engine: auxiliary-system generation, resultant elimination,
// cyclotomic scanning, brute-force enumeration over roots of unity,
// classification, Ramanujan auditing, vanishing-sum decomposition, the
// positivity filter, and the alternative (triple-system) route.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitysieve/bilaurent.hpp"
#include "unitysieve/cyclofield.hpp"
#include "unitysieve/cyclotomic.hpp"
#include "unitysieve/dense_poly.hpp"
#include "unitysieve/numtheory.hpp"
#include "unitysieve/parallel.hpp"

namespace usv {

// f(x,y) = 1 + x + y + x^2 y^3 + x^3 y^2 + x^3 y^3
inline BiLaurent sharygin_polynomial() {
  BiLaurent f(1);
  f.add_term(1, 0, 1);
  f.add_term(0, 1, 1);
  f.add_term(2, 3, 1);
  f.add_term(3, 2, 1);
  f.add_term(3, 3, 1);
  return f;
}

// One auxiliary system: f = 0, g_i^l = 1.
struct AuxSystem {
  int monomial_index;  // 1-based into the monomial list
  int exponent;        // l
};

enum class Route { main, alternative };

struct PivotConfig {
  std::vector<Fraction> values;
  Route route = Route::main;
};

enum class SolutionClass { S0, S1, S2, S3, Generic };

inline std::string class_name(SolutionClass c) {
  switch (c) {
    case SolutionClass::S0: return "S0";
    case SolutionClass::S1: return "S1";
    case SolutionClass::S2: return "S2";
    case SolutionClass::S3: return "S3";
    default: return "generic";
  }
}

struct Decomposition {
  std::string type;  // antipodal_pairs | triple_orbits | mixed | unstructured
  std::vector<std::vector<long>> blocks;  // exponents mod N, zero-sum each
};

struct SolutionRecord {
  long a = 0, b = 0, n = 0;
  SolutionClass cls = SolutionClass::Generic;
  std::vector<long> k_vector;
  std::vector<Fraction> fractions;
  Decomposition decomposition;
  int pattern_index = -1;  // 1-based index into the audited identity catalog
};

struct SystemReport {
  int i = 0, l = 0, deg_f = 0;
  std::vector<long> cyclotomic_divisors;
};

struct ScanResult {
  std::vector<SystemReport> systems;
  std::set<long> index_set;
  long n = 0;
};

struct TripleSystemReport {
  int i1, i2, i3, l;
  long modulus;
  std::size_t solution_count;
};

// ---- monomials and pivot -------------------------------------------------

// Non-constant monomials of f in system order. For the six-term polynomial
// this is the fixed order x, y, x^2 y^3, x^3 y^2, x^3 y^3, which also fixes
// the k-vector layout; generic inputs use graded-lex order.
inline std::vector<Exps> system_monomials(const BiLaurent& f) {
  std::vector<Exps> mons;
  for (const auto& [e, c] : f.terms())
    if (!(e.x == 0 && e.y == 0)) mons.push_back(e);
  if (f == sharygin_polynomial())
    return {{1, 0}, {0, 1}, {2, 3}, {3, 2}, {3, 3}};
  return mons;  // map iteration order is already graded lex
}

// True iff omitting the pivot values forces 1 + sum > 0: every realizable
// negative value of mu(M)/phi(M) outside V satisfies m * |v| < 1. The scan
// over M <= 2 (m+1)^2 is complete since phi(M) >= sqrt(M/2).
inline bool validate_pivot(int m, const std::vector<Fraction>& v) {
  if (m < 1) throw std::invalid_argument("validate_pivot: m must be positive");
  std::int64_t bound = 2LL * (m + 1) * (m + 1);
  for (std::int64_t mm = 1; mm <= bound; ++mm) {
    Fraction val = fraction_mu_phi(mm);
    if (!(val < Fraction(0))) continue;
    if (std::find(v.begin(), v.end(), val) != v.end()) continue;
    // violation possible iff m/denominator >= 1 (numerator is -1 here)
    if (m * (-val.num) >= val.den) return false;
  }
  return true;
}

inline PivotConfig pivot_for_route(Route r) {
  if (r == Route::main) return {{Fraction(-1), Fraction(-1, 2), Fraction(-1, 4)}, r};
  return {{Fraction(-1), Fraction(-1, 2)}, r};
}

inline std::vector<AuxSystem> generate_systems(const PivotConfig& cfg, int m) {
  std::set<std::int64_t> moduli;
  for (const auto& v : cfg.values) {
    auto ms = moduli_for_fraction(v);
    moduli.insert(ms.begin(), ms.end());
  }
  std::vector<AuxSystem> out;
  for (int i = 1; i <= m; ++i)
    for (auto l : moduli) out.push_back({i, static_cast<int>(l)});
  return out;
}

// ---- elimination ---------------------------------------------------------

struct ResultantDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Res_y of two Laurent polynomials after clearing negative exponents.
// A y-constant second argument G follows the Sylvester convention
// Res_y(f, G) = G^{deg_y f}.
inline IntPoly resultant_wrt_y(const BiLaurent& f, const BiLaurent& g) {
  BiLaurent fn = f.normalized_nonneg();
  BiLaurent gn = g.normalized_nonneg();
  auto fy = fn.as_y_poly();
  auto gy = gn.as_y_poly();
  IntPoly res;
  if (gy.degree() == 0) {
    res = pow(gy.coeff(0), fy.degree());
  } else if (fy.degree() == 0) {
    res = pow(fy.coeff(0), gy.degree());
  } else {
    res = resultant(fy, gy);
  }
  if (res.is_zero())
    throw ResultantDegenerate("resultant vanishes identically: common factor in y");
  return res;
}

// F(x) = squarefree_part(primitive_part(Res_y(f, g_i^l - 1))).
inline IntPoly eliminate(const BiLaurent& f, const Exps& g, int l) {
  BiLaurent constraint = BiLaurent::monomial(g.x, g.y).pow(l) - BiLaurent(1);
  IntPoly res = resultant_wrt_y(f, constraint);
  return squarefree_part(primitive_part(res));
}

// Union of cyclotomic divisors over all systems and the resulting modulus.
// When `both_sides` is set (asymmetric input), the y-side resultant is
// scanned as well; for the symmetric six-term polynomial the x-side
// suffices.
inline ScanResult scan_systems(const BiLaurent& f, const std::vector<Exps>& mons,
                               const std::vector<AuxSystem>& systems, bool both_sides,
                               unsigned jobs) {
  if (systems.empty()) throw std::invalid_argument("scan_systems: no systems");
  ScanResult out;
  out.systems.resize(systems.size());
  BiLaurent f_swapped = f.swap_vars();
  std::mutex merge_mutex;
  parallel_for(systems.size(), jobs, [&](std::size_t idx) {
    const AuxSystem& sys = systems[idx];
    const Exps& g = mons.at(sys.monomial_index - 1);
    IntPoly fx = eliminate(f, g, sys.exponent);
    std::set<long> divs = cyclotomic_divisors(fx);
    if (both_sides) {
      IntPoly fy = eliminate(f_swapped, Exps{g.y, g.x}, sys.exponent);
      auto d2 = cyclotomic_divisors(fy);
      divs.insert(d2.begin(), d2.end());
    }
    SystemReport rep;
    rep.i = sys.monomial_index;
    rep.l = sys.exponent;
    rep.deg_f = fx.degree();
    rep.cyclotomic_divisors.assign(divs.begin(), divs.end());
    std::lock_guard<std::mutex> lock(merge_mutex);
    out.systems[idx] = std::move(rep);
  });
  for (const auto& rep : out.systems)
    out.index_set.insert(rep.cyclotomic_divisors.begin(), rep.cyclotomic_divisors.end());
  std::set<std::int64_t> as64(out.index_set.begin(), out.index_set.end());
  out.n = lcm_set(as64);
  if (out.n > 100000)
    throw std::runtime_error("scan_systems: modulus " + std::to_string(out.n) +
                             " exceeds the enumeration guard of 100000");
  return out;
}

// ---- enumeration ---------------------------------------------------------

namespace detail {

inline long reduce_mod(long v, long n) { return ((v % n) + n) % n; }

// Exact re-verification of one candidate with big-integer rows.
inline bool verify_zero_sum(const CycloContext& ctx, const std::vector<Exps>& mons,
                            long a, long b) {
  long n = ctx.modulus();
  std::vector<mpz_class> acc = ctx.row(0);
  for (const auto& m : mons) {
    const auto& row = ctx.row(reduce_mod(m.x * a + m.y * b, n));
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += row[i];
  }
  for (const auto& v : acc)
    if (v != 0) return false;
  return true;
}

}  // namespace detail

// All (a,b) in [0,N)^2 with f(zeta^a, zeta^b) = 0, lexicographic order.
// Requires f of the validated shape (constant term 1, unit coefficients).
inline std::vector<std::pair<long, long>> enumerate_pairs(const BiLaurent& f, long n,
                                                          unsigned jobs) {
  if (n < 1) throw std::invalid_argument("enumerate_pairs: N must be positive");
  auto ctx = cyclo_context(n);
  auto mons = system_monomials(f);
  long phi = ctx->degree();
  std::vector<std::vector<std::pair<long, long>>> per_row(n);
  if (ctx->has_fast_rows()) {
    const auto& rows = ctx->fast_rows();
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t ai) {
      long a = static_cast<long>(ai);
      std::vector<std::int64_t> acc(phi);
      for (long b = 0; b < n; ++b) {
        acc.assign(rows[0].begin(), rows[0].end());
        for (const auto& m : mons) {
          const auto& row = rows[detail::reduce_mod(m.x * a + m.y * b, n)];
          for (long i = 0; i < phi; ++i) acc[i] += row[i];
        }
        bool zero = std::all_of(acc.begin(), acc.end(), [](std::int64_t v) { return v == 0; });
        if (zero && detail::verify_zero_sum(*ctx, mons, a, b)) per_row[a].emplace_back(a, b);
      }
    });
  } else {
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t ai) {
      long a = static_cast<long>(ai);
      for (long b = 0; b < n; ++b)
        if (detail::verify_zero_sum(*ctx, mons, a, b)) per_row[a].emplace_back(a, b);
    });
  }
  std::vector<std::pair<long, long>> out;
  for (auto& r : per_row) out.insert(out.end(), r.begin(), r.end());
  return out;
}

// ---- classification (six-term polynomial, modulus 210) ------------------

// The thirty solutions as exponent pairs mod 210, grouped by class. Built
// from alpha = zeta^70, beta = zeta^42, gamma = zeta^30, -1 = zeta^105.
inline const std::map<std::pair<long, long>, SolutionClass>& solution_classes() {
  static const std::map<std::pair<long, long>, SolutionClass> table = [] {
    std::map<std::pair<long, long>, SolutionClass> t;
    const long alpha = 70, beta = 42, gamma = 30, minus = 105;
    auto put = [&](long a, long b, SolutionClass c) {
      t[{detail::reduce_mod(a, 210), detail::reduce_mod(b, 210)}] = c;
    };
    put(0, minus, SolutionClass::S0);
    put(minus, 0, SolutionClass::S0);
    for (long i = 1; i <= 2; ++i)
      for (long j = 1; j <= 2; ++j) put(i * alpha, j * alpha, SolutionClass::S1);
    for (long i = 1; i <= 2; ++i) {
      put(i * alpha, minus + i * alpha, SolutionClass::S1);
      put(minus + i * alpha, i * alpha, SolutionClass::S1);
    }
    for (long j = 1; j <= 4; ++j) {
      put(j * beta + alpha, j * beta + 2 * alpha, SolutionClass::S2);
      put(j * beta + 2 * alpha, j * beta + alpha, SolutionClass::S2);
    }
    const std::pair<long, long> gamma_pairs[] = {{1, 4}, {2, 1}, {3, 5},
                                                 {4, 2}, {5, 6}, {6, 3}};
    for (auto [l, m] : gamma_pairs) {
      put(l * gamma, minus + m * gamma, SolutionClass::S3);
      put(minus + m * gamma, l * gamma, SolutionClass::S3);
    }
    return t;
  }();
  return table;
}

// Normalize a solution at a multiple (or compatible modulus) of 210 to the
// 210 grid and look up its class.
inline SolutionClass classify(long a, long b, long n) {
  if ((a * 210) % n != 0 || (b * 210) % n != 0)
    throw std::runtime_error("classify: solution does not live on the 210 grid");
  long a210 = detail::reduce_mod(a * 210 / n, 210);
  long b210 = detail::reduce_mod(b * 210 / n, 210);
  auto it = solution_classes().find({a210, b210});
  if (it == solution_classes().end())
    throw std::runtime_error("classify: unclassifiable solution (" + std::to_string(a) +
                             "," + std::to_string(b) + ") mod " + std::to_string(n));
  return it->second;
}

// ---- Ramanujan audit -----------------------------------------------------

// The complete catalog of realized fraction identities, in k-vector order.
inline const std::vector<std::vector<Fraction>>& fraction_identity_catalog() {
  static const std::vector<std::vector<Fraction>> patterns = {
      {{1}, {-1}, {-1}, {1}, {-1}},
      {{-1}, {1}, {1}, {-1}, {-1}},
      {{1, 2}, {-1, 2}, {-1, 2}, {1, 2}, {-1}},
      {{-1, 2}, {1, 2}, {1, 2}, {-1, 2}, {-1}},
      {{1, 6}, {-1, 6}, {-1, 6}, {-1}, {1, 6}},
      {{-1, 6}, {1, 6}, {-1}, {-1, 6}, {1, 6}},
      {{-1, 2}, {-1, 2}, {-1, 2}, {-1, 2}, {1}},
      {{1, 8}, {1, 8}, {-1, 2}, {-1, 2}, {-1, 4}},
  };
  return patterns;
}

// Checks the integer identity phi(N) + sum c_N(k_i) = 0, the fraction form
// 1 + sum mu(M_i)/phi(M_i) = 0, and (for the six-term polynomial) matches
// the fraction vector against the catalog. Returns the 1-based pattern
// index, or -1 for generic inputs.
inline int ramanujan_audit(const std::vector<long>& k_vector,
                           const std::vector<Fraction>& fractions, long n,
                           bool require_catalog) {
  std::int64_t integer_sum = euler_phi(n);
  for (long k : k_vector) integer_sum += ramanujan_sum(n, k);
  if (integer_sum != 0)
    throw std::runtime_error("ramanujan_audit: integer identity failed");
  Fraction total(1);
  for (const auto& fr : fractions) total = total + fr;
  if (total != Fraction(0))
    throw std::runtime_error("ramanujan_audit: fraction identity failed");
  if (!require_catalog) return -1;
  const auto& catalog = fraction_identity_catalog();
  for (std::size_t p = 0; p < catalog.size(); ++p)
    if (catalog[p] == fractions) return static_cast<int>(p) + 1;
  throw std::runtime_error("ramanujan_audit: fraction vector not in the catalog");
}

// ---- vanishing-sum decomposition ----------------------------------------

namespace detail {

inline bool decompose_rec(const std::vector<long>& exps, std::vector<bool>& used, long n,
                          std::vector<std::vector<long>>& blocks) {
  std::size_t first = 0;
  while (first < exps.size() && used[first]) ++first;
  if (first == exps.size()) return true;
  used[first] = true;
  // antipodal partner first
  if (n % 2 == 0) {
    long want = (exps[first] + n / 2) % n;
    for (std::size_t j = first + 1; j < exps.size(); ++j) {
      if (used[j] || exps[j] != want) continue;
      used[j] = true;
      blocks.push_back({exps[first], exps[j]});
      if (decompose_rec(exps, used, n, blocks)) return true;
      blocks.pop_back();
      used[j] = false;
    }
  }
  // then a full scaled cube-root orbit {e, e + N/3, e + 2N/3}
  if (n % 3 == 0) {
    long w1 = (exps[first] + n / 3) % n, w2 = (exps[first] + 2 * n / 3) % n;
    for (std::size_t j = first + 1; j < exps.size(); ++j) {
      if (used[j] || exps[j] != w1) continue;
      for (std::size_t k = first + 1; k < exps.size(); ++k) {
        if (used[k] || k == j || exps[k] != w2) continue;
        used[j] = used[k] = true;
        blocks.push_back({exps[first], exps[j], exps[k]});
        if (decompose_rec(exps, used, n, blocks)) return true;
        blocks.pop_back();
        used[j] = used[k] = false;
      }
    }
  }
  used[first] = false;
  return false;
}

}  // namespace detail

// Partition of the term exponents {0, k_1, ..., k_m} into zero-sum blocks:
// antipodal pairs preferred, then scaled cube-root orbits.
inline Decomposition vanishing_sum_decompose(const std::vector<long>& k_vector, long n) {
  std::vector<long> exps;
  exps.push_back(0);
  for (long k : k_vector) exps.push_back(detail::reduce_mod(k, n));
  std::sort(exps.begin(), exps.end());
  std::vector<bool> used(exps.size(), false);
  Decomposition d;
  if (!detail::decompose_rec(exps, used, n, d.blocks)) {
    d.type = "unstructured";
    d.blocks.clear();
    return d;
  }
  bool pairs = false, triples = false;
  for (const auto& blk : d.blocks) (blk.size() == 2 ? pairs : triples) = true;
  d.type = pairs && triples ? "mixed" : (pairs ? "antipodal_pairs" : "triple_orbits");
  return d;
}

// The cycle structure linking the two antipodal gamma-pairs of an S3
// decomposition: 1->4->2->1 and 3->5->6->3 on gamma exponents.
inline long s3_exponent_permutation(long l) {
  static const long sigma[7] = {0, 4, 1, 5, 2, 6, 3};  // sigma = (142)(356)
  return sigma[l];
}

// Verifies the decomposition shape demanded by the solution's class.
inline void check_decomposition_for_class(const Decomposition& d, SolutionClass cls,
                                          long n) {
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("vanishing-sum decomposition mismatch: " + why);
  };
  switch (cls) {
    case SolutionClass::S0:
      if (d.type != "antipodal_pairs" || d.blocks.size() != 3) fail("S0 expects three pairs");
      break;
    case SolutionClass::S1:
      if (d.type != "antipodal_pairs" && d.type != "triple_orbits")
        fail("S1 expects pure pairs or pure orbits");
      break;
    case SolutionClass::S2:
      if (d.type != "triple_orbits" || d.blocks.size() != 2) fail("S2 expects two orbits");
      break;
    case SolutionClass::S3: {
      if (d.type != "antipodal_pairs" || d.blocks.size() != 3) fail("S3 expects three pairs");
      // one pair is {1,-1}; the other two are spanned by +-gamma^k, with the
      // two k linked by the permutation (142)(356)
      long gamma = n / 7, half = n / 2;
      std::vector<long> gexp;
      for (const auto& blk : d.blocks) {
        long lo = std::min(blk[0], blk[1]);
        if (lo == 0) continue;  // the {1,-1} pair
        long k = -1;
        if (lo % gamma == 0)
          k = (lo / gamma) % 7;  // pair spanned by gamma^k
        else if ((lo + half) % n % gamma == 0)
          k = ((lo + half) % n / gamma) % 7;  // pair spanned by -gamma^k
        if (k <= 0) fail("S3 pair not on the gamma lattice");
        gexp.push_back(k);
      }
      if (gexp.size() != 2) fail("S3 expects one rational pair and two gamma pairs");
      if (s3_exponent_permutation(gexp[0]) != gexp[1] &&
          s3_exponent_permutation(gexp[1]) != gexp[0])
        fail("S3 gamma pairs not linked by the exponent permutation");
      break;
    }
    default:
      break;
  }
}

// ---- record assembly -----------------------------------------------------

inline SolutionRecord make_record(const std::vector<Exps>& mons, long a, long b, long n,
                                  bool sharygin_shape) {
  SolutionRecord rec;
  rec.a = a;
  rec.b = b;
  rec.n = n;
  for (const auto& m : mons)
    rec.k_vector.push_back(detail::reduce_mod(m.x * a + m.y * b, n));
  for (long k : rec.k_vector) {
    long g = (k == 0) ? n : std::gcd(k, n);
    rec.fractions.push_back(fraction_mu_phi(n / g));
  }
  rec.cls = sharygin_shape ? classify(a, b, n) : SolutionClass::Generic;
  rec.pattern_index = ramanujan_audit(rec.k_vector, rec.fractions, n, sharygin_shape);
  rec.decomposition = vanishing_sum_decompose(rec.k_vector, n);
  if (sharygin_shape) {
    check_decomposition_for_class(rec.decomposition, rec.cls, n);
  } else if (rec.decomposition.type == "unstructured") {
    // acceptable for generic inputs; the six-term polynomial always
    // decomposes
  }
  return rec;
}

// Strict positivity of real and imaginary parts of zeta^a, zeta^b and
// zeta^(a+b): each exponent must lie in the open first-quadrant range
// (0, N/4), i.e. 0 < 4r < N.
inline std::vector<SolutionRecord> sharygin_filter(const std::vector<SolutionRecord>& sols) {
  std::vector<SolutionRecord> out;
  for (const auto& s : sols) {
    bool keep = true;
    for (long r : {s.a % s.n, s.b % s.n, (s.a + s.b) % s.n})
      if (!(r > 0 && 4 * r < s.n)) keep = false;
    if (keep) out.push_back(s);
  }
  return out;
}

// ---- triple systems (alternative route) ---------------------------------

// Solves f = 0, g_{i1}^l = g_{i2}^l = g_{i3}^l = 1 by exponent-lattice
// reduction: two constraints with nonzero exponent determinant force
// x^(l det) = y^(l det) = 1, then exhaustive enumeration checks f and all
// three constraints.
inline TripleSystemReport solve_triple_system(const BiLaurent& f,
                                              const std::vector<Exps>& mons, int i1,
                                              int i2, int i3, int l, unsigned jobs) {
  const Exps idx[3] = {mons.at(i1 - 1), mons.at(i2 - 1), mons.at(i3 - 1)};
  long best_det = 0;
  for (int p = 0; p < 3 && best_det == 0; ++p)
    for (int q = p + 1; q < 3; ++q) {
      long det = static_cast<long>(idx[p].x) * idx[q].y -
                 static_cast<long>(idx[p].y) * idx[q].x;
      det = det < 0 ? -det : det;
      if (det != 0 && (best_det == 0 || det < best_det)) best_det = det;
    }
  long modulus;
  if (best_det != 0) {
    modulus = l * best_det;
  } else {
    // all exponent vectors parallel: fall back to single-constraint
    // elimination on both variables
    std::set<std::int64_t> divs;
    auto dx = cyclotomic_divisors(eliminate(f, idx[0], l));
    auto dy = cyclotomic_divisors(eliminate(f.swap_vars(), Exps{idx[0].y, idx[0].x}, l));
    divs.insert(dx.begin(), dx.end());
    divs.insert(dy.begin(), dy.end());
    modulus = divs.empty() ? 1 : lcm_set(divs);
  }
  auto candidates = enumerate_pairs(f, modulus, jobs);
  std::size_t count = 0;
  for (auto [a, b] : candidates) {
    bool ok = true;
    for (const auto& g : idx)
      if ((static_cast<long>(l) * (g.x * a + g.y * b)) % modulus != 0) ok = false;
    if (ok) ++count;
  }
  return {i1, i2, i3, l, modulus, count};
}

// ---- residual-case analysis (alternative route) -------------------------

// With V' = {-1, -1/2} excluded, all five fractions must be nonpositive
// values -1/phi(M) with phi(M) <= 12 (or 0) summing to -1. Returns every
// admissible multiset, sorted.
inline std::vector<std::vector<Fraction>> residual_fraction_rows() {
  std::vector<Fraction> values{Fraction(0)};
  for (std::int64_t m = 1; m <= 2 * 13 * 13; ++m) {
    Fraction v = fraction_mu_phi(m);
    if (!(v < Fraction(0))) continue;
    if (v == Fraction(-1) || v == Fraction(-1, 2)) continue;
    if (euler_phi(m) > 12) continue;
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  std::vector<std::vector<Fraction>> rows;
  std::vector<Fraction> pick;
  std::function<void(std::size_t, Fraction)> rec = [&](std::size_t start, Fraction sum) {
    if (pick.size() == 5) {
      if (sum == Fraction(-1)) rows.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < values.size(); ++i) {
      pick.push_back(values[i]);
      rec(i, sum + values[i]);
      pick.pop_back();
    }
  };
  rec(0, Fraction(0));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return rows;
}

// Each residual row pins at least three fractions to -1/4 (forcing l = 5)
// or to -1/6 (forcing l = 7); the twenty triple systems then cover all
// cases.
inline bool residual_rows_pinned(const std::vector<std::vector<Fraction>>& rows) {
  for (const auto& row : rows) {
    long quarters = std::count(row.begin(), row.end(), Fraction(-1, 4));
    long sixths = std::count(row.begin(), row.end(), Fraction(-1, 6));
    if (quarters < 3 && sixths < 3) return false;
  }
  return true;
}

}  // namespace usv
