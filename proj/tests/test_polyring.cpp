#include <catch_amalgamated.hpp>

#include <random>

#include "sylvester_oracle.hpp"
#include "unitysieve/cyclotomic.hpp"
#include "unitysieve/dense_poly.hpp"
#include "unitysieve/parse.hpp"

using usv::IntPoly;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg, int coeff_range) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  IntPoly p;
  int d = deg(rng);
  p.c.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) p.c[i] = coeff(rng);
  p.trim();
  return p;
}

}  // namespace

TEST_CASE("dense polynomial ring basics") {
  IntPoly a = usv::parse_intpoly("x^2 + 2*x + 1");
  IntPoly b = usv::parse_intpoly("x + 1");
  CHECK(a == b * b);
  CHECK(usv::to_string(a - a) == "0");
  CHECK((a + b).degree() == 2);
  CHECK(a.eval(mpz_class(3)) == 16);
  CHECK(usv::pow(b, 3) == usv::parse_intpoly("x^3 + 3*x^2 + 3*x + 1"));
  CHECK(b.derivative() == IntPoly::monomial(0, 1));
  CHECK(a.derivative() == usv::parse_intpoly("2*x + 2"));
}

TEST_CASE("exact division detects and rejects inexactness") {
  IntPoly p = usv::parse_intpoly("x^3 - 1");
  IntPoly d = usv::parse_intpoly("x - 1");
  CHECK(usv::exact_div(p, d) == usv::parse_intpoly("x^2 + x + 1"));
  CHECK_THROWS_AS(usv::exact_div(p, usv::parse_intpoly("x - 2")), std::domain_error);
  CHECK_THROWS_AS(usv::exact_div(p, IntPoly()), std::domain_error);
}

TEST_CASE("pseudo-remainder carries the exact leading-coefficient power") {
  // prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b, checked by evaluation
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    IntPoly a = random_poly(rng, 6, 5);
    IntPoly b = random_poly(rng, 4, 5);
    if (b.is_zero() || a.degree() < b.degree()) continue;
    IntPoly r = usv::pseudo_rem(a, b);
    int e = a.degree() - b.degree() + 1;
    for (long x = -3; x <= 3; ++x) {
      mpz_class bx = b.eval(mpz_class(x));
      if (bx == 0) continue;  // r(x) need not match where b vanishes
      mpz_class lhs = usv::pow_coeff(b.lc(), e) * a.eval(mpz_class(x));
      // lhs = q(x) b(x) + r(x) for some integer polynomial q
      mpz_class diff = lhs - r.eval(mpz_class(x));
      CHECK(diff % bx == 0);
    }
  }
}

TEST_CASE("content, primitive part, gcd, squarefree part") {
  IntPoly p = usv::parse_intpoly("6*x^2 - 6");
  CHECK(usv::content(p) == 6);
  CHECK(usv::primitive_part(p) == usv::parse_intpoly("x^2 - 1"));
  CHECK(usv::primitive_part(usv::parse_intpoly("-2*x - 2")) ==
        usv::parse_intpoly("x + 1"));

  IntPoly g = usv::poly_gcd(usv::parse_intpoly("x^3 + x^2 + x + 1"),
                            usv::parse_intpoly("x^2 + 3*x + 2"));
  CHECK(g == usv::parse_intpoly("x + 1"));

  IntPoly sq = usv::squarefree_part(usv::parse_intpoly("x^4 - 2*x^3 + 2*x - 1"));
  // (x-1)^3 (x+1) -> (x-1)(x+1)
  CHECK(sq == usv::parse_intpoly("x^2 - 1"));
}

TEST_CASE("subresultant resultant equals the Sylvester determinant") {
  std::mt19937 rng(42);
  int tested = 0;
  while (tested < 200) {
    IntPoly a = random_poly(rng, 6, 5);
    IntPoly b = random_poly(rng, 6, 5);
    if (a.is_zero() || b.is_zero()) continue;
    CAPTURE(usv::to_string(a), usv::to_string(b));
    REQUIRE(usv::resultant(a, b) == usv::oracle::sylvester_resultant(a, b));
    ++tested;
  }
}

TEST_CASE("resultant conventions at the edges") {
  IntPoly c3 = IntPoly::monomial(0, 3);
  IntPoly g = usv::parse_intpoly("x^4 + x + 2");
  CHECK(usv::resultant(c3, g) == 81);  // 3^deg g
  CHECK(usv::resultant(g, c3) == 81);
  CHECK(usv::resultant(usv::parse_intpoly("x - 2"), usv::parse_intpoly("x^2 - 4")) == 0);
  // swap antisymmetry up to (-1)^(deg a * deg b)
  IntPoly a = usv::parse_intpoly("x^3 + 2*x - 1");
  IntPoly b = usv::parse_intpoly("x^2 - x + 4");
  CHECK(usv::resultant(a, b) == usv::resultant(b, a));  // 3*2 even
  IntPoly u = usv::parse_intpoly("x^3 + x + 1");
  IntPoly v = usv::parse_intpoly("x^3 - 2*x + 5");
  CHECK(usv::resultant(u, v) == -usv::resultant(v, u));  // 3*3 odd
}

TEST_CASE("resultant over a polynomial coefficient ring matches the oracle") {
  // polynomials in y with coefficients in Z[x]
  using YPoly = usv::DensePoly<IntPoly>;
  std::mt19937 rng(99);
  for (int t = 0; t < 20; ++t) {
    YPoly a, b;
    a.c.assign(3, IntPoly());
    b.c.assign(3, IntPoly());
    for (auto* p : {&a, &b})
      for (auto& coeff : p->c) coeff = random_poly(rng, 2, 3);
    a.trim();
    b.trim();
    if (a.is_zero() || b.is_zero() || a.degree() == 0 || b.degree() == 0) continue;
    REQUIRE(usv::resultant(a, b) == usv::oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("cyclotomic polynomials multiply back to x^n - 1") {
  for (long n = 1; n <= 120; ++n) {
    IntPoly prod = IntPoly::one();
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * usv::cyclotomic_poly(d);
    IntPoly xn1 = IntPoly::monomial(n, 1) - IntPoly::one();
    REQUIRE(prod == xn1);
  }
}

TEST_CASE("known cyclotomic values") {
  CHECK(usv::cyclotomic_poly(1) == usv::parse_intpoly("x - 1"));
  CHECK(usv::cyclotomic_poly(2) == usv::parse_intpoly("x + 1"));
  CHECK(usv::cyclotomic_poly(12) == usv::parse_intpoly("x^4 - x^2 + 1"));
  // the first index with a coefficient of magnitude 2
  IntPoly c105 = usv::cyclotomic_poly(105);
  mpz_class smallest = 0;
  for (const auto& c : c105.c) smallest = std::min(smallest, c);
  CHECK(smallest == -2);
  CHECK(c105.degree() == 48);
}

TEST_CASE("cyclotomic divisor detection") {
  IntPoly f = usv::parse_intpoly("x^2 - 1") * usv::parse_intpoly("x^2 + x + 1");
  CHECK(usv::cyclotomic_divisors(f) == std::set<long>{1, 2, 3});
  CHECK(usv::cyclotomic_divisors(usv::parse_intpoly("x^2 - 2")).empty());
  // phi(n) <= deg f bounds the scan: a bare Phi_15 of degree 8
  CHECK(usv::cyclotomic_divisors(usv::cyclotomic_poly(15)) == std::set<long>{15});
}

TEST_CASE("polynomial text round trips and parse errors") {
  for (const char* s : {"x^12 + 2*x^11 - 8*x^7 + 1", "x - 1", "0 + x", "3"}) {
    IntPoly p = usv::parse_intpoly(s);
    CHECK(usv::parse_intpoly(usv::to_string(p)) == p);
  }
  auto f = usv::parse_bilaurent("1 + x + y + x^2*y^3 + x^3*y^2 + x^3*y^3");
  CHECK(usv::parse_bilaurent(usv::to_string(f)) == f);
  auto laurent = usv::parse_bilaurent("x^-2*y + 3");
  CHECK(usv::parse_bilaurent(usv::to_string(laurent)) == laurent);

  CHECK_THROWS_AS(usv::parse_bilaurent("1 + z"), usv::ParseError);
  CHECK_THROWS_AS(usv::parse_bilaurent(""), usv::ParseError);
  CHECK_THROWS_AS(usv::parse_bilaurent("x + + y"), usv::ParseError);
  try {
    usv::parse_bilaurent("x + q*y");
  } catch (const usv::ParseError& e) {
    CHECK(e.pos == 4);
    CHECK(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
  }
}
