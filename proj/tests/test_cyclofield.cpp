#include <catch_amalgamated.hpp>

#include <numeric>

#include "unitysieve/ball.hpp"
#include "unitysieve/cyclofield.hpp"
#include "unitysieve/parse.hpp"

using usv::CycloElem;
using usv::root_of_unity;

TEST_CASE("primitive root sums vanish") {
  for (long n : {2, 3, 5, 7, 15, 210}) {
    CycloElem sum(n);
    for (long k = 0; k < n; ++k) sum = sum + root_of_unity(n, k);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("roots of unity multiply by adding exponents") {
  for (long n : {12, 15, 210}) {
    CHECK(root_of_unity(n, 5) * root_of_unity(n, n - 2) == root_of_unity(n, 3));
    CHECK(root_of_unity(n, 1).inv() == root_of_unity(n, n - 1));
    CHECK(root_of_unity(n, 3).conj() == root_of_unity(n, n - 3));
  }
}

TEST_CASE("field inverse via extended euclid") {
  long n = 15;
  CycloElem a = root_of_unity(n, 2) + root_of_unity(n, 7) +
                CycloElem::from_rational(n, mpq_class(3, 2));
  CycloElem one = CycloElem::from_rational(n, 1);
  CHECK(a * a.inv() == one);
  CHECK_THROWS_AS(CycloElem(n).inv(), std::domain_error);
}

TEST_CASE("galois automorphisms act on exponents") {
  long n = 15;
  for (long j : {2, 4, 7, 8, 11, 13, 14})
    for (long k = 0; k < n; ++k)
      CHECK(root_of_unity(n, k).galois(j) == root_of_unity(n, (k * j) % n));
  CHECK_THROWS_AS(root_of_unity(15, 1).galois(5), std::invalid_argument);
  // automorphisms respect products
  CycloElem a = root_of_unity(n, 2) + root_of_unity(n, 11);
  CycloElem b = root_of_unity(n, 7) + CycloElem::from_rational(n, 2);
  CHECK((a * b).galois(7) == a.galois(7) * b.galois(7));
}

TEST_CASE("the modulus-15 conjugation fixture") {
  // j = 7 sends (d^8, d^13) to (d^11, d^1)
  CHECK(root_of_unity(15, 8).galois(7) == root_of_unity(15, 11));
  CHECK(root_of_unity(15, 13).galois(7) == root_of_unity(15, 1));
}

TEST_CASE("embedding into a larger field preserves the value") {
  CHECK(root_of_unity(3, 1).embed_into(15) == root_of_unity(15, 5));
  CHECK(root_of_unity(5, 2).embed_into(210) == root_of_unity(210, 84));
  CycloElem a = root_of_unity(7, 3) + root_of_unity(7, 5);
  CHECK(a.embed_into(21).embed_into(210) == a.embed_into(210));
  CHECK_THROWS_AS(root_of_unity(4, 1).embed_into(15), std::invalid_argument);
}

TEST_CASE("rational and root-of-unity detection") {
  CHECK(root_of_unity(12, 6).as_rational() == mpq_class(-1));
  CHECK(!root_of_unity(12, 1).as_rational());
  for (long k = 0; k < 15; ++k)
    CHECK(root_of_unity(15, k).as_root_of_unity() == k);
  CHECK(!(root_of_unity(15, 1) + root_of_unity(15, 2)).as_root_of_unity());
  CHECK(CycloElem::from_rational(15, 1).as_root_of_unity() == 0);
}

TEST_CASE("exact evaluation of the six-term polynomial at claimed roots") {
  auto f = usv::parse_bilaurent("1 + x + y + x^2*y^3 + x^3*y^2 + x^3*y^3");
  long n = 210;
  CHECK(usv::eval_bilaurent(f, root_of_unity(n, 70), root_of_unity(n, 70)).is_zero());
  CHECK(usv::eval_bilaurent(f, root_of_unity(n, 15), root_of_unity(n, 30)).is_zero());
  CHECK(usv::eval_bilaurent(f, root_of_unity(n, 0), root_of_unity(n, 105)).is_zero());
  CHECK(!usv::eval_bilaurent(f, root_of_unity(n, 1), root_of_unity(n, 2)).is_zero());
  // negative exponents route through the field inverse
  auto laurent = usv::parse_bilaurent("x^-1*y - 1");
  CHECK(usv::eval_bilaurent(laurent, root_of_unity(n, 9), root_of_unity(n, 9)).is_zero());
}

TEST_CASE("ramanujan sums re-derived as field sums") {
  for (long n : {9, 12, 15}) {
    for (long k = 0; k < n; ++k) {
      CycloElem sum(n);
      for (long j = 1; j <= n; ++j)
        if (std::gcd(j, n) == 1) sum = sum + root_of_unity(n, (j * k) % n);
      auto r = sum.as_rational();
      REQUIRE(r);
      CHECK(*r == usv::ramanujan_sum(n, k));
    }
  }
}

TEST_CASE("numeric embedding is certified") {
  CycloElem z8 = root_of_unity(8, 1);
  auto b = usv::embed_numeric(z8, 1e-20);
  double s = std::sqrt(0.5);
  CHECK(std::fabs(b.re_d() - s) < 1e-15);
  CHECK(std::fabs(b.im_d() - s) < 1e-15);
  CHECK(b.radius <= 1e-20);

  auto zero = usv::embed_numeric(CycloElem(12), 1e-30);
  CHECK(zero.radius == 0.0);
  CHECK(zero.re_d() == 0.0);
}

TEST_CASE("sign predicates decide quadrants exactly") {
  long n = 12;
  for (long k = 0; k < n; ++k) {
    CycloElem z = root_of_unity(n, k);
    double angle = 2 * M_PI * k / n;
    bool re_pos = std::cos(angle) > 1e-9;
    bool im_pos = std::sin(angle) > 1e-9;
    bool re_zero = std::fabs(std::cos(angle)) < 1e-9;
    bool im_zero = std::fabs(std::sin(angle)) < 1e-9;
    CHECK(usv::sign_predicate(usv::SignKind::re_positive, z) == re_pos);
    CHECK(usv::sign_predicate(usv::SignKind::im_positive, z) == im_pos);
    CHECK(usv::sign_predicate(usv::SignKind::re_zero, z) == re_zero);
    CHECK(usv::sign_predicate(usv::SignKind::im_zero, z) == im_zero);
  }
  // a non-root element takes the ball-refinement path
  CycloElem a = root_of_unity(7, 1) + root_of_unity(7, 2);
  CHECK(usv::sign_predicate(usv::SignKind::re_positive, a));
  CHECK(usv::sign_predicate(usv::SignKind::im_positive, a));
  CHECK(usv::sign_predicate(usv::SignKind::im_zero, a + a.conj()));
  CHECK(usv::sign_predicate(usv::SignKind::re_zero, a - a.conj()));
}
