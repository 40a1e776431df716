#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "triarea/polynomial.hpp"

using namespace triarea;

namespace {

Poly from_ll(std::initializer_list<long long> cs) {
  std::vector<Rat> v;
  for (long long x : cs) v.push_back(Rat(x));
  return Poly(std::move(v));
}

Poly random_poly(test_rng& rng, int deg) {
  std::vector<Rat> v;
  for (int i = 0; i <= deg; ++i) v.push_back(Rat(rng.range(-9, 9)));
  if (v.back().is_zero()) v.back() = Rat(1);
  return Poly(std::move(v));
}

}  // namespace

TEST_CASE("polynomial basics") {
  Poly p = from_ll({1, -2, 3});  // 3x^2 - 2x + 1
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rat(2)) == Rat(9));
  CHECK(p.eval(Rat(1, 3)) == Rat(2, 3));
  CHECK(Poly({Rat(5), Rat(0), Rat(0)}).degree() == 0);  // trailing zeros dropped
  CHECK(Poly().is_zero());
  CHECK(derivative(p) == from_ll({-2, 6}));
  CHECK(derivative(Poly::constant(Rat(4))).is_zero());
  CHECK(Poly::x() * Poly::x() == from_ll({0, 0, 1}));

  test_rng rng(21);
  for (int t = 0; t < 100; ++t) {
    Poly a = random_poly(rng, static_cast<int>(rng.next() % 5));
    Poly b = random_poly(rng, static_cast<int>(rng.next() % 5));
    CHECK((a + b) * (a - b) == a * a - b * b);
    Rat x(rng.range(-5, 5), rng.range(1, 4));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
  }
}

TEST_CASE("division and gcd") {
  Poly num = from_ll({-1, 0, 0, 1});  // x^3 - 1
  Poly den = from_ll({-1, 1});        // x - 1
  auto [q, r] = divmod(num, den);
  CHECK(q == from_ll({1, 1, 1}));
  CHECK(r.is_zero());

  auto [q2, r2] = divmod(from_ll({1, 0, 1}), from_ll({1, 1}));  // x^2+1 by x+1
  CHECK(q2 == from_ll({-1, 1}));
  CHECK(r2 == from_ll({2}));

  CHECK_THROWS_AS(divmod(num, Poly()), Error);

  Poly g = poly_gcd(from_ll({-1, 0, 1}), from_ll({1, -2, 1}));  // (x^2-1, (x-1)^2)
  CHECK(g == from_ll({-1, 1}));
  CHECK(poly_gcd(Poly(), from_ll({0, 3})) == from_ll({0, 1}));  // monic rescale

  test_rng rng(22);
  for (int t = 0; t < 60; ++t) {
    Poly a = random_poly(rng, 1 + static_cast<int>(rng.next() % 4));
    Poly b = random_poly(rng, 1 + static_cast<int>(rng.next() % 3));
    auto [qq, rr] = divmod(a, b);
    CHECK(a == qq * b + rr);
    CHECK(rr.degree() < b.degree());
  }
}

TEST_CASE("squarefree part") {
  Poly p = from_ll({-1, 1}) * from_ll({-1, 1}) * from_ll({2, 1});  // (x-1)^2 (x+2)
  CHECK(squarefree_part(p) == from_ll({-2, 1, 1}));                // (x-1)(x+2)
  Poly sf = from_ll({-2, 0, 1});
  CHECK(squarefree_part(sf) == sf);
}

TEST_CASE("sturm root counting") {
  // (x-1)(x-2)(x-3)
  Poly p = from_ll({-1, 1}) * from_ll({-2, 1}) * from_ll({-3, 1});
  SturmChain chain(p);
  CHECK(chain.count_all_roots() == 3);
  CHECK(chain.count_roots(Rat(3, 2), Rat(5, 2)) == 1);
  CHECK(chain.count_roots(Rat(1), Rat(3)) == 2);  // half-open: 1 excluded, 3 included
  CHECK(chain.count_roots(Rat(0), Rat(1)) == 1);
  CHECK(chain.count_roots(Rat(4), Rat(9)) == 0);

  CHECK(SturmChain(from_ll({1, 0, 1})).count_all_roots() == 0);   // x^2+1
  CHECK(SturmChain(from_ll({-2, 0, 1})).count_all_roots() == 2);  // x^2-2

  // repeated roots are counted once
  Poly sq = from_ll({-1, 1}) * from_ll({-1, 1}) * from_ll({1, 1});
  CHECK(SturmChain(sq).count_all_roots() == 2);

  Poly b = from_ll({-2, 0, 1});
  Rat bd = root_bound(b);
  CHECK(b.eval(bd).sign() == b.eval(bd + Rat(1)).sign());
  CHECK(SturmChain(b).count_roots(-bd, bd) == 2);
}

TEST_CASE("root isolation") {
  // x^3 - 2x: roots -sqrt2, 0, sqrt2; the middle one lands exactly
  auto iv = isolate_roots(from_ll({0, -2, 0, 1}));
  REQUIRE(iv.size() == 3);
  CHECK(iv[1].first == Rat(0));
  CHECK(iv[1].second == Rat(0));
  CHECK(iv[0].second <= Rat(0));
  CHECK(sq(iv[0].first) > Rat(2));
  CHECK(sq(iv[0].second) < Rat(2));
  CHECK(sq(iv[2].first) < Rat(2));
  CHECK(sq(iv[2].second) > Rat(2));

  // (x-1)(x^2-2): the rational root 1 still gets a valid sign-change interval
  Poly p = from_ll({-1, 1}) * from_ll({-2, 0, 1});
  auto iv2 = isolate_roots(p);
  REQUIRE(iv2.size() == 3);
  for (auto& [lo, hi] : iv2) {
    if (lo == hi)
      CHECK(p.eval(lo).is_zero());
    else
      CHECK(p.eval(lo).sign() * p.eval(hi).sign() == -1);
  }
  int hits = 0;
  for (auto& [lo, hi] : iv2)
    if (lo <= Rat(1) && Rat(1) <= hi) ++hits;
  CHECK(hits == 1);

  CHECK(isolate_roots(from_ll({1, 0, 1})).empty());
  CHECK(isolate_roots(Poly::constant(Rat(3))).empty());

  test_rng rng(23);
  for (int t = 0; t < 60; ++t) {
    Poly q = squarefree_part(random_poly(rng, 2 + static_cast<int>(rng.next() % 5)));
    auto ivs = isolate_roots(q);
    CHECK(static_cast<int>(ivs.size()) == SturmChain(q).count_all_roots());
    for (size_t i = 0; i + 1 < ivs.size(); ++i) CHECK(ivs[i].second <= ivs[i + 1].first);
    SturmChain c(q);
    for (auto& [lo, hi] : ivs)
      if (lo < hi) CHECK(c.count_roots(lo, hi) == 1);
  }
}

TEST_CASE("algebraic numbers") {
  Poly p = from_ll({-2, 0, 1});
  auto iv = isolate_roots(p);
  REQUIRE(iv.size() == 2);
  AlgebraicNum r(p, iv[1].first, iv[1].second);  // sqrt2

  CHECK(r.sign_of(p) == 0);
  CHECK(r.sign_of(from_ll({-1, 1})) == 1);   // sqrt2 > 1
  CHECK(r.sign_of(from_ll({-2, 1})) == -1);  // sqrt2 < 2
  CHECK(r.sign_of(from_ll({6, -5})) == -1);  // 6 < 5 sqrt2
  CHECK(r.sign_of(Poly()) == 0);
  CHECK(std::fabs(r.to_double() - std::sqrt(2.0)) < 1e-12);

  AlgebraicNum r2(p, iv[1].first, iv[1].second);
  Rat w0 = r2.hi() - r2.lo();
  r2.refine();
  CHECK(r2.hi() - r2.lo() == w0 / Rat(2));

  // a collapsed interval is an exact rational root
  Poly q = from_ll({-3, 2});  // 2x - 3
  AlgebraicNum h(q, Rat(3, 2), Rat(3, 2));
  CHECK(h.is_rational());
  CHECK(h.sign_of(from_ll({-1, 1})) == 1);
  CHECK(h.sign_of(from_ll({-3, 2})) == 0);
  CHECK(h.to_double() == 1.5);

  CHECK_THROWS_AS(AlgebraicNum(p, Rat(1), Rat(1)), Error);       // not a root
  CHECK_THROWS_AS(AlgebraicNum(p, Rat(2), Rat(1)), Error);       // inverted
  CHECK_THROWS_AS(AlgebraicNum(p, Rat(-3), Rat(3)), Error);      // no sign change
}
