#include <doctest.h>

#include "oracles.hpp"
#include "thue/polynomial.hpp"

using namespace thue;

TEST_CASE("basic polynomial ops") {
  Poly f = {Int(-2), Int(0), Int(0), Int(1)};  // X^3 - 2
  CHECK(degree(f) == 3);
  CHECK(eval_int(f, Int(3)) == 25);
  Poly fp = derivative(f);
  CHECK(fp == Poly{Int(0), Int(0), Int(3)});
  CHECK(reciprocal(f) == Poly{Int(1), Int(0), Int(0), Int(-2)});
  CHECK(content(Poly{Int(6), Int(-9), Int(12)}) == 3);
  CHECK(sign_at(f, Rat(5, 4)) < 0);   // (5/4)^3 = 125/64 < 2
  CHECK(sign_at(f, Rat(13, 10)) > 0); // 1.3^3 = 2.197 > 2
}

TEST_CASE("taylor shift and exact division") {
  Poly f = {Int(-2), Int(0), Int(0), Int(1)};
  Poly g = taylor_shift(f, Int(1));  // (X+1)^3 - 2 = X^3+3X^2+3X-1
  CHECK(g == Poly{Int(-1), Int(3), Int(3), Int(1)});
  Poly prod = poly_mul(Poly{Int(1), Int(1)}, Poly{Int(-3), Int(2)});
  CHECK(poly_divexact(prod, Poly{Int(1), Int(1)}) == Poly{Int(-3), Int(2)});
  CHECK_THROWS_AS(poly_divexact(f, Poly{Int(1), Int(1)}), Error);
}

TEST_CASE("subresultant resultant agrees with the Sylvester oracle") {
  oracle::Rng rng(12345);
  for (int it = 0; it < 200; ++it) {
    int da = static_cast<int>(rng.pick(1, 6));
    int db = static_cast<int>(rng.pick(1, 6));
    Poly a(static_cast<size_t>(da) + 1), b(static_cast<size_t>(db) + 1);
    for (auto& c : a) c = Int(rng.pick(-20, 20));
    for (auto& c : b) c = Int(rng.pick(-20, 20));
    if (is_zero(a) || is_zero(b)) continue;
    trim(a);
    trim(b);
    if (is_zero(a) || is_zero(b)) continue;
    CAPTURE(it);
    CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("resultant classics") {
  Poly f = {Int(-2), Int(0), Int(0), Int(1)};  // X^3 - 2
  Poly fp = derivative(f);
  // Res(f, f') = prod 3 a_i^2 = 27 (prod roots)^2 = 108
  CHECK(resultant(f, fp) == 108);
  Poly g = {Int(1), Int(1)};  // X + 1
  // Res(f, g) = (-1)^(3*1) f(-1) = 3
  CHECK(resultant(f, g) == 3);
}

TEST_CASE("gcd and squarefree part") {
  Poly a = poly_mul(Poly{Int(-1), Int(1)}, Poly{Int(-1), Int(1)});  // (X-1)^2
  Poly b = poly_mul(a, Poly{Int(1), Int(1)});                       // (X-1)^2 (X+1)
  Poly g = gcd_poly(b, derivative(b));
  CHECK(g == Poly{Int(-1), Int(1)});
  CHECK(!is_squarefree(b));
  Poly sf = squarefree_part(b);
  CHECK(degree(sf) == 2);
  CHECK(eval_int(sf, Int(1)) == 0);
  CHECK(eval_int(sf, Int(-1)) == 0);
}

TEST_CASE("real root isolation: counts, order, exact hits") {
  // X^3 - 2: one real root
  Poly f = {Int(-2), Int(0), Int(0), Int(1)};
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 1);
  RealRoot r = roots[0];
  refine_real_root(f, r, Rat(1, 100000));
  CHECK(r.lo >= Rat(12599, 10000));
  CHECK(r.hi <= Rat(12600, 10000));

  // X^3 - 3X + 1: three real roots
  Poly g = {Int(1), Int(-3), Int(0), Int(1)};
  CHECK(isolate_real_roots(g).size() == 3);

  // (X-1)(X+2)(X-5): exact rational roots get found eventually
  Poly h = poly_mul(poly_mul(Poly{Int(-1), Int(1)}, Poly{Int(2), Int(1)}), Poly{Int(-5), Int(1)});
  auto hr = isolate_real_roots(h);
  REQUIRE(hr.size() == 3);
  for (auto& rr : hr) refine_real_root(h, rr, Rat(1, 1000000));
  CHECK(hr[0].lo <= Rat(-2));
  CHECK(hr[0].hi >= Rat(-2));
  CHECK(hr[2].lo <= Rat(5));
  CHECK(hr[2].hi >= Rat(5));

  // positive definite: no real roots
  Poly p = {Int(1), Int(0), Int(0), Int(0), Int(1)};
  CHECK(isolate_real_roots(p).empty());
}

TEST_CASE("sturm count between rational endpoints") {
  Poly g = {Int(1), Int(-3), Int(0), Int(1)};  // roots ~ -1.88, 0.347, 1.53
  CHECK(count_real_roots_between(g, Rat(-2), Rat(2)) == 3);
  CHECK(count_real_roots_between(g, Rat(0), Rat(1)) == 1);
  CHECK(count_real_roots_between(g, Rat(-2), Rat(0)) == 1);
}

TEST_CASE("interval and box evaluation enclose point values") {
  Poly f = {Int(-2), Int(0), Int(0), Int(1)};
  Interval at = eval_interval(f, Interval(Rat(3, 2)));
  CHECK(at.contains(Rat(27, 8) - Rat(2)));
  Box z = eval_box(f, Box(Interval(1L), Interval(1L)));  // (1+i)^3 - 2 = -4 + 2i
  CHECK(z.re.contains(Rat(-4)));
  CHECK(z.im.contains(Rat(2)));
}
