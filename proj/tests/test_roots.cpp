#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thue/roots.hpp"

using namespace thue;

TEST_CASE("cubic with one real root") {
  BinaryForm F = parse_form("x^3-2y^3");
  RootSystem rs = RootSystem::solve(F, 1e-20);
  REQUIRE(rs.n() == 3);
  CHECK(rs.q() == 1);
  CHECK(rs.real_count() == 1);
  // real root in [1.2599, 1.2600]
  CHECK(rs.is_real_root(0));
  CHECK(mpfr_cmp_d(rs.root_box(0).re.lo(), 1.2599) > 0);
  CHECK(mpfr_cmp_d(rs.root_box(0).re.hi(), 1.2600) < 0);
  // conjugate pair near -0.6300 +- 1.0911i
  CHECK(!rs.is_real_root(1));
  CHECK(!rs.is_real_root(2));
  CHECK(rs.conj_index(1) == 2);
  CHECK(rs.conj_index(2) == 1);
  CHECK(std::abs(std::abs(rs.root_box(1).im.mid_double()) - 1.0911) < 1e-3);
  CHECK(std::abs(rs.root_box(1).re.mid_double() + 0.6300) < 1e-3);
}

TEST_CASE("all-real cubic and positive definite quartic") {
  RootSystem rs = RootSystem::solve(parse_form("x^3-3x*y^2+y^3"));
  CHECK(rs.q() == 0);
  CHECK(rs.real_count() == 3);

  RootSystem rq = RootSystem::solve(parse_form("x^4+y^4"));
  CHECK(rq.q() == 2);
  CHECK(rq.real_count() == 0);
}

TEST_CASE("repeated root rejected") {
  CHECK_THROWS_AS(RootSystem::solve(parse_form("x^3-x^2*y-x*y^2+y^3")), Error);  // (x-y)^2(x+y)
  CHECK_THROWS_AS(RootSystem::solve(parse_form("0,1,0,1")), Error);              // a0 = 0
}

TEST_CASE("enclosures are disjoint and conjugate-symmetric") {
  for (const char* s : {"x^3-2y^3", "x^4+y^4", "x^4-3x^3*y+2x*y^3+y^4", "x^5-x*y^4+y^5"}) {
    BinaryForm F = parse_form(s);
    if (discriminant(F) == 0) continue;
    RootSystem rs = RootSystem::solve(F);
    for (int i = 0; i < rs.n(); ++i)
      for (int j = i + 1; j < rs.n(); ++j) CHECK(!rs.root_box(i).overlaps(rs.root_box(j)));
    for (int i = 0; i < rs.n(); ++i) {
      int c = rs.conj_index(i);
      CHECK(rs.conj_index(c) == i);
      if (!rs.is_real_root(i)) {
        CHECK(rs.root_box(c).re.overlaps(rs.root_box(i).re));
        CHECK((-rs.root_box(c).im).overlaps(rs.root_box(i).im));
      }
    }
  }
}

TEST_CASE("refinement tightens to requested tolerance") {
  RootSystem rs = RootSystem::solve(parse_form("x^4-3x^3*y+2x*y^3+y^4"), 1e-10);
  rs.refine(1e-40);
  for (int k = 0; k < rs.n(); ++k) CHECK(rs.root_box(k).diam_double() <= 1e-39);
}

TEST_CASE("separation and imaginary floors") {
  BinaryForm F = parse_form("x^3-2y^3");
  RootSystem rs = RootSystem::solve(F);
  MahlerMeasure M = mahler_measure(rs);
  REQUIRE(M.exact.has_value());
  CHECK(*M.exact == 2);

  Interval sep = separation_bound(3, M.as_interval());
  // sqrt(3)/256 ~ 0.0067658
  CHECK(sep.contains_zero() == false);
  CHECK(std::abs(sep.mid_double() - 0.0067658) < 1e-6);
  Interval imf = imag_lower_bound(3, M.as_interval());
  CHECK(std::abs(imf.mid_double() - 0.0033829) < 1e-6);

  // floors hold against certified data
  for (int i = 0; i < rs.n(); ++i) {
    for (int j = i + 1; j < rs.n(); ++j) {
      Box d(rs.root_box(i).re - rs.root_box(j).re, rs.root_box(i).im - rs.root_box(j).im);
      CHECK(mpfr_cmp(modulus(d).hi(), sep.lo()) >= 0);
    }
    if (!rs.is_real_root(i)) CHECK(mpfr_cmp(abs(rs.root_box(i).im).hi(), imf.lo()) >= 0);
  }

  // n = 3, M = 1 gives sqrt(3)/64
  Interval sep1 = separation_bound(3, Interval(1L));
  CHECK(std::abs(sep1.mid_double() - std::sqrt(3.0) / 64) < 1e-12);
}

TEST_CASE("derivative bounds sandwich |f'| at each root") {
  BinaryForm F = parse_form("x^3-2y^3");
  RootSystem rs = RootSystem::solve(F);
  MahlerMeasure M = mahler_measure(rs);
  Int D = discriminant(F);

  auto [lo, hi] = derivative_bounds(rs, M.as_interval(), D, 0, true);
  // lower = 2^-4 * 108 / 2^4 = 0.421875 exactly; |f'(2^(1/3))| = 3*2^(2/3) ~ 4.7622
  CHECK(lo.contains(Rat(27, 64)));
  Interval fp = rs.fprime_abs(0);
  CHECK(std::abs(fp.mid_double() - 4.7622) < 1e-3);
  CHECK(std::abs(hi.mid_double() - 19.049) < 1e-2);
  CHECK(mpfr_cmp(lo.hi(), fp.lo()) <= 0);
  CHECK(mpfr_cmp(fp.hi(), hi.lo()) <= 0);

  // lower <= upper for every root
  for (int k = 0; k < rs.n(); ++k) {
    auto [l2, h2] = derivative_bounds(rs, M.as_interval(), D, k, true);
    CHECK(mpfr_cmp(l2.lo(), h2.hi()) <= 0);
    Interval f2 = rs.fprime_abs(k);
    CHECK(mpfr_cmp(l2.hi(), f2.hi()) <= 0);
    CHECK(mpfr_cmp(f2.lo(), h2.hi()) <= 0);
  }

  // without irreducibility only the upper bound is meaningful
  auto [l3, h3] = derivative_bounds(rs, M.as_interval(), D, 0, false);
  CHECK(mpfr_sgn(l3.lo()) == 0);
  CHECK(mpfr_sgn(h3.hi()) > 0);
}

TEST_CASE("derivative product contains |D / a0^(n-2)|") {
  for (const char* s : {"x^3-2y^3", "3x^3+y^3", "x^4-3x^3*y+2x*y^3+y^4"}) {
    BinaryForm F = parse_form(s);
    RootSystem rs = RootSystem::solve(F);
    rs.refine(1e-40);
    Int D = discriminant(F);
    Interval prod(1L);
    for (int k = 0; k < rs.n(); ++k) prod *= rs.fprime_abs(k);
    Rat target =
        Rat(abs(D)) / Rat(pow_int(Int(abs(F.a0())), static_cast<unsigned long>(F.deg() - 2)));
    CAPTURE(s);
    CHECK(prod.contains(target));
    CHECK(prod.rel_width_below(1e-10));
  }
}

TEST_CASE("mahler measure fixtures") {
  MahlerMeasure m1 = mahler_measure(parse_form("x^3-2y^3"));
  REQUIRE(m1.exact.has_value());
  CHECK(*m1.exact == 2);
  CHECK(m1.as_interval().contains(Rat(2)));

  MahlerMeasure m2 = mahler_measure(parse_form("3x^3+y^3"));
  REQUIRE(m2.exact.has_value());
  CHECK(*m2.exact == 3);

  // all roots on the unit circle
  MahlerMeasure m3 = mahler_measure(parse_form("x^3+y^3"));
  REQUIRE(m3.exact.has_value());
  CHECK(*m3.exact == 1);

  // x^4 + 5x^2y^2 - 7y^4: real pair modulus^2 = (sqrt(53)-5)/2 > 1 and the
  // imaginary pair modulus^2 = (sqrt(53)+5)/2 > 1, so M = |a_n| = 7 exactly.
  MahlerMeasure m4 = mahler_measure(parse_form("x^4+5x^2*y^2-7y^4"), 1e-13);
  REQUIRE(m4.exact.has_value());
  CHECK(*m4.exact == 7);
  CHECK(m4.value.rel_width_below(1e-12));

  // mixed case with an irrational measure: roots of 2X^2 - 5X + 2 are 2 and
  // 1/2, M = 2 * 2 = 4 (via the one-level inversion split, still exact);
  // checked through a squarefree quartic with that quadratic as a factor
  MahlerMeasure m5 = mahler_measure(parse_form("2x^2-5x*y+2y^2"), 1e-13);
  CHECK(m5.as_interval().contains(Rat(4)));

  CHECK_THROWS_AS(mahler_measure(parse_form("0,1,0,1")), Error);
}

TEST_CASE("mahler floor and height sandwich on fixtures") {
  for (const char* s : {"x^3-2y^3", "x^3+y^3", "x^4+y^4", "x^3-3x*y^2+y^3"}) {
    BinaryForm F = parse_form(s);
    MahlerMeasure M = mahler_measure(F);
    int n = F.deg();
    Int D = discriminant(F);
    Interval floor =
        pow(Interval(Int(abs(D))) / pow_si(Interval(static_cast<long>(n)), n), Rat(1, 2 * n - 2));
    CAPTURE(s);
    CHECK(mpfr_cmp(M.as_interval().hi(), floor.lo()) >= 0);
    if (is_irreducible(F).verdict == Irreducibility::Irreducible) {
      Int b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
      Interval lo = Interval(F.naive_height()) / Interval(b);
      Interval hi = sqrt(Interval(static_cast<long>(n + 1))) * Interval(F.naive_height());
      CHECK(mpfr_cmp(M.as_interval().hi(), lo.lo()) >= 0);
      CHECK(mpfr_cmp(M.as_interval().lo(), hi.hi()) <= 0);
    }
  }
  // x^3 - 2y^3: M = 2 >= (108/27)^(1/4) = sqrt(2), with strict separation
  MahlerMeasure M = mahler_measure(parse_form("x^3-2y^3"));
  Interval floor = pow(Interval(Rat(108, 27)), Rat(1, 4));
  CHECK(mpfr_cmp(M.as_interval().lo(), floor.hi()) > 0);
}

TEST_CASE("aggregate invariants") {
  FormInvariants inv = compute_invariants(parse_form("x^3-2y^3"));
  CHECK(inv.D == -108);
  CHECK(inv.H == 2);
  CHECK(inv.q == 1);
  CHECK(inv.irreducibility == Irreducibility::Irreducible);
  REQUIRE(inv.mahler.exact.has_value());
  CHECK(*inv.mahler.exact == 2);
  CHECK(inv.mahler.value.rel_width_below(1e-12));

  FormInvariants red = compute_invariants(parse_form("x^3-y^3"));
  CHECK(red.irreducibility == Irreducibility::Reducible);
  CHECK(red.q == 1);

  // D = 0: root-dependent fields stay defaulted
  FormInvariants deg = compute_invariants(parse_form("x^3-x^2*y-x*y^2+y^3"));
  CHECK(deg.D == 0);
  CHECK(!deg.mahler.exact.has_value());
}
