#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "thue/bounds.hpp"
#include "thue/logcurve.hpp"

using namespace thue;

namespace {

BoundContext ctx_for(const char* form, long m, const Rat& eps) {
  BinaryForm F = parse_form(form);
  return make_context(F, Int(m), eps);
}

}  // namespace

TEST_CASE("count bound formulas, frozen values") {
  CHECK(bound_ineq(5, Rat(1, 20)) == Rat(95, 2));           // 47.5
  CHECK(bound_ineq(5, Rat(1, 20), 1) == Rat(33));           // 23 + 4/0.4
  CHECK(bound_eq(3, Rat(1, 10)) == Rat(42));                // 27 + 15
  CHECK(bound_eq(5, Rat(1, 20), 1) == Rat(43));             // 23 + 4/0.2
  CHECK(bound_reducible(4, Rat(1, 20)) == Rat(64, 3));      // 8 + 40/3
  CHECK(bound_reducible(3, Rat(1, 10)) == Rat(27, 2));      // 13.5
  CHECK_THROWS_AS(bound_ineq(3, Rat(1, 8)), Error);         // eps at the open limit
  CHECK_THROWS_AS(bound_eq(3, Rat(1, 4)), Error);
  CHECK_THROWS_AS(bound_ineq(2, Rat(1, 100)), Error);       // degree too small
}

TEST_CASE("count bounds are monotone decreasing in epsilon") {
  Rat prev;
  bool first = true;
  for (long k = 2; k <= 12; ++k) {
    Rat eps = Rat(1, 2 * k * 10);  // shrinking epsilon
    Rat b = bound_ineq(4, eps);
    if (!first) CHECK(b > prev);  // smaller eps -> larger bound
    prev = b;
    first = false;
  }
}

TEST_CASE("prime-parameter bounds with exhaustive prime gap check") {
  PrimeBound p1 = prime_bound_ineq(3, 1);
  CHECK(p1.prime == 457);
  CHECK(p1.per_form == Rat(29));
  CHECK(p1.total == Rat(13282));
  // cutoff = 150.0625 * 3 = 450.1875; no prime in [451, 457)
  for (long c = 451; c < 457; ++c) CHECK(!is_prime_u64(static_cast<std::uint64_t>(c)));

  PrimeBound p2 = prime_bound_eq(3, 1);
  CHECK(p2.prime == 37);
  CHECK(p2.total == Rat(1102));
  for (long c = 37; c < 37; ++c) CHECK(!is_prime_u64(static_cast<std::uint64_t>(c)));
  CHECK(p2.cutoff.contains(Rat(147, 4)));  // 36.75

  // twice-the-parameter always dominates the prime found (Bertrand)
  CHECK(Rat(p1.prime) < 2 * Rat(4502, 10));
  CHECK(Rat(p2.prime) < 2 * Rat(3675, 100));
}

TEST_CASE("m-thresholds of the main statements") {
  BoundContext c = ctx_for("x^3-2y^3", 1, Rat(1, 100));
  Interval ti = m_threshold_ineq(c);
  CHECK(std::abs(ti.mid_double() - 0.1733) < 1e-3);
  CHECK(qualifies(ti, 1) == Applicability::No);
  Interval te = m_threshold_eq(c);
  CHECK(std::abs(te.mid_double() - 0.2061) < 1e-3);
  CHECK(qualifies(te, 1) == Applicability::No);

  // epsilon near the top of its range pushes the threshold below 1
  BoundContext c2 = ctx_for("x^3-2y^3", 1, Rat(124, 1000));
  CHECK(qualifies(m_threshold_ineq(c2), 1) == Applicability::No);

  // big |D| cubic qualifies in equation mode at eps = 1/10
  BoundContext c3 = ctx_for("x^3+2000y^3", 1, Rat(1, 10));
  CHECK(qualifies(m_threshold_eq(c3), 1) == Applicability::Yes);

  CHECK_THROWS_AS(m_threshold_ineq(ctx_for("x^3-2y^3", 1, Rat(1, 2))), Error);
}

TEST_CASE("thresholds grow with |D|") {
  double prev = 0;
  for (long k : {2L, 20L, 200L, 2000L}) {
    BoundContext c = ctx_for(("x^3+" + std::to_string(k) + "y^3").c_str(), 1, Rat(1, 100));
    double v = m_threshold_ineq(c).mid_double();
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("large-solution threshold and branch") {
  BoundContext c = ctx_for("x^3-2y^3", 1, Rat(1, 100));
  Interval thr = large_threshold(c);
  CHECK(std::abs(thr.mid_double() - 3939.0) < 2.0);
  LargeBound b3 = bound_large(3);
  CHECK(b3.value == 33);
  CHECK(!b3.branch_9n);
  LargeBound b5 = bound_large(5);
  CHECK(b5.value == 45);
  CHECK(b5.branch_11n == 55);
}

TEST_CASE("small caps") {
  BoundContext c = ctx_for("x^3-2y^3", 1, Rat(1, 10));
  SmallCaps caps = small_count_caps(c);
  CHECK(caps.ineq_cap == Rat(7));
  CHECK(caps.eq_cap == Rat(12));
  // thresholds fail for this tiny |D|
  CHECK(caps.ineq_threshold_met == Applicability::No);
  CHECK(caps.eq_threshold_met == Applicability::No);
}

TEST_CASE("medium machinery") {
  BoundContext c = ctx_for("x^3-2y^3", 1, Rat(1, 10));
  auto win = medium_window_exact(c.M, 3);
  REQUIRE(win.has_value());
  CHECK(win->first == 4);
  CHECK(win->second == 32);
  auto [lo, hi] = medium_window(c.M, 3);
  CHECK(lo.contains(Rat(4)));
  CHECK(hi.contains(Rat(32)));

  Interval cap = nonreal_y_cap(c);
  CHECK(std::abs(cap.mid_double() - 7.0496) < 1e-3);
  Interval rcap = reducible_y_cap(c);
  CHECK(std::abs(rcap.mid_double() - 181.019) < 1e-2);

  CHECK(degree_disc_check(3, Int(-108)));
  CHECK(!degree_disc_check(6, Int(2)));  // (3 + 2 log 2)/log 3 = 3.99 < 6

  Interval mct = medium_cap_threshold(3, Int(-108));
  CHECK(qualifies(mct, 1, true) == Applicability::No);
  CHECK(qualifies(medium_cap_threshold(3, Int("-108000000")), 1, true) == Applicability::Yes);

  Interval let = large_eq_threshold(3, Int(-108));
  CHECK(std::abs(let.mid_double() - 0.03299) < 1e-4);
}

TEST_CASE("comparison table") {
  BoundContext c = ctx_for("x^3-2y^3", 1, Rat(1, 10));
  auto rows = comparison_bounds(c, Rat(1, 2), Rat(1));
  REQUIRE(rows.size() == 7);
  CHECK(rows[0].name == "Evertse-Gyory");
  CHECK(*rows[0].bound_value == Rat(126));  // N(3) = 18 * 7
  CHECK(rows[0].applicable == Applicability::No);
  CHECK(rows[1].name == "Gyory");
  CHECK(*rows[1].bound_value == Rat(385, 4));  // 75 + 5 * 17/4
  CHECK(rows[2].name == "Gyory (reducible)");
  CHECK(rows[3].name == "Stewart");
  CHECK(*rows[3].bound_value == Rat(4375));
  CHECK(rows[3].applicable == Applicability::Yes);
  CHECK(rows[4].name == "BPPW");
  CHECK(*rows[4].bound_value == Rat(2 * 9 * 1 + 39));  // omega(1) = 0
  // omega(12) = 2 feeds the BPPW count
  BoundContext c12 = ctx_for("x^3-2y^3", 12, Rat(1, 10));
  auto rows12 = comparison_bounds(c12);
  CHECK(*rows12[4].bound_value == Rat(2 * 9 * 3 + 39));
  CHECK(omega(Int(12)) == 2);
  // symbolic constants stay symbolic
  CHECK(rows[5].bound_text.substr(0, 2) == "C1");
  CHECK(rows[6].bound_text.substr(0, 2) == "C2");
}

TEST_CASE("matveev constants") {
  MatveevParams p = matveev_constants(1, 1, 1, Interval(1L));
  CHECK(std::abs(p.C.mid_double() - 5.6747e4) / 5.6747e4 < 1e-3);
  CHECK(std::abs(p.C0.mid_double() - 11.4) < 1e-9);
  CHECK(std::abs(p.W0.mid_double() - 1.4055) < 1e-4);
  CHECK_THROWS_AS(matveev_constants(0, 1, 1, Interval(1L)), Error);
  CHECK_THROWS_AS(matveev_constants(1, 3, 1, Interval(1L)), Error);

  Interval lower = matveev_lower_log(p, 1, Interval(2L));
  CHECK(mpfr_sgn(lower.hi()) < 0);
  CHECK(std::abs(lower.mid_double() + p.C.mid_double() * 11.4 * p.W0.mid_double() * 2) < 1.0);
}

TEST_CASE("s-unit bounds") {
  SUnitBounds b = sunit_bounds(3, 3, 0, Int(2), Int(108), 1);
  CHECK(std::abs(b.Delta.mid_double() - 6.616) < 1e-3);
  CHECK(b.c4.contains(Rat(2, 9)));  // (2!)^2 / (2 * 9)
  CHECK(std::abs(b.deltaK.mid_double() - 0.002176) < 1e-5);
  CHECK(mpfr_sgn(b.RS_upper.lo()) > 0);
  // c5 = c4 (deltaK / d1)^(2-s) grows as s exceeds 2
  CHECK(b.c5.mid_double() > b.c4.mid_double());
  CHECK_THROWS_AS(sunit_bounds(1, 3, 0, Int(2), Int(108), 1), Error);
}

TEST_CASE("gap constants: frozen values and bracket scaling") {
  BinaryForm F = parse_form("x^5-2y^5");
  RootSystem rs = RootSystem::solve(F);
  BoundContext c;
  c.n = 5;
  c.D = discriminant(F);
  c.m = 2;
  c.epsilon = Rat(1, 100);
  c.M = mahler_measure(rs);
  // force M = 2 for the frozen example (x^5 - 2y^5 has M = 2 exactly)
  REQUIRE(c.M.exact.has_value());
  REQUIRE(*c.M.exact == 2);

  GapConstants g = gap_constants(c, 6, Interval(1L));
  // (1/4) * 20^(3/4) * (21 ln 2)^(3/2) = 131.31...
  CHECK(std::abs(g.A_three.mid_double() - 131.31) < 0.05);
  // (1/(8 sqrt 2)) * 20^(3/4) * (27 ln 2)^(3/2) = 67.68...
  CHECK(std::abs(g.A_four.mid_double() - 67.68) < 0.05);

  // same-bracket scaling: the two leading factors differ by exactly 2 sqrt 2
  Interval first = pow(Interval(20L), Rat(3, 4));
  Interval b3 = Interval(12L) * Interval::ln2() + Interval(9L) * Interval::ln2();
  Interval b4 = Interval(15L) * Interval::ln2() + Interval(12L) * Interval::ln2();
  Interval lead3 = g.A_three / (first * pow(b3, Rat(3, 2)));
  Interval lead4 = g.A_four / (first * pow(b4, Rat(3, 2)));
  Interval ratio = lead3 / lead4;
  CHECK(ratio.contains(Interval(2L) * sqrt(Interval(2L))));

  // K at m = 2 is negative (log log 2 < 0): evaluated verbatim, K1 absent;
  // magnitude frozen as a regression from the first certified run
  BoundContext c3;
  c3.n = 3;
  c3.D = Int(-108);
  c3.m = 2;
  c3.epsilon = Rat(1, 100);
  c3.M = mahler_measure(parse_form("x^3-2y^3"));
  GapConstants g3 = gap_constants(c3, 6, Interval(1L));
  CHECK(g3.K.is_negative());
  CHECK(!g3.K1.has_value());
  CHECK(std::abs(g3.K.mid_double() + 1.209472384764e54) / 1.209472384764e54 < 1e-11);

  // m = 3 makes every log factor positive; K1 = (n sqrt n K)^(e/(e-1))
  c3.m = 3;
  GapConstants g4 = gap_constants(c3, 6, Interval(1L));
  CHECK(g4.K.is_positive());
  CHECK(std::abs(g4.K.mid_double() - 7.79809239373e54) / 7.79809239373e54 < 1e-11);
  REQUIRE(g4.K1.has_value());
  CHECK(std::abs(g4.K1->mid_double() - 9.3333826707e87) / 9.3333826707e87 < 1e-9);
  Interval e = Interval::e();
  Interval recomputed = pow(Interval(3L) * sqrt(Interval(3L)) * g4.K, e / (e - Interval(1L)));
  CHECK(g4.K1->overlaps(recomputed));

  // m = 1: the log m factors drop, K collapses to 0
  c3.m = 1;
  GapConstants g5 = gap_constants(c3, 6, Interval(1L));
  CHECK(g5.K.contains_zero());
}

TEST_CASE("height quotient bound") {
  Interval b0 = height_quotient_bound(3, Interval(0L), 1);
  CHECK(std::abs(b0.mid_double() - 2 * std::log(2.0)) < 1e-12);
  Interval b1 = height_quotient_bound(4, Interval(10L), 3);
  CHECK(std::abs(b1.mid_double() - 25.7807) < 1e-3);

  // fixture: all quotients (a_a - a_i)/(a_a - a_j) for x^3 - 2y^3 are sixth
  // roots of unity (the 2^(1/3) scale cancels), so their height is 0 and
  // every instance of the bound dominates.
  BinaryForm F = parse_form("x^3-2y^3");
  RootSystem rs = RootSystem::solve(F, 1e-30);
  Int D = discriminant(F);
  LogPoint p = phi_point(rs, D, 1, 1);
  Interval bound = height_quotient_bound(3, p.norm, 1);
  CHECK(mpfr_sgn(bound.lo()) > 0);  // h = 0 <= bound
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (a == i || a == j || i == j) continue;
        Box num(rs.root_box(a).re - rs.root_box(i).re, rs.root_box(a).im - rs.root_box(i).im);
        Box den(rs.root_box(a).re - rs.root_box(j).re, rs.root_box(a).im - rs.root_box(j).im);
        Box rho = num / den;
        // certified |rho| = 1 and rho^2 - rho + 1 = 0 or rho^2 + rho + 1 = 0
        CHECK(modulus(rho).contains(Rat(1)));
        Box sq = rho * rho;
        Box v1 = sq - rho;
        v1.re += Interval(1L);
        Box v2 = sq + rho;
        v2.re += Interval(1L);
        bool killed = v1.contains_zero() || v2.contains_zero();
        CHECK(killed);
      }
}

TEST_CASE("full report assembles and flags correctly") {
  BinaryForm F = parse_form("x^3+2000y^3");
  RootSystem rs = RootSystem::solve(F);
  BoundContext c = make_context(F, 1, Rat(1, 10), &rs);
  BoundReport rep = evaluate_bounds(c, F);
  REQUIRE(!rep.entries.empty());
  bool saw_eq_yes = false, saw_medium_yes = false;
  for (const auto& e : rep.entries) {
    if (e.id == "eq-count" && e.applicable == Applicability::Yes) saw_eq_yes = true;
    if (e.id == "medium-real-cap" && e.applicable == Applicability::Yes) saw_medium_yes = true;
  }
  CHECK(saw_eq_yes);
  CHECK(saw_medium_yes);

  // content warning propagates
  BinaryForm G = parse_form("2x^3-4y^3");
  RootSystem rsg = RootSystem::solve(G);
  BoundContext cg = make_context(G, 1, Rat(1, 10), &rsg);
  BoundReport repg = evaluate_bounds(cg, G);
  bool note_found = false;
  for (const auto& e : repg.entries)
    for (const auto& nn : e.notes)
      if (nn.find("content") != std::string::npos) note_found = true;
  CHECK(note_found);
}

TEST_CASE("near-boundary threshold comparison stays honest") {
  // |D| = 10^16, n = 3, eps = 1/100: threshold = 10^(16*0.115)/9.886 = 6.997,
  // so m = 7 sits just above it and m = 6 just below
  BoundContext c;
  c.n = 3;
  c.D = pow_int(Int(10), 16);
  c.m = 7;
  c.epsilon = Rat(1, 100);
  Interval thr = m_threshold_ineq(c);
  CHECK(std::abs(thr.mid_double() - 6.997) < 1e-2);
  CHECK(qualifies(thr, 7) == Applicability::No);
  CHECK(qualifies(thr, 6) == Applicability::Yes);
}
