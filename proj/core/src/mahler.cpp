#include <cmath>
#include <algorithm>

#include "thue/errors.hpp"
#include "thue/roots.hpp"

namespace thue {

namespace {

enum class CirclePos { Inside, Outside, Unresolved };

CirclePos classify_modulus(const Interval& m) {
  if (m.is_positive() && mpfr_cmp_ui(m.hi(), 1) < 0) return CirclePos::Inside;
  if (mpfr_cmp_ui(m.lo(), 1) > 0) return CirclePos::Outside;
  return CirclePos::Unresolved;
}

// g(X) = sum b_j X^(k-j) (X^2+1)^j for palindromic g of even degree 2k;
// returns the Chebyshev-like image G(w) with w = X + 1/X, or nullopt.
std::optional<Poly> halve_palindromic(const Poly& g) {
  int d = degree(g);
  if (d % 2 != 0) return std::nullopt;
  int k = d / 2;
  Poly R = g;
  Poly G(static_cast<size_t>(k) + 1, Int(0));
  for (int j = k; j >= 0; --j) {
    Int b = static_cast<size_t>(k + j) < R.size() ? R[static_cast<size_t>(k + j)] : Int(0);
    G[static_cast<size_t>(j)] = b;
    if (b != 0) {
      // subtract b * X^(k-j) * (X^2+1)^j
      Poly term(static_cast<size_t>(k + j) + 1, Int(0));
      for (int t = 0; t <= j; ++t)
        term[static_cast<size_t>(k - j + 2 * t)] =
            b * binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(t));
      R = poly_sub(R, term);
    }
  }
  if (!is_zero(R)) return std::nullopt;
  trim(G);
  return G;
}

// Exact test: all roots of squarefree g on the unit circle.
bool all_roots_on_unit_circle(Poly g) {
  trim(g);
  if (degree(g) <= 0) return true;
  if (g[0] == 0) return false;  // root at 0
  // strip roots +-1 (each at most once, g squarefree)
  Poly one = {-1, 1}, mone = {1, 1};
  if (eval_int(g, 1) == 0) g = poly_divexact(g, one);
  if (degree(g) >= 1 && eval_int(g, -1) == 0) g = poly_divexact(g, mone);
  if (degree(g) <= 0) return true;
  Poly grev = reciprocal(g);
  bool pal = (g == grev);
  if (!pal) {
    Poly neg = poly_neg(grev);
    if (g == neg) return false;  // antipalindromic yet 1 removed: has off-circle roots
    return false;
  }
  auto G = halve_palindromic(g);
  if (!G) return false;
  int k = degree(g) / 2;
  return count_real_roots_between(*G, Rat(-2), Rat(2)) == k;
}

struct PartMeasure {
  Interval value;
  std::optional<Int> exact;
};

PartMeasure measure_of_part(RootSystem& rs, const std::vector<int>& indices, const Poly& part,
                            double rel_tol, int depth);

// Indices of rs roots that are roots of `part` (certified by interval
// evaluation being the only consistent assignment: part divides f, so each
// root of f belongs to exactly one factor; we test containment of 0 in
// part(box) after refinement).
std::vector<int> match_roots(RootSystem& rs, const Poly& part, const Poly& other) {
  std::vector<int> mine;
  double tol = std::min(rs.current_tol(), 1e-30);
  for (int attempt = 0; attempt < 6; ++attempt) {
    mine.clear();
    bool ambiguous = false;
    PrecisionGuard guard(static_cast<mpfr_prec_t>(-std::log2(tol) * 2 + 96));
    for (int k = 0; k < rs.n(); ++k) {
      Box pv = eval_box(part, rs.root_box(k));
      Box ov = eval_box(other, rs.root_box(k));
      bool in_part = pv.contains_zero();
      bool in_other = ov.contains_zero();
      if (in_part && in_other) {
        ambiguous = true;
        break;
      }
      if (in_part) mine.push_back(k);
    }
    if (!ambiguous) return mine;
    tol /= 1e10;
    rs.refine(tol);
  }
  fail(ErrCode::NonConvergence, "could not attribute roots to coprime factors");
}

PartMeasure measure_of_part(RootSystem& rs, const std::vector<int>& indices, const Poly& part,
                            double rel_tol, int depth) {
  // Refinement loop: classify each root in/out, tightening as needed.
  double tol = std::min(rs.current_tol(), 1e-30);
  std::vector<CirclePos> pos(indices.size());
  for (int attempt = 0;; ++attempt) {
    bool unresolved = false;
    for (size_t i = 0; i < indices.size(); ++i) {
      pos[i] = classify_modulus(modulus(rs.root_box(indices[i])));
      if (pos[i] == CirclePos::Unresolved) unresolved = true;
    }
    if (!unresolved || attempt >= 3) break;
    tol /= 1e15;
    rs.refine(tol);
  }

  bool any_inside = false, any_outside = false, any_unresolved = false;
  for (auto p : pos) {
    any_inside |= (p == CirclePos::Inside);
    any_outside |= (p == CirclePos::Outside);
    any_unresolved |= (p == CirclePos::Unresolved);
  }

  Interval prod(1L);
  for (int k : indices) prod *= max(Interval(1L), modulus(rs.root_box(k)));
  Interval lead{Int(abs(leading(part)))};
  PartMeasure out;
  out.value = lead * prod;

  if (!any_unresolved) {
    if (!any_inside) {
      // every root weakly outside: M = |constant term| needs none strictly
      // inside, which holds here
      out.exact = abs(part[0]);
    } else if (!any_outside) {
      out.exact = abs(leading(part));
    }
    return out;
  }
  // Unresolved roots may lie on the circle: exact closed-form tests.
  if (all_roots_on_unit_circle(part)) {
    out.exact = abs(leading(part));
    return out;
  }
  if (depth > 0) {
    // split off the inversion-stable part g = gcd(part, reciprocal(part))
    Poly g = gcd_poly(part, reciprocal(part));
    if (degree(g) > 0 && degree(g) < degree(part)) {
      Poly h = poly_divexact(part, g);
      Int c = leading(part) / (leading(g) * leading(h));
      auto gi = match_roots(rs, g, h);
      std::vector<int> hi;
      for (int k : indices)
        if (std::find(gi.begin(), gi.end(), k) == gi.end()) hi.push_back(k);
      std::vector<int> gi_mine;
      for (int k : indices)
        if (std::find(gi.begin(), gi.end(), k) != gi.end()) gi_mine.push_back(k);
      PartMeasure mg = measure_of_part(rs, gi_mine, g, rel_tol, depth - 1);
      PartMeasure mh = measure_of_part(rs, hi, h, rel_tol, depth - 1);
      out.value = Interval(Int(abs(c))) * mg.value * mh.value;
      if (mg.exact && mh.exact) out.exact = abs(c) * (*mg.exact) * (*mh.exact);
      return out;
    }
  }
  return out;
}

}  // namespace

MahlerMeasure mahler_measure(RootSystem& rs, double rel_tol) {
  PrecisionGuard guard(256);
  const Poly f = rs.form().univariate();
  std::vector<int> all(static_cast<size_t>(rs.n()));
  for (int i = 0; i < rs.n(); ++i) all[static_cast<size_t>(i)] = i;

  PartMeasure pm = measure_of_part(rs, all, f, rel_tol, 1);
  MahlerMeasure m;
  m.exact = pm.exact;

  // Tighten the interval to the requested relative width.
  double tol = rs.current_tol();
  Interval v = pm.value;
  for (int attempt = 0; attempt < 8 && !v.rel_width_below(rel_tol); ++attempt) {
    tol /= 1e10;
    rs.refine(tol);
    Interval prod(1L);
    for (int k = 0; k < rs.n(); ++k) prod *= max(Interval(1L), modulus(rs.root_box(k)));
    v = Interval(Int(abs(rs.form().a0()))) * prod;
  }
  if (!v.rel_width_below(rel_tol))
    fail(ErrCode::NonConvergence, "Mahler enclosure did not reach the requested tolerance");
  if (m.exact && !v.contains(Rat(*m.exact)))
    fail(ErrCode::NonConvergence, "exact Mahler value escaped its enclosure");
  m.value = v;
  return m;
}

MahlerMeasure mahler_measure(const BinaryForm& F, double rel_tol) {
  if (F.a0() == 0)
    fail(ErrCode::ZeroLeadingCoefficient, "Mahler measure needs a0 != 0 (apply a shift first)");
  RootSystem rs = RootSystem::solve(F);
  return mahler_measure(rs, rel_tol);
}

FormInvariants compute_invariants(const BinaryForm& F, double mahler_rel_tol) {
  FormInvariants inv;
  inv.D = discriminant(F);
  inv.H = F.naive_height();
  inv.irreducibility = is_irreducible(F.a0() != 0 ? F : gl2_apply(F, IntMatrix2{1, 0,
                                                                  Int(normalizing_shift(F)), 1}))
                           .verdict;
  if (inv.D == 0 || F.a0() == 0) return inv;  // root data unavailable
  RootSystem rs = RootSystem::solve(F);
  inv.q = rs.q();
  inv.mahler = mahler_measure(rs, mahler_rel_tol);
  const int n = F.deg();
  Interval floor = pow(Interval(Int(abs(inv.D))) / pow_si(Interval(static_cast<long>(n)), n),
                       Rat(1, 2 * n - 2));
  if (mpfr_cmp(inv.mahler.as_interval().hi(), floor.lo()) < 0)
    fail(ErrCode::NonConvergence, "Mahler enclosure fell below its discriminant floor");
  if (inv.irreducibility == Irreducibility::Irreducible && F.content() == 1) {
    Int b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
    Interval lo = Interval(inv.H) / Interval(b);
    Interval hi = sqrt(Interval(static_cast<long>(n + 1))) * Interval(inv.H);
    if (mpfr_cmp(inv.mahler.as_interval().hi(), lo.lo()) < 0 ||
        mpfr_cmp(inv.mahler.as_interval().lo(), hi.hi()) > 0)
      fail(ErrCode::NonConvergence, "Mahler enclosure escaped the height sandwich");
  }
  return inv;
}

}  // namespace thue
