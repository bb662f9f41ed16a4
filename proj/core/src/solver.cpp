#include "thue/solver.hpp"

#include <algorithm>

#include "thue/errors.hpp"

namespace thue {

const char* size_class_name(SizeClass c) {
  switch (c) {
    case SizeClass::Small: return "small";
    case SizeClass::Medium: return "medium";
    case SizeClass::Large: return "large";
    case SizeClass::AboveWindow: return "above-window";
    case SizeClass::Unclassified: return "unclassified";
  }
  return "?";
}

const char* mode_name(SolveMode m) { return m == SolveMode::Inequality ? "ineq" : "eq"; }

namespace {

// Integer candidates x with |F(x, y0)| possibly <= m. The set where
// |F(., y0)| <= m is a finite union of closed intervals whose endpoints are
// roots of F -+ m; only those segments (plus their boundary integers) are
// scanned, with exact sign tests on the feasibility of each gap.
std::vector<Int> candidate_xs(const BinaryForm& F, const Int& y0, const Int& m) {
  const int n = F.deg();
  Poly g(static_cast<size_t>(n) + 1);
  Int ypow = 1;
  for (int i = n; i >= 0; --i) {
    g[static_cast<size_t>(i)] = F.coeff(n - i) * ypow;  // coeff of x^i
    if (i > 0) ypow *= y0;
  }
  trim(g);
  if (degree(g) <= 0)
    fail(ErrCode::InvalidArgument, "degenerate form: F(x, y) constant in x for fixed y");

  Poly gp = g, gm = g;
  gp[0] -= m;  // F - m
  gm[0] += m;  // F + m
  std::vector<RealRoot> cuts;
  for (Poly* h : {&gp, &gm}) {
    Poly sf = squarefree_part(*h);
    if (degree(sf) <= 0) continue;
    for (auto& r : isolate_real_roots(sf)) {
      refine_real_root(sf, r, Rat(1, 4));
      cuts.push_back(r);
    }
  }
  std::vector<Int> xs;
  if (cuts.empty()) return xs;  // |F| > m on the whole line (|F| -> inf outward)
  std::sort(cuts.begin(), cuts.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.lo + a.hi < b.lo + b.hi; });

  auto add_range = [&](const Int& lo, const Int& hi) {
    for (Int x = lo; x <= hi; ++x) xs.push_back(x);
  };
  auto feasible_at = [&](const Rat& t) {
    // |g(t)| <= m  <=>  g(t) - m <= 0 and g(t) + m >= 0
    return sign_at(gp, t) <= 0 && sign_at(gm, t) >= 0;
  };

  // boundary integers around every cut
  for (const auto& c : cuts) add_range(floor_rat(c.lo) - 1, ceil_rat(c.hi) + 1);
  // interior gaps between consecutive cuts where |F| <= m throughout
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rat a = cuts[i].hi, b = cuts[i + 1].lo;
    if (a >= b) continue;
    if (!feasible_at((a + b) / 2)) continue;
    add_range(ceil_rat(a), floor_rat(b));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

EnumerationResult enumerate_solutions(const BinaryForm& F, const Int& m, const Int& y_max,
                                      SolveMode mode, bool exclude_zero) {
  if (F.deg() < 3) fail(ErrCode::DegreeTooSmall, "solution counting is for degree >= 3");
  if (m <= 0) fail(ErrCode::InvalidArgument, "m must be positive");
  if (y_max < 0) fail(ErrCode::InvalidArgument, "y_max must be >= 0");
  EnumerationResult res;
  res.mode = mode;
  res.m = m;
  res.y_max = y_max;
  res.exclude_zero = exclude_zero;
  res.complete_up_to = y_max;

  auto admit = [&](const Int& v) {
    if (mode == SolveMode::Equation) return abs(v) == m;
    if (exclude_zero && v == 0) return false;
    return abs(v) <= m;
  };

  // y = 0: canonical representative (1, 0); gcd(1, 0) = 1.
  {
    Int v = F.evaluate(1, 0);
    if (admit(v)) res.solutions.push_back(Solution{1, 0, v});
  }

  for (Int y = 1; y <= y_max; ++y) {
    for (const Int& x : candidate_xs(F, y, m)) {
      Int v = F.evaluate(x, y);
      if (!admit(v)) continue;
      if (gcd(x, y) != 1) continue;
      res.solutions.push_back(Solution{x, y, v});
    }
  }
  std::sort(res.solutions.begin(), res.solutions.end(), [](const Solution& a, const Solution& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });
  return res;
}

int related_root_index(RootSystem& rs, const Int& x, const Int& y, bool* tie_out) {
  if (x == 0 && y == 0) fail(ErrCode::InvalidArgument, "related root of (0, 0)");
  if (tie_out) *tie_out = false;
  const int n = rs.n();
  if (y == 0) {
    // all distances equal |x|: full tie, lowest index wins
    if (tie_out) *tie_out = true;
    return 0;
  }
  double tol = rs.current_tol();
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Interval> d(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) d[static_cast<size_t>(k)] = rs.linear_factor_abs(k, x, y);
    // candidate set: indices whose distance could be minimal; conjugate
    // pairs have exactly equal distance for integer (x, y), keep the first.
    int best = -1;
    for (int k = 0; k < n; ++k) {
      if (rs.conj_index(k) < k) continue;  // lower pair member represents both
      if (best < 0 || certainly_less(d[static_cast<size_t>(k)], d[static_cast<size_t>(best)]))
        best = k;
    }
    bool unique = true;
    for (int k = 0; k < n; ++k) {
      if (k == best || rs.conj_index(k) < k) continue;
      if (!certainly_less(d[static_cast<size_t>(best)], d[static_cast<size_t>(k)]) &&
          !certainly_less(d[static_cast<size_t>(k)], d[static_cast<size_t>(best)]))
        unique = false;
    }
    if (unique) {
      if (tie_out && rs.conj_index(best) != best) *tie_out = true;  // conjugate tie
      return best;
    }
    tol /= 1e12;
    rs.refine(tol);
  }
  // unresolved at budget: treat as tie, lowest candidate index
  if (tie_out) *tie_out = true;
  const int n2 = rs.n();
  std::vector<Interval> d(static_cast<size_t>(n2));
  for (int k = 0; k < n2; ++k) d[static_cast<size_t>(k)] = rs.linear_factor_abs(k, x, y);
  int best = 0;
  for (int k = 1; k < n2; ++k)
    if (certainly_less(d[static_cast<size_t>(k)], d[static_cast<size_t>(best)])) best = k;
  return best;
}

namespace {

// Throws undecided_error when the enclosure straddles a threshold.
SizeClass classify_with_enclosure(const MahlerMeasure& M, int n, const Int& y) {
  long k = 1 + static_cast<long>(n - 1) * (n - 1);
  if (M.exact) {
    Int m2 = (*M.exact) * (*M.exact);
    Int mk = pow_int(*M.exact, static_cast<unsigned long>(k));
    if (y < m2) return SizeClass::Small;
    if (y < mk) return SizeClass::Medium;
    return SizeClass::Large;
  }
  Rat yq{y};
  Interval m2 = sqr(M.value);
  if (mpfr_cmp_q(m2.lo(), yq.get_mpq_t()) > 0) return SizeClass::Small;  // y < M^2
  if (mpfr_cmp_q(m2.hi(), yq.get_mpq_t()) > 0) throw undecided_error{"y vs M^2 boundary"};
  Interval mk = pow_si(M.value, k);
  if (mpfr_cmp_q(mk.lo(), yq.get_mpq_t()) > 0) return SizeClass::Medium;  // y < M^k
  if (mpfr_cmp_q(mk.hi(), yq.get_mpq_t()) > 0) throw undecided_error{"y vs M^(1+(n-1)^2) boundary"};
  return SizeClass::Large;
}

}  // namespace

SizeClass classify_solution(const MahlerMeasure& M, int n, const Int& y) {
  if (y < 0) fail(ErrCode::InvalidArgument, "classification needs the canonical sign y >= 0");
  if (y == 0) return SizeClass::Small;
  try {
    return classify_with_enclosure(M, n, y);
  } catch (const undecided_error& e) {
    fail(ErrCode::UnresolvableBoundary, std::string("classification boundary: ") + e.what);
  }
}

SizeClass classify_refining(RootSystem& rs, MahlerMeasure& M, const Int& y) {
  if (y < 0) fail(ErrCode::InvalidArgument, "classification needs the canonical sign y >= 0");
  if (y == 0) return SizeClass::Small;
  double rel = 1e-12;
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      return classify_with_enclosure(M, rs.n(), y);
    } catch (const undecided_error&) {
      rel /= 1e12;
      M = mahler_measure(rs, rel);
    }
  }
  fail(ErrCode::UnresolvableBoundary,
       "y = " + y.get_str() + " cannot be separated from the Mahler thresholds");
}

void annotate(EnumerationResult& result, RootSystem& rs, MahlerMeasure& M) {
  for (auto& s : result.solutions) {
    bool tie = false;
    s.related_root = related_root_index(rs, s.x, s.y, &tie);
    s.related_tie = tie;
    s.size_class = classify_refining(rs, M, s.y);
  }
}

Interval lewis_mahler_rhs(const BinaryForm& F, const Interval& mahler, const Int& D, const Int& x,
                          const Int& y) {
  if (y == 0) fail(ErrCode::ZeroY, "Lewis-Mahler needs y != 0");
  if (D == 0) fail(ErrCode::InvalidArgument, "Lewis-Mahler needs D != 0");
  const int n = F.deg();
  Interval num = pow_si(Interval(2L), n - 1) *
                 pow(Interval(static_cast<long>(n)), Rat(2 * n - 1, 2)) *
                 pow_si(mahler, n - 2) * Interval(Int(abs(F.evaluate(x, y))));
  Interval den = sqrt(Interval(Int(abs(D)))) * pow_si(Interval(Int(abs(y))), n);
  return num / den;
}

Interval min_root_distance(RootSystem& rs, const Int& x, const Int& y) {
  if (y == 0) fail(ErrCode::ZeroY, "root distance needs y != 0");
  Interval best = rs.linear_factor_abs(0, x, y);
  for (int k = 1; k < rs.n(); ++k) best = min(best, rs.linear_factor_abs(k, x, y));
  return best / abs(Interval(y));
}

bool lewis_mahler_holds(RootSystem& rs, const Interval& mahler, const Int& D, const Int& x,
                        const Int& y) {
  Interval rhs = lewis_mahler_rhs(rs.form(), mahler, D, x, y);
  double tol = rs.current_tol();
  for (int attempt = 0; attempt < 5; ++attempt) {
    Interval dist = min_root_distance(rs, x, y);
    if (mpfr_cmp(dist.hi(), rhs.lo()) <= 0) return true;   // certified holds
    if (mpfr_cmp(dist.lo(), rhs.hi()) > 0) return false;   // certified violation
    tol /= 1e12;
    rs.refine(tol);
  }
  fail(ErrCode::NonConvergence, "Lewis-Mahler comparison undecided at budget");
}

}  // namespace thue
