#include "thue/logcurve.hpp"

#include <algorithm>
#include <cmath>

#include "thue/errors.hpp"

namespace thue {

namespace {

// Re-run fn with tighter enclosures until interval decisions stop failing.
template <class Fn>
auto refining(RootSystem& rs, Fn&& fn) -> decltype(fn()) {
  double tol = rs.current_tol();
  for (int attempt = 0; attempt < 6; ++attempt) {
    try {
      return fn();
    } catch (const undecided_error&) {
      tol /= 1e12;
      rs.refine(tol);
    }
  }
  fail(ErrCode::NonConvergence, "log-curve computation undecided at enclosure budget");
}

std::vector<int> perm_with_last(const RootSystem& rs, int chosen) {
  std::vector<int> perm;
  for (int k = 0; k < rs.n(); ++k)
    if (k != chosen) perm.push_back(k);
  perm.push_back(chosen);
  return perm;
}

Interval norm_of(const std::vector<Interval>& v) {
  Interval s(0L);
  for (const auto& c : v) s += sqr(c);
  return sqrt(s);
}

Interval dot(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  Interval s(0L);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// |t - alpha_k| for rational t.
Interval dist_to_root(RootSystem& rs, const Rat& t, int k) {
  Box d(Interval(t) - rs.root_box(k).re, -rs.root_box(k).im);
  return modulus(d);
}

// |alpha_j - alpha_k|.
Interval root_pair_dist(RootSystem& rs, int j, int k) {
  return modulus(Box(rs.root_box(j).re - rs.root_box(k).re, rs.root_box(j).im - rs.root_box(k).im));
}

void check_chosen_real(const RootSystem& rs, int chosen) {
  if (chosen < 0 || chosen >= rs.n() || !rs.is_real_root(chosen))
    fail(ErrCode::NotRealRoot, "the chosen index must be a certified real root");
}

}  // namespace

LogPoint phi_point(RootSystem& rs, const Int& D, const Int& x, const Int& y) {
  if (D == 0) fail(ErrCode::InvalidArgument, "log curve needs D != 0");
  Int v = rs.form().evaluate(x, y);
  if (v == 0) fail(ErrCode::ZeroValue, "Phi is undefined where F(x, y) = 0");
  const int n = rs.n();
  if (n < 3) fail(ErrCode::DegreeTooSmall, "log curve needs degree >= 3");
  return refining(rs, [&]() {
    LogPoint p;
    p.x = x;
    p.y = y;
    Interval logD = log(Interval(Int(abs(D)))) / Interval(static_cast<long>(n) * (n - 2));
    Interval logF = log(Interval(Int(abs(v)))) / Interval(static_cast<long>(n));
    p.coords.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      Interval lin = log(rs.linear_factor_abs(k, x, y));
      Interval fp = log(rs.fprime_abs(k)) / Interval(static_cast<long>(n - 2));
      p.coords[static_cast<size_t>(k)] = logD + lin - logF - fp;
    }
    p.norm = norm_of(p.coords);
    return p;
  });
}

Interval phi_norm_lower(int n, const Int& D, const Int& m, SolveMode mode) {
  if (D == 0) fail(ErrCode::InvalidArgument, "needs D != 0");
  Interval dpow = pow(Interval(Int(abs(D))), Rat(1, static_cast<long>(n) * (n - 1)));
  if (mode == SolveMode::Equation) return log(dpow) / Interval(2L);
  Interval denom = Interval(2L) * pow(Interval(m), Rat(2, n));
  return log(dpow / denom) / Interval(2L);
}

Interval phi_norm_origin_bound(int n, const Int& D, const Interval& M) {
  Interval inner = pow(Interval(Int(abs(D))), Rat(1, static_cast<long>(n) * (n - 2))) *
                   pow(M, Rat(2 * n - 2, n - 2));
  return sqrt(Interval(static_cast<long>(n))) * log(inner);
}

Interval phi_norm_upper(RootSystem& rs, const Int& D, const Interval& M, const Int& x, const Int& y,
                        int related) {
  const int n = rs.n();
  Int v = rs.form().evaluate(x, y);
  if (v == 0) fail(ErrCode::ZeroValue, "norm bound undefined where F vanishes");
  return refining(rs, [&]() {
    Interval ratio =
        pow(Interval(Int(abs(v))), Rat(1, n)) / rs.linear_factor_abs(related, x, y);
    Interval first =
        Interval(static_cast<long>(n)) * sqrt(Interval(static_cast<long>(n))) * log(ratio);
    return first + phi_norm_origin_bound(n, D, M);
  });
}

Interval norm_domination_y_floor(const BinaryForm& F, const Interval& M, const Int& m) {
  const int n = F.deg();
  Interval a0pow = pow(Interval(Int(abs(F.a0()))), Rat(1, n - 1));
  Interval expo = Interval(4L) + Interval(4L) * sqrt(Interval(static_cast<long>(n)));
  return Interval(2L) * a0pow * pow_si(Interval(static_cast<long>(n)), 3) *
         pow(Interval(m), Rat(1, n)) * pow(Interval(F.naive_height()), Rat(1, n - 2)) *
         pow(M, expo);
}

Interval near_line_y_floor(int n, const Int& D, const Interval& M, const Int& m,
                           const Interval& C) {
  Interval expo = Interval(Rat(2 * n - 2)) / Interval(Rat(static_cast<long>(n) * (n - 2))) +
                  Interval(static_cast<long>(n - 1));
  return C * Interval(2L) / sqrt(Interval(3L)) * pow_si(Interval(static_cast<long>(n + 1)), n) *
         sqrt(Interval(static_cast<long>(n))) * pow_si(Interval(m), n) *
         pow(Interval(Int(abs(D))), Rat(1, static_cast<long>(n) * n * (n - 2))) * pow(M, expo);
}

BasisSet BasisSet::make(int n) {
  BasisSet bs;
  bs.n = n;
  bs.b.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(-1, n)));
  for (int i = 0; i < n; ++i) bs.b[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rat(n - 1, n);
  bs.c.resize(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<Rat> ci = bs.b[static_cast<size_t>(i)];
    for (int k = 0; k < n; ++k)
      ci[static_cast<size_t>(k)] += bs.b[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] / (n - 1);
    bs.c[static_cast<size_t>(i)] = std::move(ci);
  }
  return bs;
}

Rat BasisSet::c_norm_sq() const {
  return Rat(static_cast<long>(n) * n - 3 * n + 2) / (Rat(n - 1) * Rat(n - 1));
}

BasisDecomposition basis_decomposition(RootSystem& rs, const Int& x, const Int& y, int chosen) {
  if (y == 0) fail(ErrCode::ZeroY, "the c-basis decomposition uses t = x/y");
  check_chosen_real(rs, chosen);
  const int n = rs.n();
  Rat t = Rat(x) / Rat(y);
  t.canonicalize();
  return refining(rs, [&]() {
    BasisDecomposition dec;
    dec.chosen = chosen;
    dec.permutation = perm_with_last(rs, chosen);
    dec.c_coeffs.clear();
    auto w_of = [&](int root) {
      return log(dist_to_root(rs, t, root)) -
             log(rs.fprime_abs(root)) / Interval(static_cast<long>(n - 2));
    };
    Interval wsum(0L);
    for (int i = 0; i + 1 < n; ++i) {
      Interval w = w_of(dec.permutation[static_cast<size_t>(i)]);
      dec.c_coeffs.push_back(w);
      wsum += w;
    }
    dec.e_last = w_of(chosen) - wsum / Interval(static_cast<long>(n - 1));
    return dec;
  });
}

std::vector<Interval> reconstruct_from_decomposition(const BasisDecomposition& dec,
                                                     const BasisSet& basis) {
  const int n = basis.n;
  std::vector<Interval> out(static_cast<size_t>(n), Interval(0L));
  for (int i = 0; i + 1 < n; ++i)
    for (int k = 0; k < n; ++k)
      out[static_cast<size_t>(k)] +=
          dec.c_coeffs[static_cast<size_t>(i)] * Interval(basis.c[static_cast<size_t>(i)][static_cast<size_t>(k)]);
  for (int k = 0; k < n; ++k)
    out[static_cast<size_t>(k)] +=
        dec.e_last * Interval(basis.b[static_cast<size_t>(n - 1)][static_cast<size_t>(k)]);
  return out;
}

LineDistance line_distance(RootSystem& rs, const Interval& M, const Int& x,
                           const Int& y, int real_root_index, bool require_related) {
  check_chosen_real(rs, real_root_index);
  if (y == 0) fail(ErrCode::ZeroY, "line distance uses t = x/y");
  if (require_related) {
    int rel = related_root_index(rs, x, y);
    if (rel != real_root_index)
      fail(ErrCode::NotRelated, "(x, y) is not related to the chosen real root");
  }
  const int n = rs.n();
  Rat t = Rat(x) / Rat(y);
  t.canonicalize();
  BasisSet basis = BasisSet::make(n);
  auto perm = perm_with_last(rs, real_root_index);

  return refining(rs, [&]() {
    LineDistance out;
    // formula route
    std::vector<Interval> V(static_cast<size_t>(n), Interval(0L));
    for (int i = 0; i + 1 < n; ++i) {
      int root = perm[static_cast<size_t>(i)];
      Interval u = log(dist_to_root(rs, t, root) / root_pair_dist(rs, real_root_index, root));
      for (int k = 0; k < n; ++k)
        V[static_cast<size_t>(k)] +=
            u * Interval(basis.c[static_cast<size_t>(i)][static_cast<size_t>(k)]);
    }
    out.distance = norm_of(V);

    // direct orthogonal-projection route against the consistent-exponent line
    BasisDecomposition dec = basis_decomposition(rs, x, y, real_root_index);
    std::vector<Interval> P = reconstruct_from_decomposition(dec, basis);
    auto offsets = [&](const Rat& expo_den) {
      std::vector<Interval> L0(static_cast<size_t>(n), Interval(0L));
      for (int i = 0; i + 1 < n; ++i) {
        int root = perm[static_cast<size_t>(i)];
        Interval l = log(root_pair_dist(rs, real_root_index, root)) -
                     log(rs.fprime_abs(root)) * Interval(expo_den);
        for (int k = 0; k < n; ++k)
          L0[static_cast<size_t>(k)] +=
              l * Interval(basis.c[static_cast<size_t>(i)][static_cast<size_t>(k)]);
      }
      return L0;
    };
    auto residual_to_line = [&](const std::vector<Interval>& L0) {
      std::vector<Interval> W(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) W[static_cast<size_t>(k)] = P[static_cast<size_t>(k)] - L0[static_cast<size_t>(k)];
      // subtract the component along b_n; ||b_n||^2 = (n-1)/n
      std::vector<Interval> bn(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k)
        bn[static_cast<size_t>(k)] = Interval(basis.b[static_cast<size_t>(n - 1)][static_cast<size_t>(k)]);
      Interval comp = dot(W, bn) / Interval(Rat(n - 1, n));
      for (int k = 0; k < n; ++k) W[static_cast<size_t>(k)] -= comp * bn[static_cast<size_t>(k)];
      return norm_of(W);
    };
    out.direct_distance = residual_to_line(offsets(Rat(1, n - 2)));
    out.stated_line_distance = residual_to_line(offsets(Rat(1, n - 1)));

    // size bound in terms of |t - alpha_n|
    Interval factor = Interval(2L) * pow_si(M, n - 1) *
                      pow_si(Interval(static_cast<long>(n + 1)), n) *
                      sqrt(Interval(static_cast<long>(n) * (static_cast<long>(n) * n - 3 * n + 2))) /
                      (sqrt(Interval(3L)) * Interval(static_cast<long>(n - 1)));
    out.upper_bound = factor * dist_to_root(rs, t, real_root_index);
    out.bound_holds_certified = mpfr_cmp(out.distance.hi(), out.upper_bound.lo()) <= 0;
    return out;
  });
}

Interval t_ij(RootSystem& rs, const Rat& t, int i, int j, int chosen) {
  check_chosen_real(rs, chosen);
  if (i == j || i == chosen || j == chosen)
    fail(ErrCode::IndexClash, "t_ij needs distinct indices away from the chosen root");
  return refining(rs, [&]() {
    Interval first = log(root_pair_dist(rs, chosen, i) / root_pair_dist(rs, chosen, j));
    Interval second = log(dist_to_root(rs, t, j) / dist_to_root(rs, t, i));
    return first + second;
  });
}

Interval t_min_abs(RootSystem& rs, const Rat& t, int chosen) {
  check_chosen_real(rs, chosen);
  std::optional<Interval> best;
  for (int i = 0; i < rs.n(); ++i) {
    if (i == chosen) continue;
    for (int j = 0; j < rs.n(); ++j) {
      if (j == chosen || j == i) continue;
      Interval v = abs(t_ij(rs, t, i, j, chosen));
      best = best ? min(*best, v) : v;
    }
  }
  if (!best) fail(ErrCode::InvalidArgument, "no admissible index pair");
  return *best;
}

Interval cross_ratio_abs_log(RootSystem& rs, const Rat& t, int i, int j, int chosen) {
  check_chosen_real(rs, chosen);
  if (i == j || i == chosen || j == chosen)
    fail(ErrCode::IndexClash, "cross ratio needs distinct indices away from the chosen root");
  return refining(rs, [&]() {
    Box an = rs.root_box(chosen);
    Box ai = rs.root_box(i);
    Box aj = rs.root_box(j);
    Box tp(Interval(t), Interval(0L));
    Box cr = ((an - ai) * (tp - aj)) / ((an - aj) * (tp - ai));
    return abs_log_principal(cr);
  });
}

TnewIdentity tnew_identity(RootSystem& rs, const Rat& t, int chosen) {
  check_chosen_real(rs, chosen);
  Poly f = rs.form().univariate();
  if (sign_at(f, t) == 0) fail(ErrCode::RootInput, "t must not be a root");
  const int n = rs.n();
  auto perm = perm_with_last(rs, chosen);
  BasisSet basis = BasisSet::make(n);
  auto beta = [&](int i) {  // 1-based with wraparound over the n-1 non-chosen roots
    int idx = (i - 1) % (n - 1);
    return perm[static_cast<size_t>(idx)];
  };
  return refining(rs, [&]() {
    TnewIdentity out;
    Interval lhs(0L);
    for (int k = 1; k <= n - 2; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        int bi = beta(i), bik = beta(i + k);
        Interval num = dist_to_root(rs, t, bi) * root_pair_dist(rs, chosen, bik);
        Interval den = root_pair_dist(rs, chosen, bi) * dist_to_root(rs, t, bik);
        lhs += sqr(log(num / den));
      }
    out.lhs = lhs;
    std::vector<Interval> V(static_cast<size_t>(n), Interval(0L));
    for (int i = 0; i + 1 < n; ++i) {
      int root = perm[static_cast<size_t>(i)];
      Interval u = log(dist_to_root(rs, t, root) / root_pair_dist(rs, chosen, root));
      for (int kk = 0; kk < n; ++kk)
        V[static_cast<size_t>(kk)] +=
            u * Interval(basis.c[static_cast<size_t>(i)][static_cast<size_t>(kk)]);
    }
    Interval vn = norm_of(V);
    out.rhs = Interval(2L * n - 2) * sqr(vn);
    double l = out.lhs.mid_double(), r = out.rhs.mid_double();
    double scale = std::max({std::abs(l), std::abs(r), 1e-30});
    out.residual_rel = std::abs(l - r) / scale;
    return out;
  });
}

GapDiagnostics gap_diagnostics_from_points(const std::vector<std::vector<Interval>>& pts,
                                           const Interval& A) {
  if (pts.size() != 3 && pts.size() != 4)
    fail(ErrCode::WrongCount, "gap diagnostics need 3 or 4 points");
  GapDiagnostics g;
  for (const auto& p : pts) g.r.push_back(norm_of(p));
  // order by norm midpoint; the triangle uses the extreme points
  std::vector<size_t> order(pts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return g.r[a].mid_double() < g.r[b].mid_double(); });
  size_t i1 = order[0], i2 = order[1], i3 = order.back();
  auto diff_norm = [&](size_t a, size_t b) {
    std::vector<Interval> d(pts[a].size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = pts[a][k] - pts[b][k];
    return norm_of(d);
  };
  Interval a = diff_norm(i2, i1), b = diff_norm(i3, i2), c = diff_norm(i3, i1);
  // sort sides ascending by midpoint
  std::vector<Interval> sides = {a, b, c};
  std::sort(sides.begin(), sides.end(),
            [](const Interval& x, const Interval& y) { return x.mid_double() < y.mid_double(); });
  g.side_a = sides[0];
  g.side_b = sides[1];
  g.side_c = sides[2];
  Interval s = (g.side_a + g.side_b + g.side_c) / Interval(2L);
  g.heron_area = sqrt(s * (s - g.side_a) * (s - g.side_b) * (s - g.side_c));
  // Gram area on the triangle edges
  std::vector<Interval> u(pts[i1].size()), v(pts[i1].size());
  for (size_t k = 0; k < u.size(); ++k) {
    u[k] = pts[i2][k] - pts[i1][k];
    v[k] = pts[i3][k] - pts[i1][k];
  }
  Interval uu = dot(u, u), vv = dot(v, v), uv = dot(u, v);
  g.gram_area = sqrt(max(uu * vv - sqr(uv), Interval(0L))) / Interval(2L);
  g.degenerate = !(g.side_a + g.side_b - g.side_c).is_positive();
  g.A = A;
  const long n_for_norm = static_cast<long>(pts[0].size());
  Interval nsqrtn = Interval(n_for_norm) * sqrt(Interval(n_for_norm));
  Interval r_first = g.r[order[0]];
  Interval r_last = g.r[order.back()];
  g.verdict_rhs = A * exp(r_first / nsqrtn);
  if (mpfr_cmp(r_last.lo(), g.verdict_rhs.hi()) > 0)
    g.verdict = true;
  else if (mpfr_cmp(r_last.hi(), g.verdict_rhs.lo()) <= 0)
    g.verdict = false;
  return g;
}

GapDiagnostics gap_check(RootSystem& rs, const Int& D, const Interval& M, const Int& m,
                         const std::vector<Solution>& sols, const Interval& C) {
  if (sols.size() != 3 && sols.size() != 4)
    fail(ErrCode::WrongCount, "gap check needs 3 or 4 solutions");
  int shared = -1;
  for (const auto& s : sols) {
    int rel = related_root_index(rs, s.x, s.y);
    if (shared < 0) shared = rel;
    if (rel != shared) fail(ErrCode::NotRelated, "solutions relate to different roots");
  }
  check_chosen_real(rs, shared);

  std::vector<std::vector<Interval>> pts;
  for (const auto& s : sols) pts.push_back(phi_point(rs, D, s.x, s.y).coords);

  // gap constant for this solution count
  const int n = rs.n();
  Interval logm = m == 1 ? Interval(0L) : log(Interval(m));
  Interval logM = log(M);
  Interval first = pow(Interval(static_cast<long>(n - 1) * (n - 1) + (n - 1)), Rat(3, 4));
  Interval A;
  if (sols.size() == 3) {
    Interval bracket = Interval(static_cast<long>(n - 2) * (n - 1)) * logm +
                       Interval(static_cast<long>(n - 2) * (n - 2)) * logM;
    A = C / Interval(4L) * first * pow(bracket, Rat(3, 2));
  } else {
    Interval bracket = Interval(static_cast<long>(n - 2) * n) * logm +
                       Interval(static_cast<long>(n - 1) * (n - 2)) * logM;
    A = C / (Interval(8L) * sqrt(Interval(2L))) * first * pow(bracket, Rat(3, 2));
  }

  GapDiagnostics g = gap_diagnostics_from_points(pts, A);

  Interval floor_bracket = Interval(static_cast<long>(n - 2) * (n - 1)) * logm +
                           Interval(static_cast<long>(n - 2) * (n - 2)) * logM;
  g.side_floor =
      sqrt(Interval(static_cast<long>(n - 1) * (n - 1) + (n - 1))) * floor_bracket;

  Interval yfloor = near_line_y_floor(n, D, M, m, C);
  bool all_met = true;
  for (const auto& s : sols) {
    Rat yq{s.y};
    if (!(mpfr_cmp_q(yfloor.hi(), yq.get_mpq_t()) <= 0)) all_met = false;
  }
  g.thresholds_met = all_met;
  g.vacuous = !all_met;
  if (g.vacuous) g.verdict.reset();
  return g;
}

}  // namespace thue
