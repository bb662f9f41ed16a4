#include "thue/bounds.hpp"

#include <sstream>

#include "thue/errors.hpp"

namespace thue {

const char* applicability_name(Applicability a) {
  switch (a) {
    case Applicability::Yes: return "yes";
    case Applicability::No: return "no";
    case Applicability::Boundary: return "boundary-undecided";
  }
  return "?";
}

namespace {

Rat eps_limit_ineq(int n) { return Rat(1, 4 * (n - 1)); }
Rat eps_limit_eq(int n) { return Rat(1, 2 * (n - 1)); }

void check_eps(const Rat& eps, const Rat& limit, const char* which) {
  if (!(eps > 0 && eps < limit))
    fail(ErrCode::EpsilonOutOfRange,
         std::string(which) + ": epsilon must lie in (0, " + limit.get_str() + ")");
}

void check_degree(int n) {
  if (n < 3) fail(ErrCode::DegreeTooSmall, "bound evaluators need degree >= 3");
}

Interval abs_d(const Int& D) {
  if (D == 0) fail(ErrCode::InvalidArgument, "bound needs a nonzero discriminant");
  return Interval(Int(abs(D)));
}

Interval half7() { return Interval(Rat(7, 2)); }

std::string iv_str(const Interval& v) { return v.str(12); }

}  // namespace

BoundContext make_context(const BinaryForm& F, const Int& m, const Rat& epsilon, RootSystem* rs) {
  BoundContext ctx;
  ctx.n = F.deg();
  ctx.D = discriminant(F);
  ctx.m = m;
  ctx.epsilon = epsilon;
  ctx.H = F.naive_height();
  ctx.a0 = F.a0();
  ctx.content = F.content();
  ctx.irred = is_irreducible(F).verdict;
  if (rs) {
    ctx.q = rs->q();
    ctx.M = mahler_measure(*rs);
  } else if (F.a0() != 0 && ctx.D != 0) {
    RootSystem local = RootSystem::solve(F);
    ctx.q = local.q();
    ctx.M = mahler_measure(local);
  }
  return ctx;
}

Interval m_threshold_ineq(const BoundContext& ctx) {
  check_degree(ctx.n);
  check_eps(ctx.epsilon, eps_limit_ineq(ctx.n), "inequality threshold");
  const int n = ctx.n;
  Rat expo = Rat(1, 4 * (n - 1)) - ctx.epsilon;
  Interval num = pow(abs_d(ctx.D), expo);
  Interval den = pow(half7(), Rat(n, 2)) * pow(Interval(static_cast<long>(n)), Rat(n, 4 * (n - 1)));
  return num / den;
}

Interval m_threshold_eq(const BoundContext& ctx) {
  check_degree(ctx.n);
  check_eps(ctx.epsilon, eps_limit_eq(ctx.n), "equation threshold");
  const int n = ctx.n;
  Rat expo = Rat(1, 2 * (n - 1)) - ctx.epsilon;
  Interval num = pow(abs_d(ctx.D), expo);
  Interval den = pow(half7(), Rat(n, 2)) * pow(Interval(static_cast<long>(n)), Rat(n, 2 * (n - 1)));
  return num / den;
}

Interval medium_cap_threshold(int n, const Int& D) {
  check_degree(n);
  Interval num = pow(abs_d(D), Rat(1, 2 * (n - 1)));
  Interval den = pow_si(half7(), n) * pow(Interval(static_cast<long>(n)), Rat(n, 2 * (n - 1)));
  return num / den;
}

Interval small_cap_eq_threshold(const BoundContext& ctx) {
  check_degree(ctx.n);
  check_eps(ctx.epsilon, eps_limit_eq(ctx.n), "equation small-cap threshold");
  const int n = ctx.n;
  Rat expo = Rat(1, 2 * (n - 1)) - ctx.epsilon;
  Interval num = pow(abs_d(ctx.D), expo);
  Interval den = pow_si(half7(), n) * pow(Interval(static_cast<long>(n)), Rat(n, 2 * (n - 1)));
  return num / den;
}

Interval large_eq_threshold(int n, const Int& D) {
  check_degree(n);
  Interval base = abs_d(D) / pow_si(Interval(static_cast<long>(n)), n);
  return pow(Interval(Rat(2, 7)), Rat(n)) * pow(base, Rat(1, 2 * (n - 1)));
}

Applicability qualifies(const Interval& threshold, const Int& m, bool strict) {
  Rat mq(m);
  if (strict) {
    if (mpfr_cmp_q(threshold.lo(), mq.get_mpq_t()) > 0) return Applicability::Yes;
    if (mpfr_cmp_q(threshold.hi(), mq.get_mpq_t()) <= 0) return Applicability::No;
  } else {
    if (mpfr_cmp_q(threshold.lo(), mq.get_mpq_t()) >= 0) return Applicability::Yes;
    if (mpfr_cmp_q(threshold.hi(), mq.get_mpq_t()) < 0) return Applicability::No;
  }
  return Applicability::Boundary;
}

Rat bound_ineq(int n, const Rat& eps, std::optional<int> q) {
  check_degree(n);
  check_eps(eps, eps_limit_ineq(n), "inequality count bound");
  Rat denom = Rat(2 * (n - 1)) * eps;
  if (!q) {
    long lead = (n >= 5 ? 7 : 9) * static_cast<long>(n);
    return Rat(lead) + Rat(n) / denom;
  }
  if (*q < 0 || 2 * *q > n) fail(ErrCode::InvalidArgument, "q out of range");
  long lead = n >= 5 ? 7L * n - 12L * *q : 9L * n - 16L * *q;
  return Rat(lead) + Rat(n - *q) / denom;
}

Rat bound_eq(int n, const Rat& eps, std::optional<int> q) {
  check_degree(n);
  check_eps(eps, eps_limit_eq(n), "equation count bound");
  Rat denom = Rat(n - 1) * eps;
  if (!q) {
    long lead = (n >= 5 ? 7 : 9) * static_cast<long>(n);
    return Rat(lead) + Rat(n) / denom;
  }
  if (*q < 0 || 2 * *q > n) fail(ErrCode::InvalidArgument, "q out of range");
  long lead = n >= 5 ? 7L * n - 12L * *q : 9L * n - 16L * *q;
  return Rat(lead) + Rat(n - *q) / denom;
}

Rat bound_reducible(int n, const Rat& eps) {
  check_degree(n);
  check_eps(eps, eps_limit_ineq(n), "reducible count bound");
  return Rat(2 * n) + Rat(n) / (Rat(2 * (n - 1)) * eps);
}

namespace {

PrimeBound prime_bound_impl(int n, const Int& m, int m_expo_num, int seven_half_expo) {
  check_degree(n);
  if (m < 1) fail(ErrCode::InvalidArgument, "m must be >= 1");
  PrimeBound out;
  out.per_form = Rat(9 * n) + Rat(4, n - 1);
  out.per_form.canonicalize();
  // cutoff = m^(expo/n) * 3.5^seven_half_expo * n^(2/(n-1))
  Int cutoff_int = with_escalation([&]() {
    Interval c = pow(Interval(m), Rat(m_expo_num, n)) * pow_si(half7(), seven_half_expo) *
                 pow(Interval(static_cast<long>(n)), Rat(2, n - 1));
    // least integer >= cutoff: floor(cutoff) + 1 unless cutoff is an integer;
    // with irrational cutoffs the ceiling is reached once floor is unique
    mpfr_t cl, ch;
    mpfr_init2(cl, mpfr_get_prec(c.lo()));
    mpfr_init2(ch, mpfr_get_prec(c.hi()));
    mpfr_ceil(cl, c.lo());
    mpfr_ceil(ch, c.hi());
    bool same = mpfr_cmp(cl, ch) == 0;
    Int z;
    if (same) mpfr_get_z(z.get_mpz_t(), cl, MPFR_RNDN);
    mpfr_clear(cl);
    mpfr_clear(ch);
    if (!same) throw undecided_error{"prime cutoff straddles an integer"};
    out.cutoff = c;
    return z;
  });
  out.prime = next_prime_at_least(cutoff_int);
  out.total = Rat(out.prime + 1) * out.per_form;
  out.total.canonicalize();
  return out;
}

}  // namespace

PrimeBound prime_bound_ineq(int n, const Int& m) { return prime_bound_impl(n, m, 8, 4); }
PrimeBound prime_bound_eq(int n, const Int& m) { return prime_bound_impl(n, m, 4, 2); }

Interval large_threshold(const BoundContext& ctx) {
  check_degree(ctx.n);
  const int n = ctx.n;
  Interval base = pow(Interval(2L), Rat(n, n - 2)) *
                  pow(Interval(static_cast<long>(n)), Rat(2 * n - 1, 2 * n - 4)) *
                  pow(Interval(ctx.m), Rat(1, n - 2)) * ctx.M.as_interval();
  return pow(base, Rat(1) + Rat(1, n - 1));
}

LargeBound bound_large(int n) {
  check_degree(n);
  LargeBound b;
  b.branch_11n = 11L * n;
  if (n >= 5) b.branch_9n = 9L * n;
  b.value = b.branch_9n ? std::min(b.branch_11n, *b.branch_9n) : b.branch_11n;
  return b;
}

SmallCaps small_count_caps(const BoundContext& ctx) {
  check_degree(ctx.n);
  if (!ctx.q) fail(ErrCode::InvalidArgument, "small caps need the non-real root count q");
  const int n = ctx.n;
  const int q = *ctx.q;
  SmallCaps caps;
  caps.ineq_cap = Rat(n - q) * (Rat(1) + Rat(1) / (Rat(2 * (n - 1)) * ctx.epsilon));
  caps.eq_cap = Rat(n - q) * (Rat(1) + Rat(1) / (Rat(n - 1) * ctx.epsilon));
  caps.ineq_threshold_met = qualifies(m_threshold_ineq(ctx), ctx.m);
  caps.eq_threshold_met = qualifies(small_cap_eq_threshold(ctx), ctx.m);
  return caps;
}

std::pair<Interval, Interval> medium_window(const MahlerMeasure& M, int n) {
  Interval m = M.as_interval();
  long k = 1 + static_cast<long>(n - 1) * (n - 1);
  return {sqr(m), pow_si(m, k)};
}

std::optional<std::pair<Int, Int>> medium_window_exact(const MahlerMeasure& M, int n) {
  if (!M.exact) return std::nullopt;
  long k = 1 + static_cast<long>(n - 1) * (n - 1);
  return std::make_pair((*M.exact) * (*M.exact), pow_int(*M.exact, static_cast<unsigned long>(k)));
}

Interval nonreal_y_cap(const BoundContext& ctx) {
  check_degree(ctx.n);
  const int n = ctx.n;
  Interval num = Interval(static_cast<long>(n + 1)) * pow(Interval(ctx.m), Rat(1, n)) *
                 pow(Interval(2L), Rat(static_cast<long>(n - 1) * (n - 1), n));
  Interval den = pow(sqrt(Interval(3L)) * abs_d(ctx.D), Rat(1, n));
  return num / den * pow(ctx.M.as_interval(), Rat(3) - Rat(3, n));
}

Interval reducible_y_cap(const BoundContext& ctx) {
  check_degree(ctx.n);
  const int n = ctx.n;
  return pow(Interval(2L), Rat(static_cast<long>(n) * n, 2)) * pow_si(ctx.M.as_interval(), n);
}

bool degree_disc_check(int n, const Int& D) {
  if (D == 0) fail(ErrCode::InvalidArgument, "needs D != 0");
  return with_escalation([&]() {
    Interval lhs = (Interval(3L) + Interval(2L) * log(Interval(Int(abs(D))))) / log(Interval(3L));
    if (mpfr_cmp_si(lhs.lo(), n) >= 0) return true;
    if (mpfr_cmp_si(lhs.hi(), n) < 0) return false;
    throw undecided_error{"degree-discriminant comparison"};
  });
}

std::vector<ComparisonRow> comparison_bounds(const BoundContext& ctx, const Rat& gyory_a,
                                             const Rat& stewart_eps) {
  check_degree(ctx.n);
  const int n = ctx.n;
  std::vector<ComparisonRow> rows;

  {  // Evertse-Gyory: N(n) solutions when |D| > m^delta(n) exp(80 n(n-1))
    ComparisonRow r;
    r.name = "Evertse-Gyory";
    Int N;
    Rat delta;
    if (n < 400) {
      N = Int(6 * n) * pow_int(Int(7), binomial(static_cast<unsigned long>(n), 3).get_ui());
      delta = Rat(5, 6) * Rat(n) * Rat(n - 1);
    } else {
      N = Int(6 * n);
      delta = Rat(120) * Rat(n - 1);
    }
    r.bound_value = Rat(N);
    r.bound_text = N.get_str();
    Applicability app = with_escalation([&]() {
      Interval rhs = exp(Interval(Rat(delta)) * log(Interval(ctx.m)) +
                         Interval(80L * n * (n - 1)));
      Rat dq{Int(abs(ctx.D))};
      if (mpfr_cmp_q(rhs.hi(), dq.get_mpq_t()) < 0) return Applicability::Yes;
      if (mpfr_cmp_q(rhs.lo(), dq.get_mpq_t()) >= 0) return Applicability::No;
      return Applicability::Boundary;
    });
    r.applicable = app;
    r.condition = "|D| > m^(5n(n-1)/6) e^(80n(n-1))";
    rows.push_back(std::move(r));
  }

  {  // Gyory: equation bound for |D| >= n^n (3.5^n m^2)^(2(n-1)/(1-a))
    ComparisonRow r;
    r.name = "Gyory";
    if (!(gyory_a > 0 && gyory_a < 1)) fail(ErrCode::InvalidArgument, "a must be in (0,1)");
    Rat bound = Rat(25 * n) + Rat(n + 2) * (Rat(2) / gyory_a + Rat(1, 4));
    r.bound_value = bound;
    r.bound_text = bound.get_str();
    Applicability app = with_escalation([&]() {
      Rat expo = Rat(2 * (n - 1)) / (Rat(1) - gyory_a);
      Interval inner = pow_si(half7(), n) * Interval(ctx.m) * Interval(ctx.m);
      Interval rhs = pow_si(Interval(static_cast<long>(n)), n) * pow(inner, expo);
      Rat dq{Int(abs(ctx.D))};
      if (mpfr_cmp_q(rhs.hi(), dq.get_mpq_t()) <= 0) return Applicability::Yes;
      if (mpfr_cmp_q(rhs.lo(), dq.get_mpq_t()) > 0) return Applicability::No;
      return Applicability::Boundary;
    });
    r.applicable = app;
    r.condition = "|D| >= n^n (3.5^n m^2)^(2(n-1)/(1-a)), a = " + gyory_a.get_str();
    rows.push_back(std::move(r));

    ComparisonRow r2;
    r2.name = "Gyory (reducible)";
    Rat bound2 = Rat(5 * n) + Rat(n + 2) * (Rat(2) / gyory_a + Rat(1, 4));
    r2.bound_value = bound2;
    r2.bound_text = bound2.get_str();
    r2.applicable = (ctx.irred == Irreducibility::Reducible) ? app : Applicability::No;
    r2.condition = "reducible F and the same |D| condition";
    rows.push_back(std::move(r2));
  }

  {  // Stewart: 1400 (1 + 1/(8 eps n)) n when |D|^(1/n(n-1)) >= m^(2/(n+eps))
    ComparisonRow r;
    r.name = "Stewart";
    if (!(stewart_eps > 0)) fail(ErrCode::InvalidArgument, "Stewart eps must be positive");
    Rat bound = Rat(1400) * (Rat(1) + Rat(1) / (Rat(8) * stewart_eps * Rat(n))) * Rat(n);
    r.bound_value = bound;
    r.bound_text = bound.get_str();
    Applicability app = with_escalation([&]() {
      Interval lhs = pow(Interval(Int(abs(ctx.D))), Rat(1, static_cast<long>(n) * (n - 1)));
      Interval rhs = pow(Interval(ctx.m), Rat(2) / (Rat(n) + stewart_eps));
      if (mpfr_cmp(lhs.lo(), rhs.hi()) >= 0) return Applicability::Yes;
      if (mpfr_cmp(lhs.hi(), rhs.lo()) < 0) return Applicability::No;
      return Applicability::Boundary;
    });
    r.applicable = app;
    r.condition = "|D|^(1/n(n-1)) >= m^(2/(n+eps)), eps = " + stewart_eps.get_str();
    rows.push_back(std::move(r));
  }

  {  // BPPW: large-solution cap 2n^2(omega(m)+1) + 13n
    ComparisonRow r;
    r.name = "BPPW";
    int om = omega(ctx.m);
    Rat bound = Rat(2 * n * n) * Rat(om + 1) + Rat(13 * n);
    r.bound_value = bound;
    r.bound_text = bound.get_str();
    r.applicable = Applicability::Yes;
    std::ostringstream cond;
    cond << "counts solutions with max(|x|,|y|) >= 21 n^2 M^5 m^(1/(n-2)+1/(n-1)^2), omega(m) = "
         << om;
    r.condition = cond.str();
    rows.push_back(std::move(r));
  }

  {  // Mahler: C1^(1+omega(m)), C1 depends on F only
    ComparisonRow r;
    r.name = "Mahler";
    int om = omega(ctx.m);
    r.bound_text = "C1^" + std::to_string(1 + om);
    r.applicable =
        ctx.irred == Irreducibility::Irreducible ? Applicability::Yes : Applicability::No;
    r.condition = "irreducible F; C1 = C1(F) symbolic";
    rows.push_back(std::move(r));
  }

  {  // Bombieri-Schmidt: C2 n^(1+omega(m)), C2 absolute
    ComparisonRow r;
    r.name = "Bombieri-Schmidt";
    int om = omega(ctx.m);
    Int nf = pow_int(Int(static_cast<long>(n)), static_cast<unsigned long>(1 + om));
    r.bound_text = "C2*" + nf.get_str();
    r.applicable = Applicability::Yes;
    r.condition = "co-prime solutions of F = m; C2 absolute symbolic";
    rows.push_back(std::move(r));
  }
  return rows;
}

MatveevParams matveev_constants(int N, int chi, int d, const Interval& B) {
  if (N < 1 || d < 1) fail(ErrCode::InvalidArgument, "need N >= 1, d >= 1");
  if (chi != 1 && chi != 2) fail(ErrCode::InvalidArgument, "chi must be 1 or 2");
  MatveevParams p;
  p.N = N;
  p.chi = chi;
  Interval e = Interval::e();
  Interval Ni(static_cast<long>(N));
  p.C = Interval(16L) / (Interval(factorial(static_cast<unsigned long>(N))) * Interval(chi)) *
        pow_si(e, N) * Interval(2L * N + 1 + 2 * chi) * Interval(static_cast<long>(N + 2)) *
        pow_si(Interval(4L * N + 4), N + 1) * pow_si(e * Ni / Interval(2L), chi);
  // C0 = log(e^(4.4N+7) N^5.5 d^2 log(eN))
  Interval expo = Interval(Rat(22, 5)) * Ni + Interval(7L);
  p.C0 = expo + Interval(Rat(11, 2)) * log(Ni) + Interval(2L) * log(Interval(static_cast<long>(d))) +
         log(log(e * Ni));
  // W0 = log(1.5 e B d log(ed)) with log(ed) = 1 + log d
  Interval logd = log(Interval(static_cast<long>(d)));
  p.W0 = log(Interval(Rat(3, 2)) * e * B * Interval(static_cast<long>(d)) * (Interval(1L) + logd));
  return p;
}

Interval matveev_lower_log(const MatveevParams& p, int d, const Interval& Omega) {
  return -(p.C * p.C0 * p.W0 * Interval(static_cast<long>(d) * d) * Omega);
}

SUnitBounds sunit_bounds(int d1, int s, int t, const Int& P, const Int& DK_abs, int r2) {
  if (d1 < 2) fail(ErrCode::DegreeTooSmall, "S-unit bounds need field degree >= 2");
  if (s < 1 || t < 0 || t >= s) fail(ErrCode::InvalidArgument, "need 0 <= t < s");
  SUnitBounds b;
  b.d1 = d1;
  b.s = s;
  b.t = t;
  const int q = r2;
  b.Delta = pow_si(Interval(2L) / Interval::pi(), q) * sqrt(Interval(DK_abs));
  Interval logD = log(b.Delta);
  Interval logstarP = max(Interval(1L), log(Interval(P)));
  b.RS_upper = b.Delta * pow_si(logD, d1 - 1 - q) *
               pow_si(Interval(static_cast<long>(d1 - 1)) + logD, q) *
               pow_si(Interval(static_cast<long>(d1)) * logstarP, t) /
               Interval(factorial(static_cast<unsigned long>(d1 - 1)));
  Rat c4 = Rat(factorial(static_cast<unsigned long>(s - 1)) *
               factorial(static_cast<unsigned long>(s - 1))) /
           (pow_rat(Rat(2), s - 2) * Rat(pow_int(Int(d1), static_cast<unsigned long>(s - 1))));
  b.c4 = Interval(c4);
  b.deltaK = Interval(1L) / (Interval(53L * d1) * log(Interval(6L * d1)));
  b.c5 = b.c4 * pow_si(b.deltaK / Interval(static_cast<long>(d1)), 2 - s);
  return b;
}

GapConstants gap_constants(const BoundContext& ctx, int s, const Interval& C) {
  check_degree(ctx.n);
  if (s < 2) fail(ErrCode::InvalidArgument, "gap constants need s >= 2");
  const int n = ctx.n;
  GapConstants g;
  Interval logm = ctx.m == 1 ? Interval(0L) : log(Interval(ctx.m));
  Interval logM = log(ctx.M.as_interval());
  Interval first = pow(Interval(static_cast<long>(n - 1) * (n - 1) + (n - 1)), Rat(3, 4));
  Interval bracket3 = Interval(static_cast<long>(n - 2) * (n - 1)) * logm +
                      Interval(static_cast<long>(n - 2) * (n - 2)) * logM;
  Interval bracket4 = Interval(static_cast<long>(n - 2) * n) * logm +
                      Interval(static_cast<long>(n - 1) * (n - 2)) * logM;
  g.A_three = C / Interval(4L) * first * pow(bracket3, Rat(3, 2));
  g.A_four = C / (Interval(8L) * sqrt(Interval(2L))) * first * pow(bracket4, Rat(3, 2));

  // K: the (log m)^(s+1) log log m factor is taken as 0 at m = 1 (limit).
  Interval mterm(0L);
  if (ctx.m > 1) mterm = pow_si(logm, s + 1) * log(logm);
  Interval logn = log(Interval(static_cast<long>(n)));
  Interval loglogn = log(logn);
  Interval nfac(static_cast<long>(n) * (n - 1) * (n - 2));
  g.K = Interval(2500L) * pow_si(Interval(static_cast<long>(s + 2)), 2 * s + 7) *
        pow_si(Interval(4L) * Interval::pi(), s + 2) * pow_si(nfac, s + 2) *
        Interval(Int(abs(ctx.D))) * pow_si(log(Interval(Int(abs(ctx.D)))), n) * mterm *
        pow_si(logn / loglogn, 3 * (s - 1));
  if (g.K.is_positive()) {
    Interval e = Interval::e();
    Interval expo = e / (e - Interval(1L));
    Interval base = Interval(static_cast<long>(n)) * sqrt(Interval(static_cast<long>(n))) * g.K;
    g.K1 = pow(base, expo);
  }
  return g;
}

Interval height_quotient_bound(int n, const Interval& phi_norm, const Int& m) {
  if (n < 1) fail(ErrCode::DegreeTooSmall, "need n >= 1");
  Interval logm = m == 1 ? Interval(0L) : log(Interval(m));
  return Interval(2L) * log(Interval(2L)) +
         Interval(4L) / sqrt(Interval(static_cast<long>(n))) * phi_norm + Interval(4L) * logm;
}

namespace {

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

BoundEntry entry_basic(const std::string& id) {
  BoundEntry e;
  e.id = id;
  return e;
}

std::optional<Int> floor_of_rat(const Rat& r) { return floor_rat(r); }

}  // namespace

BoundReport evaluate_bounds(const BoundContext& ctx, const BinaryForm& F) {
  BoundReport rep;
  rep.form = F.str();
  rep.n = ctx.n;
  rep.D = ctx.D;
  rep.m = ctx.m;
  rep.epsilon = ctx.epsilon;
  const int n = ctx.n;
  const bool irred = ctx.irred == Irreducibility::Irreducible;
  const bool red = ctx.irred == Irreducibility::Reducible;
  std::string irred_reason =
      ctx.irred == Irreducibility::Unknown ? "irreducibility undetermined" : "";
  std::string content_note;
  if (ctx.content > 1)
    content_note = "content " + ctx.content.get_str() + " > 1: the underlying statements assume a primitive form";

  auto push = [&](BoundEntry e) {
    if (!content_note.empty()) e.notes.push_back(content_note);
    rep.entries.push_back(std::move(e));
  };

  // main inequality count bound (with and without q)
  {
    BoundEntry e = entry_basic("ineq-count");
    try {
      Interval thr = m_threshold_ineq(ctx);
      e.threshold = iv_str(thr);
      Applicability ok = qualifies(thr, ctx.m);
      e.applicable = irred ? ok : Applicability::No;
      if (!irred) e.reason = red ? "form is reducible" : irred_reason;
      else if (ok == Applicability::No) e.reason = "m exceeds the threshold";
      else if (ok == Applicability::Boundary) e.reason = "m within enclosure width of the threshold";
      Rat b = bound_ineq(n, ctx.epsilon);
      e.bound = rat_str(b);
      e.bound_floor = floor_of_rat(b);
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);

    if (ctx.q) {
      BoundEntry eq = entry_basic("ineq-count-q");
      try {
        Interval thr = m_threshold_ineq(ctx);
        eq.threshold = iv_str(thr);
        Applicability ok = qualifies(thr, ctx.m);
        eq.applicable = irred ? ok : Applicability::No;
        if (!irred) eq.reason = red ? "form is reducible" : irred_reason;
        Rat b = bound_ineq(n, ctx.epsilon, ctx.q);
        eq.bound = rat_str(b);
        eq.bound_floor = floor_of_rat(b);
        eq.notes.push_back("q = " + std::to_string(*ctx.q));
      } catch (const Error& err) {
        eq.applicable = Applicability::No;
        eq.reason = err.what();
      }
      push(eq);
    }
  }

  // main equation count bound
  {
    BoundEntry e = entry_basic("eq-count");
    try {
      Interval thr = m_threshold_eq(ctx);
      e.threshold = iv_str(thr);
      Applicability ok = qualifies(thr, ctx.m);
      e.applicable = irred ? ok : Applicability::No;
      if (!irred) e.reason = red ? "form is reducible" : irred_reason;
      else if (ok == Applicability::No) e.reason = "m exceeds the threshold";
      else if (ok == Applicability::Boundary) e.reason = "m within enclosure width of the threshold";
      Rat b = bound_eq(n, ctx.epsilon);
      e.bound = rat_str(b);
      e.bound_floor = floor_of_rat(b);
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);

    if (ctx.q) {
      BoundEntry eq = entry_basic("eq-count-q");
      try {
        Interval thr = m_threshold_eq(ctx);
        eq.threshold = iv_str(thr);
        Applicability ok = qualifies(thr, ctx.m);
        eq.applicable = irred ? ok : Applicability::No;
        if (!irred) eq.reason = red ? "form is reducible" : irred_reason;
        Rat b = bound_eq(n, ctx.epsilon, ctx.q);
        eq.bound = rat_str(b);
        eq.bound_floor = floor_of_rat(b);
        eq.notes.push_back("q = " + std::to_string(*ctx.q));
      } catch (const Error& err) {
        eq.applicable = Applicability::No;
        eq.reason = err.what();
      }
      push(eq);
    }
  }

  // reducible inequality bound
  {
    BoundEntry e = entry_basic("reducible-count");
    try {
      Interval thr = m_threshold_ineq(ctx);
      e.threshold = iv_str(thr);
      Applicability ok = qualifies(thr, ctx.m);
      e.applicable = red ? ok : Applicability::No;
      if (!red) e.reason = irred ? "form is irreducible" : irred_reason;
      Rat b = bound_reducible(n, ctx.epsilon);
      e.bound = rat_str(b);
      e.bound_floor = floor_of_rat(b);
      e.notes.push_back("assumes D != 0 so the linear factors are pairwise non-proportional");
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);
  }

  // prime-parameter bounds (no m restriction)
  for (bool eq_mode : {false, true}) {
    BoundEntry e = entry_basic(eq_mode ? "prime-eq" : "prime-ineq");
    try {
      PrimeBound pb = eq_mode ? prime_bound_eq(n, ctx.m) : prime_bound_ineq(n, ctx.m);
      e.applicable = irred ? Applicability::Yes : Applicability::No;
      if (!irred) e.reason = red ? "form is reducible" : irred_reason;
      e.threshold = iv_str(pb.cutoff);
      e.bound = rat_str(pb.total);
      e.bound_floor = floor_of_rat(pb.total);
      e.notes.push_back("p = " + pb.prime.get_str() + ", per-form factor " + rat_str(pb.per_form));
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);
  }

  // large-solution count bound (y above the threshold)
  {
    BoundEntry e = entry_basic("large-count");
    try {
      Interval thr = large_threshold(ctx);
      LargeBound lb = bound_large(n);
      e.applicable = (irred && ctx.D != 0) ? Applicability::Yes : Applicability::No;
      if (!irred) e.reason = red ? "form is reducible" : irred_reason;
      e.threshold = iv_str(thr);
      e.bound = std::to_string(lb.value);
      e.bound_floor = Int(lb.value);
      if (lb.branch_9n)
        e.notes.push_back("branches 11n and 9n overlap for n >= 5; the smaller is reported");
      e.notes.push_back("counts primitive solutions with y above the threshold");
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);
  }

  // small-solution caps
  if (ctx.q) {
    BoundEntry e = entry_basic("small-cap-ineq");
    try {
      SmallCaps caps = small_count_caps(ctx);
      e.applicable = caps.ineq_threshold_met;
      e.bound = rat_str(caps.ineq_cap);
      e.bound_floor = floor_of_rat(caps.ineq_cap);
      e.notes.push_back("counts primitive solutions with 0 < y <= M^2");
      push(e);

      BoundEntry e2 = entry_basic("small-cap-eq");
      e2.applicable = caps.eq_threshold_met;
      e2.bound = rat_str(caps.eq_cap);
      e2.bound_floor = floor_of_rat(caps.eq_cap);
      e2.notes.push_back("counts primitive equation solutions with 0 < y <= M^2");
      e2.notes.push_back("threshold uses the (7/2)^n denominator variant");
      push(e2);
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
      push(e);
    }
  }

  // medium caps per root
  {
    BoundEntry e = entry_basic("medium-real-cap");
    try {
      Interval thr = medium_cap_threshold(n, ctx.D);
      e.threshold = iv_str(thr);
      e.applicable = qualifies(thr, ctx.m, /*strict=*/true);
      e.bound = "2";
      e.bound_floor = Int(2);
      e.notes.push_back("per real root, within M^2 < y < M^(1+(n-1)^2)");
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);

    BoundEntry e2 = entry_basic("medium-nonreal-cap");
    try {
      Interval thr = medium_cap_threshold(n, ctx.D);
      e2.threshold = iv_str(thr);
      e2.applicable = qualifies(thr, ctx.m, /*strict=*/true);
      e2.bound = "1";
      e2.bound_floor = Int(1);
      e2.notes.push_back("per non-real root, within the medium window");
    } catch (const Error& err) {
      e2.applicable = Applicability::No;
      e2.reason = err.what();
    }
    push(e2);

    BoundEntry e3 = entry_basic("medium-real-cap-general");
    try {
      Interval thr = large_threshold(ctx);
      e3.threshold = iv_str(thr);
      e3.applicable = ctx.D != 0 ? Applicability::Yes : Applicability::No;
      e3.bound = "3";
      e3.bound_floor = Int(3);
      e3.notes.push_back(
          "per real root, window (T, T^((1+(n-1)^2)/(1+1/(n-1)))) with T the large threshold");
    } catch (const Error& err) {
      e3.applicable = Applicability::No;
      e3.reason = err.what();
    }
    push(e3);
  }

  // y-caps
  {
    BoundEntry e = entry_basic("nonreal-y-cap");
    try {
      Interval cap = nonreal_y_cap(ctx);
      e.applicable = Applicability::Yes;
      e.bound = iv_str(cap);
      e.notes.push_back("|y| cap for solutions related to a non-real root");
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);

    BoundEntry e2 = entry_basic("reducible-y-cap");
    try {
      Interval cap = reducible_y_cap(ctx);
      e2.applicable = red ? Applicability::Yes : Applicability::No;
      if (!red) e2.reason = irred ? "form is irreducible" : irred_reason;
      e2.bound = iv_str(cap);
      e2.notes.push_back("|y| cap for every solution of a reducible form");
    } catch (const Error& err) {
      e2.applicable = Applicability::No;
      e2.reason = err.what();
    }
    push(e2);
  }

  // degree vs discriminant inequality
  {
    BoundEntry e = entry_basic("degree-disc");
    try {
      bool ok = degree_disc_check(n, ctx.D);
      e.applicable = ok ? Applicability::Yes : Applicability::No;
      e.bound = "(3 + 2 log|D|)/log 3 >= n";
      if (!ok) e.reason = "inequality fails for this D and n";
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);
  }

  // large caps for small m (per mode, strict threshold)
  if (ctx.q) {
    BoundEntry e = entry_basic("large-cap");
    try {
      Interval thr = large_eq_threshold(n, ctx.D);
      e.threshold = iv_str(thr);
      Applicability ok = qualifies(thr, ctx.m, /*strict=*/true);
      e.applicable = ok;
      long cap = (n >= 5 ? 4L : 6L) * (n - 2 * *ctx.q);
      e.bound = std::to_string(cap);
      e.bound_floor = Int(cap);
      e.notes.push_back("counts solutions with y >= M^(1+(n-1)^2)");
      if (n >= 5) e.notes.push_back("4(n-2q) branch (n >= 5); 6(n-2q) holds for all n >= 3");
      e.notes.push_back(
          "source statement says 'equation' next to |F(x,y)| <= m; treated as the inequality "
          "(typo candidate)");
    } catch (const Error& err) {
      e.applicable = Applicability::No;
      e.reason = err.what();
    }
    push(e);

    BoundEntry e2 = entry_basic("large-cap-eq-general");
    try {
      Interval base = pow(Interval(2L), Rat(n, n - 2)) *
                      pow(Interval(static_cast<long>(n)), Rat(2 * n - 1, 2 * n - 4)) *
                      pow(Interval(ctx.m), Rat(1, n - 2)) * ctx.M.as_interval();
      long k = 1 + static_cast<long>(n - 1) * (n - 1);
      Interval thr = pow_si(base, k);
      e2.threshold = iv_str(thr);
      e2.applicable = irred ? Applicability::Yes : Applicability::No;
      if (!irred) e2.reason = red ? "form is reducible" : irred_reason;
      long cap = (n >= 5 ? 4L : 6L) * (n - 2 * *ctx.q);
      e2.bound = std::to_string(cap);
      e2.bound_floor = Int(cap);
      e2.notes.push_back("equation solutions with y above the threshold, any m");
    } catch (const Error& err) {
      e2.applicable = Applicability::No;
      e2.reason = err.what();
    }
    push(e2);
  }

  // comparison table
  for (auto& row : comparison_bounds(ctx)) {
    BoundEntry e = entry_basic("cmp-" + row.name);
    e.applicable = row.applicable;
    e.reason = row.condition;
    e.bound = row.bound_text;
    if (row.bound_value) e.bound_floor = floor_of_rat(*row.bound_value);
    push(e);
  }

  return rep;
}

}  // namespace thue
