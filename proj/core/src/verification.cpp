#include "thue/verification.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "thue/errors.hpp"
#include "thue/logcurve.hpp"

namespace thue {

std::vector<CorpusEntry> corpus_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrCode::ParseError, "corpus must be a JSON array");
  std::vector<CorpusEntry> out;
  for (const auto& e : j) {
    CorpusEntry c;
    c.form = e.at("form").get<std::string>();
    (void)parse_form(c.form);  // validate early
    if (e.contains("m")) c.m = Int(e.at("m").get<long>());
    if (e.contains("mode")) c.mode = e.at("mode").get<std::string>() == "eq" ? SolveMode::Equation
                                                                             : SolveMode::Inequality;
    if (e.contains("ymax")) c.y_max = Int(e.at("ymax").get<long>());
    if (e.contains("expected_count")) {
      c.expected_count = e.at("expected_count").get<long>();
      if (!e.contains("notes") || e.at("notes").get<std::string>().empty())
        fail(ErrCode::ParseError, "expected_count requires a provenance note: " + c.form);
    }
    if (e.contains("notes")) c.notes = e.at("notes").get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrCode::ParseError, "cannot open corpus file: " + path);
  nlohmann::json j;
  in >> j;
  return corpus_from_json(j);
}

namespace {

struct Battery {
  const CorpusEntry& entry;
  const VerifyOptions& opt;
  FormVerification out;

  BinaryForm F;
  Int D;
  std::optional<RootSystem> rs;
  MahlerMeasure M;
  IrreducibilityReport irr;
  EnumerationResult ineq_all, ineq_nozero, eq_res;

  explicit Battery(const CorpusEntry& e, const VerifyOptions& o)
      : entry(e), opt(o), F(parse_form(e.form)) {}

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    out.checks.push_back(CheckResult{name, pass, detail});
    if (!pass) out.pass = false;
  }

  // A <= B certified (with slack expected); escalating refinement.
  bool cert_le(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.hi(), b.lo()) <= 0;
  }
  bool violated_le(const Interval& a, const Interval& b) {
    return mpfr_cmp(a.lo(), b.hi()) > 0;
  }

  void run() {
    out.form = entry.form;
    D = discriminant(F);
    irr = is_irreducible(F);
    const int n = F.deg();

    // enumerations (both modes feed different bound rows)
    ineq_all = enumerate_solutions(F, entry.m, entry.y_max, SolveMode::Inequality, false);
    ineq_nozero = enumerate_solutions(F, entry.m, entry.y_max, SolveMode::Inequality, true);
    eq_res = enumerate_solutions(F, entry.m, entry.y_max, SolveMode::Equation, false);

    {  // structural sanity on the enumerated sets
      bool sorted = true, prim = true, canon = true;
      const EnumerationResult& r = entry.mode == SolveMode::Equation ? eq_res : ineq_all;
      for (size_t i = 0; i < r.solutions.size(); ++i) {
        const auto& s = r.solutions[i];
        if (gcd(s.x, s.y) != 1) prim = false;
        if (s.y < 0 || (s.y == 0 && s.x <= 0)) canon = false;
        if (i > 0) {
          const auto& p = r.solutions[i - 1];
          if (!(p.y < s.y || (p.y == s.y && p.x < s.x))) sorted = false;
        }
      }
      check("canonical-order", sorted && prim && canon);
    }

    if (entry.expected_count) {
      const EnumerationResult& r = entry.mode == SolveMode::Equation ? eq_res : ineq_all;
      std::ostringstream os;
      os << "got " << r.solutions.size() << ", pinned " << *entry.expected_count;
      check("count-pinned", static_cast<long>(r.solutions.size()) == *entry.expected_count,
            os.str());
    }

    if (D == 0 || F.a0() == 0) return;  // root-data battery needs certified roots

    rs = RootSystem::solve(F);
    M = mahler_measure(*rs, opt.mahler_rel_tol);

    annotate(ineq_all, *rs, M);
    annotate(eq_res, *rs, M);

    {  // Mahler floor: M >= (|D|/n^n)^(1/(2n-2))
      Interval floor = pow(Interval(Int(abs(D))) / pow_si(Interval(static_cast<long>(n)), n),
                           Rat(1, 2 * n - 2));
      Interval m = M.as_interval();
      bool not_violated = mpfr_cmp(m.hi(), floor.lo()) >= 0;
      check("mahler-floor", not_violated, "upper endpoint vs outward floor");
    }

    if (irr.verdict == Irreducibility::Irreducible && F.content() == 1) {
      // height sandwich binom(n, n/2)^-1 H <= M <= (n+1)^(1/2) H
      Int b = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
      Interval lo = Interval(F.naive_height()) / Interval(b);
      Interval hi = sqrt(Interval(static_cast<long>(n + 1))) * Interval(F.naive_height());
      Interval m = M.as_interval();
      bool ok = mpfr_cmp(m.hi(), lo.lo()) >= 0 && mpfr_cmp(m.lo(), hi.hi()) <= 0;
      check("height-sandwich", ok);
    }

    {  // pairwise separation and imaginary-part floors
      Interval sep = separation_bound(n, M.as_interval());
      Interval imfloor = imag_lower_bound(n, M.as_interval());
      bool sep_ok = true, im_ok = true;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          Box d(rs->root_box(i).re - rs->root_box(j).re, rs->root_box(i).im - rs->root_box(j).im);
          if (violated_le(sep, modulus(d))) sep_ok = false;
        }
        if (!rs->is_real_root(i)) {
          Interval im = abs(rs->root_box(i).im);
          if (violated_le(imfloor, im)) im_ok = false;
        }
      }
      check("separation-floor", sep_ok);
      check("imag-floor", im_ok);
    }

    {  // derivative product identity: prod |f'(a_k)| contains |D / a0^(n-2)|
      Interval prod(1L);
      for (int k = 0; k < n; ++k) prod *= rs->fprime_abs(k);
      Rat target = Rat(abs(D)) / Rat(pow_int(Int(abs(F.a0())), static_cast<unsigned long>(n - 2)));
      double tol = rs->current_tol();
      bool contains = prod.contains(target);
      for (int a = 0; a < 4 && !(contains && prod.rel_width_below(1e-10)); ++a) {
        tol /= 1e12;
        rs->refine(tol);
        prod = Interval(1L);
        for (int k = 0; k < n; ++k) prod *= rs->fprime_abs(k);
        contains = prod.contains(target);
      }
      check("fprime-product", contains && prod.rel_width_below(1e-10));
    }

    if (irr.verdict == Irreducibility::Irreducible) {  // derivative sandwich per root
      bool ok = true;
      for (int k = 0; k < n; ++k) {
        auto [lo, hi] = derivative_bounds(*rs, M.as_interval(), D, k, true);
        Interval fp = rs->fprime_abs(k);
        if (violated_le(lo, fp) || violated_le(fp, hi)) ok = false;
      }
      check("derivative-sandwich", ok);
    }

    {  // Lewis-Mahler over solutions and random pairs
      bool ok = true;
      std::string culprit;
      auto run_pair = [&](const Int& x, const Int& y) {
        if (y == 0) return;
        if (gcd(x, y) == 0) return;
        Int v = F.evaluate(x, y);
        if (v == 0) return;  // exact root of a reducible form: distance 0
        if (!lewis_mahler_holds(*rs, M.as_interval(), D, x, y)) {
          ok = false;
          culprit = "(" + x.get_str() + ", " + y.get_str() + ")";
        }
      };
      for (const auto& s : ineq_all.solutions) run_pair(s.x, s.y);
      for (const auto& s : eq_res.solutions) run_pair(s.x, s.y);
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<long> dx(-50, 50), dy(1, 50);
      for (int i = 0; i < opt.random_lewis_mahler_pairs; ++i) {
        Int x(dx(rng)), y(dy(rng));
        run_pair(x, y);
      }
      check("lewis-mahler", ok, culprit);
    }

    {  // classification partition: every y > 0 solution got exactly one class
      bool ok = true;
      for (const auto& s : ineq_all.solutions)
        if (s.y > 0 && s.size_class != SizeClass::Small && s.size_class != SizeClass::Medium &&
            s.size_class != SizeClass::Large)
          ok = false;
      check("classification", ok);
    }

    audit_bounds();
    if (irr.verdict == Irreducibility::Irreducible) norm_checks();

    check("degree-disc", degree_disc_check(n, D));
  }

  // Count solutions of r in the window (lo_exclusive, hi_exclusive) using
  // exact Mahler data when present; ambiguous membership counts as inside.
  long count_in_window(const EnumerationResult& r, const std::optional<Int>& lo_ex,
                       const std::optional<Int>& hi_ex, const Interval& lo_iv,
                       const Interval& hi_iv, bool have_exact) {
    long cnt = 0;
    for (const auto& s : r.solutions) {
      if (s.y == 0) continue;
      bool inside;
      if (have_exact) {
        inside = (s.y > *lo_ex) && (s.y < *hi_ex);
      } else {
        Rat yq{s.y};
        bool above = mpfr_cmp_q(lo_iv.hi(), yq.get_mpq_t()) < 0;      // y > lo certainly
        bool below = mpfr_cmp_q(hi_iv.lo(), yq.get_mpq_t()) > 0;      // y < hi certainly
        bool outside = mpfr_cmp_q(lo_iv.lo(), yq.get_mpq_t()) >= 0 ||  // y <= lo certainly
                       mpfr_cmp_q(hi_iv.hi(), yq.get_mpq_t()) <= 0;    // y >= hi certainly
        inside = (above && below) || !outside;  // ambiguous counts inside
      }
      if (inside) ++cnt;
    }
    return cnt;
  }

  void audit_bounds() {
    BoundContext ctx;
    ctx.n = F.deg();
    ctx.D = D;
    ctx.m = entry.m;
    ctx.epsilon = opt.epsilon;
    ctx.q = rs->q();
    ctx.M = M;
    ctx.H = F.naive_height();
    ctx.a0 = F.a0();
    ctx.content = F.content();
    ctx.irred = irr.verdict;
    BoundReport rep = evaluate_bounds(ctx, F);

    long n_ineq_nozero = static_cast<long>(ineq_nozero.solutions.size());
    long n_ineq = static_cast<long>(ineq_all.solutions.size());
    long n_eq = static_cast<long>(eq_res.solutions.size());

    bool ok = true;
    std::ostringstream detail;
    auto audit = [&](const BoundEntry& e, long count) {
      if (e.applicable != Applicability::Yes || !e.bound_floor) return;
      if (Int(count) > *e.bound_floor) {
        ok = false;
        detail << e.id << ": count " << count << " > floor " << e.bound_floor->get_str() << "; ";
      } else {
        detail << e.id << ": " << count << " <= " << e.bound_floor->get_str() << "; ";
      }
    };
    for (const auto& e : rep.entries) {
      if (e.id == "ineq-count" || e.id == "ineq-count-q") audit(e, n_ineq_nozero);
      else if (e.id == "eq-count" || e.id == "eq-count-q") audit(e, n_eq);
      else if (e.id == "reducible-count") audit(e, n_ineq);
      else if (e.id == "prime-ineq") audit(e, n_ineq);
      else if (e.id == "prime-eq") audit(e, n_eq);
    }
    check("count-vs-bounds", ok, detail.str());

    // medium caps per root within the strict window (M^2, M^(1+(n-1)^2))
    {
      Applicability thr = qualifies(medium_cap_threshold(ctx.n, D), entry.m, true);
      if (thr == Applicability::Yes) {
        auto win = medium_window_exact(M, ctx.n);
        Interval lo_iv = sqr(M.as_interval());
        Interval hi_iv = pow_si(M.as_interval(), 1 + static_cast<long>(ctx.n - 1) * (ctx.n - 1));
        std::vector<long> per_root(static_cast<size_t>(ctx.n), 0);
        for (const auto& s : ineq_all.solutions) {
          if (s.y == 0) continue;
          EnumerationResult one;
          one.solutions = {s};
          std::optional<Int> lo_ex, hi_ex;
          if (win) {
            lo_ex = win->first;
            hi_ex = win->second;
          }
          if (count_in_window(one, lo_ex, hi_ex, lo_iv, hi_iv, win.has_value()) == 1)
            per_root[static_cast<size_t>(s.related_root)]++;
        }
        bool ok2 = true;
        for (int k = 0; k < ctx.n; ++k) {
          long cap = rs->is_real_root(k) ? 2 : 1;
          if (per_root[static_cast<size_t>(k)] > cap) ok2 = false;
        }
        check("medium-caps", ok2);
      }
    }
  }

  void norm_checks() {
    const int n = F.deg();
    if (n < 3) return;
    // The log-curve statements stand under "f has at least one real root";
    // x^4 + y^4 with m = 1 falsifies the equation floor without it.
    const bool has_real_root = rs->real_count() > 0;
    // Phi is undefined at F = 0 and the whole battery assumes a0 != 0.
    auto norm_floor_check = [&](const EnumerationResult& r, SolveMode mode) {
      if (r.solutions.size() < 2) return true;
      // The strong equation floor needs the |a0| = m normalization; without
      // it the (weaker) inequality floor still applies to equation solutions.
      SolveMode floor_mode = mode;
      if (mode == SolveMode::Equation && abs(F.a0()) != entry.m)
        floor_mode = SolveMode::Inequality;
      std::vector<LogPoint> pts;
      for (const auto& s : r.solutions) {
        if (s.value == 0) return true;  // reducible edge; skip the battery
        pts.push_back(phi_point(*rs, D, s.x, s.y));
      }
      size_t min_i = 0;
      for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i].norm.mid_double() < pts[min_i].norm.mid_double()) min_i = i;
      Interval floor = phi_norm_lower(n, D, entry.m, floor_mode);
      for (size_t i = 0; i < pts.size(); ++i) {
        if (i == min_i) continue;
        if (violated_le(floor, pts[i].norm)) return false;
      }
      return true;
    };
    if (has_real_root) {
      check("norm-floor-ineq", norm_floor_check(ineq_all, SolveMode::Inequality));
      check("norm-floor-eq", norm_floor_check(eq_res, SolveMode::Equation));
    }

    {  // sum of coordinates vanishes; norm ceiling per solution
      bool sum_ok = true, upper_ok = true;
      // the per-solution ceiling assumes |a0| <= m and |D| > 2^((n-1)^2)
      Int ref2 = pow_int(Int(2), static_cast<unsigned long>(n - 1) * (n - 1));
      bool ceiling_applies = abs(F.a0()) <= entry.m && abs(D) > ref2;
      for (const auto& s : ineq_all.solutions) {
        if (s.value == 0) continue;
        LogPoint p = phi_point(*rs, D, s.x, s.y);
        Interval sum(0L);
        for (const auto& c : p.coords) sum += c;
        if (!sum.contains(Rat(0)) && std::abs(sum.mid_double()) > 1e-10) sum_ok = false;
        if (ceiling_applies) {
          Interval up = phi_norm_upper(*rs, D, M.as_interval(), s.x, s.y, s.related_root);
          if (violated_le(p.norm, up)) upper_ok = false;
        }
      }
      check("phi-sum-zero", sum_ok);
      if (ceiling_applies) check("phi-norm-upper", upper_ok);
    }
  }
};

}  // namespace

FormVerification verify_entry(const CorpusEntry& entry, const VerifyOptions& opt) {
  Battery b(entry, opt);
  try {
    b.run();
  } catch (const Error& e) {
    b.out.form = entry.form;
    b.out.pass = false;
    b.out.checks.push_back(CheckResult{"battery-error", false, e.what()});
  }
  return b.out;
}

CorpusReport verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opt) {
  CorpusReport rep;
  for (const auto& e : corpus) {
    FormVerification fv = verify_entry(e, opt);
    for (const auto& c : fv.checks) (c.pass ? rep.checks_passed : rep.checks_failed)++;
    if (!fv.pass) rep.pass = false;
    rep.forms.push_back(std::move(fv));
  }
  return rep;
}

nlohmann::json corpus_report_to_json(const CorpusReport& r) {
  nlohmann::json j;
  j["pass"] = r.pass;
  j["checks_passed"] = r.checks_passed;
  j["checks_failed"] = r.checks_failed;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : r.forms) {
    nlohmann::json jf;
    jf["form"] = f.form;
    jf["pass"] = f.pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : f.checks) {
      nlohmann::json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    jf["checks"] = checks;
    arr.push_back(jf);
  }
  j["forms"] = arr;
  return j;
}

}  // namespace thue
