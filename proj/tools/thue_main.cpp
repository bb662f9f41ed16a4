#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "thue/bounds.hpp"
#include "thue/errors.hpp"
#include "thue/logcurve.hpp"
#include "thue/report_json.hpp"
#include "thue/verification.hpp"

namespace {

using namespace thue;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitPrecision = 4;

Rat parse_rat(const std::string& s) {
  try {
    if (s.find('/') != std::string::npos) {
      Rat r(s);
      r.canonicalize();
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      return r;
    }
    // decimal like 0.05
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = !digits.empty() && digits[0] == '-';
    Int num(digits);
    Int den = pow_int(Int(10), static_cast<unsigned long>(s.size() - dot - 1));
    Rat r = Rat(num) / Rat(den);
    (void)neg;
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    fail(ErrCode::ParseError, "cannot parse rational '" + s + "'");
  }
}

struct ShiftedForm {
  BinaryForm form;
  long shift = 0;  // x -> x, y -> kx + y applied when the lead vanished
};

ShiftedForm normalized(const BinaryForm& F) {
  if (F.a0() != 0) return {F, 0};
  long k = normalizing_shift(F);
  return {gl2_apply(F, IntMatrix2{1, 0, Int(k), 1}), k};
}

int cmd_info(const std::string& form_text, bool as_json, int digits) {
  BinaryForm F = parse_form(form_text);
  ShiftedForm sf = normalized(F);
  Int D = discriminant(F);
  IrreducibilityReport irr = is_irreducible(sf.form);
  json j;
  j["form"] = F.str();
  j["degree"] = F.deg();
  j["D"] = D.get_str();
  j["H"] = F.naive_height().get_str();
  j["content"] = F.content().get_str();
  j["irreducible"] = irr.verdict == Irreducibility::Irreducible
                         ? "irreducible"
                         : (irr.verdict == Irreducibility::Reducible ? "reducible" : "unknown");
  if (sf.shift != 0) j["normalizing_shift"] = sf.shift;
  if (D != 0) {
    RootSystem rs = RootSystem::solve(sf.form);
    MahlerMeasure M = mahler_measure(rs);
    j["q"] = rs.q();
    j["mahler"] = mahler_to_json(M);
    j["roots"] = rootsystem_to_json(rs);
    j["degree_disc_check"] = degree_disc_check(F.deg(), D);
  } else {
    j["q"] = nullptr;
    j["note"] = "D = 0: root-dependent data unavailable";
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "form:        " << j["form"].get<std::string>() << "\n"
              << "degree:      " << F.deg() << "\n"
              << "D:           " << D.get_str() << "\n"
              << "H:           " << F.naive_height().get_str() << "\n"
              << "content:     " << F.content().get_str() << "\n"
              << "irreducible: " << j["irreducible"].get<std::string>() << "\n";
    if (sf.shift != 0) std::cout << "shift:       x stays, y -> " << sf.shift << "x + y\n";
    if (D != 0) {
      std::cout << "q:           " << j["q"].get<int>() << "\n"
                << "M(F):        " << j["mahler"]["dec"].get<std::string>() << " (+/- "
                << j["mahler"]["pm"].get<std::string>() << ")\n"
                << "(3+2log|D|)/log3 >= n: " << (j["degree_disc_check"].get<bool>() ? "yes" : "no")
                << "\n";
    }
  }
  (void)digits;
  return 0;
}

int cmd_solve(const std::string& form_text, long m, const std::string& mode_text, long ymax,
              std::optional<bool> exclude_zero, bool as_json, bool as_csv) {
  BinaryForm F = parse_form(form_text);
  SolveMode mode = mode_text == "eq" ? SolveMode::Equation : SolveMode::Inequality;
  IrreducibilityReport irr = is_irreducible(F.a0() != 0 ? F : normalized(F).form);
  bool excl;
  if (exclude_zero) {
    excl = *exclude_zero;
  } else {
    excl = irr.verdict == Irreducibility::Irreducible;
    if (irr.verdict != Irreducibility::Irreducible && mode == SolveMode::Inequality)
      std::cerr << "note: form not certified irreducible; F = 0 points are included "
                   "(pass --exclude-zero to drop them)\n";
  }
  EnumerationResult r = enumerate_solutions(F, Int(m), Int(ymax), mode, excl);
  Int D = discriminant(F);
  if (D != 0 && F.a0() != 0) {
    RootSystem rs = RootSystem::solve(F);
    MahlerMeasure M = mahler_measure(rs);
    annotate(r, rs, M);
  }
  if (as_csv)
    std::cout << enumeration_to_csv(r);
  else if (as_json)
    std::cout << enumeration_to_json(r).dump(2) << "\n";
  else {
    std::cout << r.solutions.size() << " primitive solution(s), y <= " << ymax << ":\n";
    for (const auto& s : r.solutions)
      std::cout << "  (" << s.x.get_str() << ", " << s.y.get_str() << ")  F = "
                << s.value.get_str() << "  root " << s.related_root << "  "
                << size_class_name(s.size_class) << "\n";
  }
  return 0;
}

int cmd_bounds(const std::string& form_text, long m, const std::string& eps_text, bool as_json,
               bool strict) {
  BinaryForm F0 = parse_form(form_text);
  ShiftedForm sf = normalized(F0);
  Rat eps = parse_rat(eps_text);
  // validate against the loosest range; per-statement ranges narrow further
  Rat limit = Rat(1, 2 * (F0.deg() - 1));
  if (!(eps > 0 && eps < limit))
    fail(ErrCode::ParseError,
         "epsilon " + eps.get_str() + " outside (0, " + limit.get_str() + ") for degree " +
             std::to_string(F0.deg()));
  RootSystem rs = RootSystem::solve(sf.form);
  BoundContext ctx = make_context(sf.form, Int(m), eps, &rs);
  BoundReport rep = evaluate_bounds(ctx, sf.form);
  if (as_json) {
    json j = bound_report_to_json(rep);
    if (sf.shift != 0) j["normalizing_shift"] = sf.shift;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << bound_report_table(rep);
  }
  if (strict) {
    for (const auto& e : rep.entries)
      if ((e.id == "ineq-count" || e.id == "eq-count") && e.applicable != Applicability::Yes)
        return kExitPrecondition;
  }
  return 0;
}

std::vector<std::pair<Int, Int>> parse_points(const std::string& text) {
  std::vector<std::pair<Int, Int>> pts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t semi = text.find(';', pos);
    std::string tok = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    size_t comma = tok.find(',');
    if (comma == std::string::npos) fail(ErrCode::ParseError, "point needs 'x,y': " + tok);
    try {
      pts.emplace_back(Int(tok.substr(0, comma)), Int(tok.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
      fail(ErrCode::ParseError, "bad point '" + tok + "'");
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  if (pts.empty()) fail(ErrCode::ParseError, "no points given");
  return pts;
}

int cmd_logcurve(const std::string& form_text, const std::string& points_text, long m,
                 std::optional<int> root_opt, const std::string& c_text, bool as_json) {
  BinaryForm F = parse_form(form_text);
  ShiftedForm sf = normalized(F);
  Int D = discriminant(sf.form);
  RootSystem rs = RootSystem::solve(sf.form);
  MahlerMeasure M = mahler_measure(rs);
  auto pts = parse_points(points_text);
  Interval C(parse_rat(c_text));

  int chosen = -1;
  if (root_opt) {
    chosen = *root_opt;
  } else {
    for (int k = 0; k < rs.n(); ++k)
      if (rs.is_real_root(k)) {
        chosen = k;
        break;
      }
  }
  if (chosen < 0) fail(ErrCode::NotRealRoot, "the form has no real root to anchor the line");

  json j;
  j["form"] = sf.form.str();
  if (sf.shift != 0) j["normalizing_shift"] = sf.shift;
  j["chosen_root"] = chosen;
  json points = json::array();
  std::vector<Solution> sols;
  for (const auto& [x, y] : pts) {
    json jp;
    LogPoint p = phi_point(rs, D, x, y);
    jp["phi"] = logpoint_to_json(p);
    if (y != 0) {
      BasisDecomposition dec = basis_decomposition(rs, x, y, chosen);
      json dj;
      json cc = json::array();
      for (const auto& c : dec.c_coeffs) cc.push_back(interval_to_json(c));
      dj["c_coeffs"] = cc;
      dj["e_last"] = interval_to_json(dec.e_last);
      jp["basis_decomposition"] = dj;
      int rel = related_root_index(rs, x, y);
      jp["related_root"] = rel;
      if (rel == chosen) {
        LineDistance ld = line_distance(rs, M.as_interval(), x, y, chosen);
        json dl;
        dl["distance"] = interval_to_json(ld.distance);
        dl["direct_distance"] = interval_to_json(ld.direct_distance);
        dl["stated_line_distance"] = interval_to_json(ld.stated_line_distance);
        dl["upper_bound"] = interval_to_json(ld.upper_bound);
        jp["line"] = dl;
      }
      // t_ij matrix over admissible pairs
      json tm = json::array();
      Rat t = Rat(x) / Rat(y);
      t.canonicalize();
      for (int i = 0; i < rs.n(); ++i)
        for (int jj = 0; jj < rs.n(); ++jj)
          if (i != jj && i != chosen && jj != chosen) {
            json row;
            row["i"] = i;
            row["j"] = jj;
            row["t_ij"] = interval_to_json(t_ij(rs, t, i, jj, chosen));
            tm.push_back(row);
          }
      jp["t_matrix"] = tm;
    }
    points.push_back(jp);
    Solution s;
    s.x = x;
    s.y = y;
    s.value = sf.form.evaluate(x, y);
    sols.push_back(s);
  }
  j["points"] = points;
  if (pts.size() == 3 || pts.size() == 4) {
    try {
      GapDiagnostics g = gap_check(rs, D, M.as_interval(), Int(m), sols, C);
      j["gap"] = gap_to_json(g);
    } catch (const Error& e) {
      j["gap"] = {{"error", e.what()}};
    }
  }
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_reduce(const std::string& form_text, long p, bool as_json) {
  BinaryForm F = parse_form(form_text);
  auto mats = covering_matrices(Int(p));
  json arr = json::array();
  for (const auto& A : mats) {
    BinaryForm G = gl2_apply(F, A);
    json j;
    j["matrix"] = {A.a.get_str(), A.b.get_str(), A.c.get_str(), A.d.get_str()};
    j["form"] = G.str();
    json coeffs = json::array();
    for (const auto& c : G.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    j["D"] = discriminant(G).get_str();
    arr.push_back(j);
  }
  json out;
  out["p"] = p;
  out["forms"] = arr;
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else {
    for (const auto& j : arr)
      std::cout << j["form"].get<std::string>() << "   D = " << j["D"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& corpus_path, const std::string& eps_text, double tol,
               int random_pairs, bool as_json) {
  VerifyOptions opt;
  opt.epsilon = parse_rat(eps_text);
  opt.mahler_rel_tol = tol;
  opt.random_lewis_mahler_pairs = random_pairs;
  auto corpus = load_corpus(corpus_path);
  CorpusReport rep = verify_corpus(corpus, opt);
  if (as_json) {
    std::cout << corpus_report_to_json(rep).dump(2) << "\n";
  } else {
    for (const auto& f : rep.forms) {
      std::cout << (f.pass ? "PASS " : "FAIL ") << f.form << "\n";
      for (const auto& c : f.checks)
        if (!c.pass) std::cout << "    FAIL " << c.name << "  " << c.detail << "\n";
    }
    std::cout << rep.checks_passed << " checks passed, " << rep.checks_failed << " failed\n";
  }
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thue: exact counting and certified diagnostics for Thue inequalities"};
  app.require_subcommand(1);

  bool as_json = false;
  long precision = 256;
  bool strict = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--precision", precision, "working precision in bits")->default_val(256);
  app.add_flag("--strict", strict, "exit 3 when the main statements are inapplicable");

  std::string form_text, mode_text = "ineq", eps_text = "1/10", points_text, c_text = "1";
  std::string corpus_path = "data/corpus.json";
  long m = 1, ymax = 100, p = 2;
  double tol = 1e-12;
  int random_pairs = 0;
  std::optional<int> root_opt;
  std::optional<bool> exclude_zero;
  bool as_csv = false;

  auto* info = app.add_subcommand("info", "degree, discriminant, Mahler measure, root data");
  info->add_option("form", form_text, "coefficients 'a0,...,an' or polynomial in x,y")->required();

  auto* solve = app.add_subcommand("solve", "enumerate primitive solutions up to ymax");
  solve->add_option("form", form_text)->required();
  solve->add_option("--m", m, "bound m")->default_val(1);
  solve->add_option("--mode", mode_text, "ineq | eq")->check(CLI::IsMember({"ineq", "eq"}));
  solve->add_option("--ymax", ymax)->default_val(100);
  auto* ex = solve->add_flag("--exclude-zero", "drop F = 0 points");
  auto* in = solve->add_flag("--include-zero", "keep F = 0 points");
  solve->add_flag("--csv", as_csv, "CSV output");

  auto* bounds = app.add_subcommand("bounds", "evaluate every threshold and count bound");
  bounds->add_option("form", form_text)->required();
  bounds->add_option("--m", m)->default_val(1);
  bounds->add_option("--epsilon", eps_text, "rational like 1/10 or 0.05")->default_val("1/10");

  auto* lc = app.add_subcommand("logcurve", "log-embedding diagnostics for given points");
  lc->add_option("form", form_text)->required();
  lc->add_option("--points", points_text, "semicolon-separated x,y pairs")->required();
  lc->add_option("--m", m)->default_val(1);
  int root_val = -1;
  auto* ro = lc->add_option("--root", root_val, "index of the anchoring real root");
  lc->add_option("--C", c_text, "gap-principle constant C")->default_val("1");

  auto* red = app.add_subcommand("reduce", "the p+1 covering substitutions and their forms");
  red->add_option("form", form_text)->required();
  red->add_option("-p,--prime", p, "prime p")->required();

  auto* ver = app.add_subcommand("verify", "run the invariant battery over a corpus");
  ver->add_option("corpus", corpus_path, "corpus JSON path")->default_val("data/corpus.json");
  ver->add_option("--epsilon", eps_text)->default_val("1/10");
  ver->add_option("--tolerance", tol, "Mahler relative tolerance")->default_val(1e-12);
  ver->add_option("--random-pairs", random_pairs, "extra random Lewis-Mahler pairs per form");

  CLI11_PARSE(app, argc, argv);
  thue::set_working_precision(precision);
  if (ex->count()) exclude_zero = true;
  if (in->count()) exclude_zero = false;
  if (ro->count()) root_opt = root_val;

  try {
    if (app.got_subcommand(info)) return cmd_info(form_text, as_json, 17);
    if (app.got_subcommand(solve))
      return cmd_solve(form_text, m, mode_text, ymax, exclude_zero, as_json, as_csv);
    if (app.got_subcommand(bounds)) return cmd_bounds(form_text, m, eps_text, as_json, strict);
    if (app.got_subcommand(lc))
      return cmd_logcurve(form_text, points_text, m, root_opt, c_text, as_json);
    if (app.got_subcommand(red)) return cmd_reduce(form_text, p, as_json);
    if (app.got_subcommand(ver))
      return cmd_verify(corpus_path, eps_text, tol, random_pairs, as_json);
  } catch (const thue::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case thue::ErrCode::ParseError: return kExitParse;
      case thue::ErrCode::NonConvergence: return kExitPrecision;
      default: return kExitPrecondition;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
