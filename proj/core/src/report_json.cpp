#include "thue/report_json.hpp"

#include <iomanip>
#include <sstream>

#include "thue/errors.hpp"

namespace thue {

json interval_to_json(const Interval& v, int digits) {
  json j;
  j["dec"] = v.decimal(digits);
  j["lo"] = [&] {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*g", digits + 2, MPFR_RNDD, v.lo());
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }();
  j["hi"] = [&] {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*R*g", digits + 2, MPFR_RNDU, v.hi());
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }();
  j["pm"] = [&] {
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v.width_double() / 2;
    return os.str();
  }();
  // lossless binary endpoints
  auto hex = [](mpfr_srcptr x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  };
  j["lo_hex"] = hex(v.lo());
  j["hi_hex"] = hex(v.hi());
  return j;
}

Interval interval_from_json(const json& j) {
  Interval r;
  std::string lo = j.at("lo_hex").get<std::string>();
  std::string hi = j.at("hi_hex").get<std::string>();
  // 4 bits per hex mantissa digit keeps the parse exact
  mpfr_prec_t need = static_cast<mpfr_prec_t>(4 * std::max(lo.size(), hi.size()) + 16);
  mpfr_set_prec(r.mlo(), std::max(need, mpfr_get_prec(r.lo())));
  mpfr_set_prec(r.mhi(), std::max(need, mpfr_get_prec(r.hi())));
  if (mpfr_set_str(r.mlo(), lo.c_str(), 0, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.mhi(), hi.c_str(), 0, MPFR_RNDU) != 0)
    fail(ErrCode::ParseError, "bad interval endpoints in JSON");
  return r;
}

json solution_to_json(const Solution& s) {
  json j;
  j["x"] = s.x.get_str();
  j["y"] = s.y.get_str();
  j["value"] = s.value.get_str();
  j["related_root"] = s.related_root;
  j["class"] = size_class_name(s.size_class);
  j["primitive"] = s.primitive;
  if (s.related_tie) j["related_tie"] = true;
  return j;
}

json enumeration_to_json(const EnumerationResult& r) {
  json j;
  j["mode"] = mode_name(r.mode);
  j["m"] = r.m.get_str();
  j["y_max"] = r.y_max.get_str();
  j["exclude_zero"] = r.exclude_zero;
  j["complete_up_to"] = r.complete_up_to.get_str();
  j["count"] = r.solutions.size();
  json arr = json::array();
  for (const auto& s : r.solutions) arr.push_back(solution_to_json(s));
  j["solutions"] = arr;
  return j;
}

std::string enumeration_to_csv(const EnumerationResult& r) {
  std::ostringstream os;
  os << "x,y,value,related_root,class,primitive\n";
  for (const auto& s : r.solutions) {
    os << s.x.get_str() << "," << s.y.get_str() << "," << s.value.get_str() << ","
       << s.related_root << "," << size_class_name(s.size_class) << ","
       << (s.primitive ? "1" : "0") << "\n";
  }
  return os.str();
}

json mahler_to_json(const MahlerMeasure& m) {
  json j = interval_to_json(m.as_interval());
  if (m.exact) j["exact"] = m.exact->get_str();
  return j;
}

json rootsystem_to_json(const RootSystem& rs) {
  json j;
  j["n"] = rs.n();
  j["q"] = rs.q();
  j["real_count"] = rs.real_count();
  json arr = json::array();
  for (int k = 0; k < rs.n(); ++k) {
    json r;
    r["re"] = interval_to_json(rs.root_box(k).re);
    r["im"] = interval_to_json(rs.root_box(k).im);
    r["real"] = rs.is_real_root(k);
    r["conj"] = rs.conj_index(k);
    arr.push_back(r);
  }
  j["roots"] = arr;
  return j;
}

json bound_entry_to_json(const BoundEntry& e) {
  json j;
  j["id"] = e.id;
  j["applicable"] = applicability_name(e.applicable);
  if (!e.reason.empty()) j["reason"] = e.reason;
  if (!e.threshold.empty()) j["threshold"] = e.threshold;
  j["bound"] = e.bound;
  if (e.bound_floor) j["bound_floor"] = e.bound_floor->get_str();
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

json bound_report_to_json(const BoundReport& r) {
  json j;
  j["form"] = r.form;
  j["n"] = r.n;
  j["D"] = r.D.get_str();
  j["m"] = r.m.get_str();
  j["epsilon"] = r.epsilon.get_str();
  json arr = json::array();
  for (const auto& e : r.entries) arr.push_back(bound_entry_to_json(e));
  j["entries"] = arr;
  return j;
}

std::string bound_report_table(const BoundReport& r) {
  std::ostringstream os;
  os << "form: " << r.form << "\n";
  os << "n = " << r.n << ", D = " << r.D.get_str() << ", m = " << r.m.get_str()
     << ", epsilon = " << r.epsilon.get_str() << "\n";
  size_t idw = 4, appw = 10, bw = 5;
  for (const auto& e : r.entries) {
    idw = std::max(idw, e.id.size());
    appw = std::max(appw, std::string(applicability_name(e.applicable)).size());
    bw = std::max(bw, e.bound.size());
  }
  os << std::left << std::setw(static_cast<int>(idw) + 2) << "id"
     << std::setw(static_cast<int>(appw) + 2) << "applicable"
     << std::setw(static_cast<int>(bw) + 2) << "bound"
     << "floor  notes\n";
  for (const auto& e : r.entries) {
    os << std::left << std::setw(static_cast<int>(idw) + 2) << e.id
       << std::setw(static_cast<int>(appw) + 2) << applicability_name(e.applicable)
       << std::setw(static_cast<int>(bw) + 2) << e.bound
       << (e.bound_floor ? e.bound_floor->get_str() : "-");
    if (!e.reason.empty()) os << "  [" << e.reason << "]";
    os << "\n";
  }
  return os.str();
}

json logpoint_to_json(const LogPoint& p) {
  json j;
  j["x"] = p.x.get_str();
  j["y"] = p.y.get_str();
  json arr = json::array();
  for (const auto& c : p.coords) arr.push_back(interval_to_json(c));
  j["coords"] = arr;
  j["norm"] = interval_to_json(p.norm);
  return j;
}

json gap_to_json(const GapDiagnostics& g) {
  json j;
  json rr = json::array();
  for (const auto& x : g.r) rr.push_back(interval_to_json(x));
  j["r"] = rr;
  j["sides"] = {interval_to_json(g.side_a), interval_to_json(g.side_b), interval_to_json(g.side_c)};
  j["heron"] = interval_to_json(g.heron_area);
  j["gram"] = interval_to_json(g.gram_area);
  j["side_floor"] = interval_to_json(g.side_floor);
  j["A"] = interval_to_json(g.A);
  j["verdict_rhs"] = interval_to_json(g.verdict_rhs);
  j["thresholds_met"] = g.thresholds_met;
  j["degenerate"] = g.degenerate;
  j["vacuous"] = g.vacuous;
  if (g.verdict)
    j["verdict"] = *g.verdict;
  else
    j["verdict"] = nullptr;
  return j;
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.form = j.at("form").get<std::string>();
  r.n = j.at("n").get<int>();
  r.D = Int(j.at("D").get<std::string>());
  r.m = Int(j.at("m").get<std::string>());
  r.epsilon = Rat(j.at("epsilon").get<std::string>());
  for (const auto& je : j.at("entries")) {
    BoundEntry e;
    e.id = je.at("id").get<std::string>();
    std::string app = je.at("applicable").get<std::string>();
    e.applicable = app == "yes" ? Applicability::Yes
                                : (app == "no" ? Applicability::No : Applicability::Boundary);
    if (je.contains("reason")) e.reason = je.at("reason").get<std::string>();
    if (je.contains("threshold")) e.threshold = je.at("threshold").get<std::string>();
    e.bound = je.at("bound").get<std::string>();
    if (je.contains("bound_floor")) e.bound_floor = Int(je.at("bound_floor").get<std::string>());
    if (je.contains("notes"))
      for (const auto& nn : je.at("notes")) e.notes.push_back(nn.get<std::string>());
    r.entries.push_back(std::move(e));
  }
  return r;
}

EnumerationResult enumeration_from_json(const json& j) {
  EnumerationResult r;
  std::string mode = j.at("mode").get<std::string>();
  r.mode = mode == "eq" ? SolveMode::Equation : SolveMode::Inequality;
  r.m = Int(j.at("m").get<std::string>());
  r.y_max = Int(j.at("y_max").get<std::string>());
  r.exclude_zero = j.at("exclude_zero").get<bool>();
  r.complete_up_to = Int(j.at("complete_up_to").get<std::string>());
  for (const auto& js : j.at("solutions")) {
    Solution s;
    s.x = Int(js.at("x").get<std::string>());
    s.y = Int(js.at("y").get<std::string>());
    s.value = Int(js.at("value").get<std::string>());
    s.related_root = js.at("related_root").get<int>();
    s.primitive = js.at("primitive").get<bool>();
    std::string cls = js.at("class").get<std::string>();
    if (cls == "small") s.size_class = SizeClass::Small;
    else if (cls == "medium") s.size_class = SizeClass::Medium;
    else if (cls == "large") s.size_class = SizeClass::Large;
    else if (cls == "above-window") s.size_class = SizeClass::AboveWindow;
    else s.size_class = SizeClass::Unclassified;
    if (js.contains("related_tie")) s.related_tie = js.at("related_tie").get<bool>();
    r.solutions.push_back(std::move(s));
  }
  return r;
}

}  // namespace thue
