#include <cctype>
#include <map>
#include <optional>
#include <tuple>

#include "thue/errors.hpp"
#include "thue/forms.hpp"

namespace thue {

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& why) {
  fail(ErrCode::ParseError, why + " at position " + std::to_string(pos) + " in \"" + text + "\"");
}

BinaryForm parse_coeff_list(const std::string& text) {
  std::vector<Int> coeffs;
  size_t pos = 0;
  const size_t len = text.size();
  while (pos <= len) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // strip whitespace
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) parse_fail(text, pos, "empty coefficient");
    tok = tok.substr(b, e - b + 1);
    try {
      coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      parse_fail(text, pos, "bad integer '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == len) parse_fail(text, pos, "empty coefficient");
  }
  if (coeffs.size() < 2) parse_fail(text, 0, "need at least two coefficients");
  return BinaryForm(std::move(coeffs));
}

// Grammar: term ('+'|'-' term)*, term = [coeff] ['*'] [x['^'i]] ['*'] [y['^'j]]
struct PolyParser {
  const std::string& s;
  size_t i = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  std::optional<Int> number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return std::nullopt;
    return Int(s.substr(start, i - start));
  }

  long exponent() {
    if (eat('^')) {
      auto e = number();
      if (!e) parse_fail(s, i, "missing exponent");
      if (!e->fits_slong_p() || e->get_si() < 0) parse_fail(s, i, "bad exponent");
      return e->get_si();
    }
    return 1;
  }

  // Returns (coefficient, deg_x, deg_y); empty optional at end of input.
  std::optional<std::tuple<Int, long, long>> term(bool first) {
    skip_ws();
    if (i >= s.size()) return std::nullopt;
    int sign = 1;
    if (eat('+')) {
      // explicit plus
    } else if (eat('-')) {
      sign = -1;
    } else if (!first) {
      parse_fail(s, i, "expected '+' or '-'");
    }
    skip_ws();
    std::optional<Int> c = number();
    long dx = 0, dy = 0;
    bool saw_var = false;
    for (;;) {
      skip_ws();
      size_t before = i;
      if (eat('*')) skip_ws();
      if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
        ++i;
        dx += exponent();
        saw_var = true;
        continue;
      }
      if (i < s.size() && (s[i] == 'y' || s[i] == 'Y')) {
        ++i;
        dy += exponent();
        saw_var = true;
        continue;
      }
      i = before;
      break;
    }
    if (!c && !saw_var) parse_fail(s, i, "expected a term");
    Int coeff = c ? *c : Int(1);
    if (sign < 0) coeff = -coeff;
    return std::make_tuple(coeff, dx, dy);
  }

  BinaryForm run() {
    std::map<std::pair<long, long>, Int> monos;
    long degree = -1;
    bool first = true;
    for (;;) {
      auto t = term(first);
      if (!t) break;
      first = false;
      auto [c, dx, dy] = *t;
      monos[{dx, dy}] += c;
      if (degree < 0)
        degree = dx + dy;
      else if (dx + dy != degree)
        parse_fail(s, i, "form is not homogeneous (mixed total degrees)");
    }
    if (degree < 1) parse_fail(s, 0, "empty polynomial");
    std::vector<Int> coeffs(static_cast<size_t>(degree) + 1, Int(0));
    for (const auto& [k, v] : monos) coeffs[static_cast<size_t>(degree - k.first)] = v;
    return BinaryForm(std::move(coeffs));
  }
};

}  // namespace

BinaryForm parse_form(const std::string& text) {
  if (text.find(',') != std::string::npos) return parse_coeff_list(text);
  if (text.find('x') == std::string::npos && text.find('X') == std::string::npos &&
      text.find('y') == std::string::npos && text.find('Y') == std::string::npos) {
    // single number without variables: not a valid form
    parse_fail(text, 0, "expected coefficients or a polynomial in x, y");
  }
  return PolyParser(text).run();
}

}  // namespace thue
