#include <algorithm>
#include <json.hpp>
#include <regex>
#include <sstream>

#include "lmm/expression.hpp"

namespace lmm {

namespace {

std::vector<Factor> render_sorted(const Monomial& m) {
  std::vector<Factor> f = m.factors();
  std::sort(f.begin(), f.end(), [](const Factor& a, const Factor& b) { return render_less(a.gen, b.gen); });
  return f;
}

}  // namespace

bool render_order_less(const Monomial& a, const Monomial& b) {
  auto fa = render_sorted(a), fb = render_sorted(b);
  auto ia = fa.begin(), ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    int ea, eb;
    if (ib == fb.end() || (ia != fa.end() && render_less(ia->gen, ib->gen))) {
      ea = ia->exp;
      eb = 0;
      ++ia;
    } else if (ia == fa.end() || render_less(ib->gen, ia->gen)) {
      ea = 0;
      eb = ib->exp;
      ++ib;
    } else {
      ea = ia->exp;
      eb = ib->exp;
      ++ia;
      ++ib;
    }
    if (ea != eb) return ea < eb;
  }
  return false;
}

std::vector<std::pair<Monomial, Rational>> ordered_terms(const Expression& e) {
  std::vector<std::pair<Monomial, Rational>> v(e.terms().begin(), e.terms().end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return render_order_less(x.first, y.first); });
  return v;
}

std::string render_rational(const Rational& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string render_monomial(const Monomial& m) {
  std::string s;
  for (const auto& fa : render_sorted(m)) {
    if (!s.empty()) s += " * ";
    s += fa.gen.name();
    if (fa.exp != 1) s += "^" + std::to_string(fa.exp);
  }
  return s;
}

std::string render_text(const Expression& e) {
  if (e.is_zero()) return "0\n";
  std::string out;
  for (const auto& [m, c] : ordered_terms(e)) {
    out += c < 0 ? "- " : "+ ";
    out += render_rational(abs(c));
    if (!m.empty()) out += " * " + render_monomial(m);
    out += "\n";
  }
  return out;
}

std::string render_json(const Expression& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : ordered_terms(e)) {
    nlohmann::json ex = nlohmann::json::array();
    for (const auto& fa : render_sorted(m)) ex.push_back({fa.gen.name(), fa.exp});
    arr.push_back({{"coefficient", c.get_str()}, {"exponents", ex}});
  }
  return arr.dump();
}

Generator parse_generator(const std::string& name) {
  static const std::regex moment(R"(y(\d+)(?:_(\d+))?)");
  static const std::regex logm(R"(log\(y1(?:_(\d+))?\))");
  static const std::regex ext(R"(B_(\d+)\^(\d+)\(([A-Za-z][A-Za-z0-9_]*)\))");
  static const std::regex intp(R"(B_(\d+),(\d+)\^(\d+),(\d+))");
  std::smatch mm;
  auto num = [&](int k) { return mm[k].matched ? std::stoi(mm[k].str()) : 0; };
  if (std::regex_match(name, mm, moment)) return Generator::moment(num(1), num(2));
  if (std::regex_match(name, mm, logm)) return Generator::log_moment(num(1));
  if (std::regex_match(name, mm, ext)) return Generator::ext_prop(num(1), num(2), PointLabel(mm[3].str()));
  if (std::regex_match(name, mm, intp)) return Generator::int_prop(num(1), num(2), num(3), num(4));
  throw ParseError("unknown generator '" + name + "'");
}

Expression parse_text(const std::string& text) {
  static const std::regex int_re(R"(-?\d+)");
  Expression out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    if (line == "0") continue;
    auto fail = [&](const std::string& why) {
      return ParseError("line " + std::to_string(lineno) + ": " + why + ": '" + line + "'");
    };
    if (line.size() < 3 || (line[0] != '+' && line[0] != '-') || line[1] != ' ') throw fail("expected sign");
    std::vector<std::string> parts;
    std::string rest = line.substr(2);
    for (std::size_t pos = 0;;) {
      auto next = rest.find(" * ", pos);
      parts.push_back(rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
      if (next == std::string::npos) break;
      pos = next + 3;
    }
    Rational c;
    try {
      c = Rational(parts[0]);
      c.canonicalize();
    } catch (const std::invalid_argument&) {
      throw fail("bad coefficient");
    }
    if (line[0] == '-') c = -c;
    Monomial m;
    for (std::size_t k = 1; k < parts.size(); ++k) {
      const std::string& p = parts[k];
      std::string gname = p, tail;
      auto close = p.find(')');
      if (close != std::string::npos) {
        gname = p.substr(0, close + 1);
        tail = p.substr(close + 1);
      } else {
        auto caret = p.rfind('^');
        bool has_exp = caret != std::string::npos &&
                       (p.compare(0, 2, "B_") != 0 || std::count(p.begin(), p.end(), '^') == 2);
        if (has_exp) {
          gname = p.substr(0, caret);
          tail = p.substr(caret);
        }
      }
      int exp = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || !std::regex_match(tail.substr(1), int_re)) throw fail("bad exponent");
        exp = std::stoi(tail.substr(1));
      }
      m = m.times(parse_generator(gname), exp);
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace lmm
