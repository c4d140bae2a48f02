#include "lmm/golden.hpp"

#include <map>
#include <sstream>
#include <string_view>

namespace lmm {

namespace detail {
extern const std::string_view kPublishedLambdaText;
}

namespace {

const std::map<int, std::vector<std::pair<Monomial, Rational>>>& sections() {
  static const auto table = [] {
    std::map<int, std::vector<std::pair<Monomial, Rational>>> out;
    std::istringstream in{std::string(detail::kPublishedLambdaText)};
    std::string line;
    int current = -1;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("[lambda ", 0) == 0) {
        current = std::stoi(line.substr(8));
        out[current];
        continue;
      }
      if (current < 0) throw ParseError("golden data: term before first section");
      auto e = parse_text(line);
      if (e.size() != 1) throw ParseError("golden data: expected one term per line: " + line);
      auto term = *ordered_terms(e).begin();
      out[current].push_back(term);
    }
    return out;
  }();
  return table;
}

}  // namespace

std::vector<int> published_orders() {
  std::vector<int> h;
  for (const auto& [k, v] : sections()) h.push_back(k);
  return h;
}

std::vector<std::pair<Monomial, Rational>> published_terms(int h) {
  auto it = sections().find(h);
  if (it == sections().end()) throw std::out_of_range("no published lambda^(" + std::to_string(h) + ")");
  return it->second;
}

Expression published_lambda(int h) {
  Expression e;
  for (const auto& [m, c] : published_terms(h)) e.add_term(m, c);
  return e;
}

GoldenReport compare_lambda(int h, CouplingTable& table) {
  GoldenReport r;
  r.h = h;
  auto printed = published_terms(h);
  Expression pub = published_lambda(h);
  const Expression& got = table.lambda(h);
  r.published_terms = printed.size();
  r.computed_terms = got.size();
  r.equal = pub == got && printed.size() == got.size();
  r.negated = !r.equal && pub == Expression() - got;
  if (!r.equal) {
    for (const auto& [m, c] : printed) {
      Rational mine = got.coefficient(m);
      if (mine != c) r.mismatches.push_back(render_monomial(m) + ": published " + render_rational(c) + ", computed " + render_rational(mine));
    }
    for (const auto& [m, c] : ordered_terms(got))
      if (pub.coefficient(m) == 0) r.mismatches.push_back(render_monomial(m) + ": missing from published, computed " + render_rational(c));
    r.published_consistent = true;
    for (int kp = 0; kp <= 3 * h - 2 && r.published_consistent; ++kp)
      r.published_consistent = lambda_consistency(h, kp, pub, table);
  }
  return r;
}

std::string GoldenReport::summary() const {
  std::ostringstream o;
  o << "lambda^(" << h << "): " << published_terms << " published terms, " << computed_terms << " computed";
  if (equal) {
    o << ", identical";
  } else {
    o << ", " << mismatches.size() << " coefficient mismatches";
    if (negated) o << "; published table equals -1 times the computed result term by term";
    o << "; published candidate " << (published_consistent ? "satisfies" : "violates")
      << " the unintegrated coupling equation";
  }
  return o.str();
}

}  // namespace lmm
