#include "lmm/properties.hpp"

#include "lmm/loop_oracle.hpp"
#include "lmm/multi_index.hpp"

namespace lmm {

namespace {

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok && r.failures++ == 0) r.first_failure = what;
}

}  // namespace

int RandomExpressions::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Expression RandomExpressions::unindexed(bool with_log) {
  Expression e;
  int terms = uniform(1, 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m(Generator::moment(1), uniform(-5, 2));
    int factors = uniform(0, 3);
    for (int f = 0; f < factors; ++f) m = m.times(Generator::moment(uniform(2, 6)), uniform(1, 3));
    if (with_log && uniform(0, 2) == 0) m = m.times(Generator::log_moment(), 1);
    if (m.y1_degree() == 0 && m.factors().empty()) m = Monomial(Generator::moment(2));
    e.add_term(m, ratio(uniform(-9, 9) | 1, uniform(1, 6)));
  }
  return e;
}

Expression RandomExpressions::indexed() {
  static const PointLabel points[2] = {PointLabel("p1"), PointLabel("p2")};
  Expression e;
  int terms = uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int factors = uniform(1, 3);
    for (int f = 0; f < factors; ++f) {
      int i = uniform(1, 2);
      switch (uniform(0, 3)) {
        case 0: m = m.times(Generator::moment(1, i), uniform(-3, 2)); break;
        case 1: m = m.times(Generator::moment(uniform(2, 4), i), uniform(1, 2)); break;
        case 2: m = m.times(Generator::ext_prop(i, uniform(0, 2), points[uniform(0, 1)]), 1); break;
        default: m = m.times(Generator::int_prop(i, uniform(1, 2), uniform(0, 2), uniform(0, 2)), 1); break;
      }
    }
    if (m.factors().empty()) m = Monomial(Generator::moment(2, 1));
    e.add_term(m, ratio(uniform(-9, 9) | 1, uniform(1, 6)));
  }
  return e;
}

Generator RandomExpressions::unindexed_variable() { return Generator::moment(uniform(1, 6)); }

PropertyResult check_leibniz_diff(std::uint64_t seed, int cases) {
  PropertyResult r{"Leibniz rule for diff", 0, 0, {}};
  RandomExpressions gen(seed);
  for (int c = 0; c < cases; ++c) {
    Expression a = gen.unindexed(true), b = gen.unindexed(false);
    Generator v = gen.unindexed_variable();
    Expression lhs = diff(a * b, v), rhs = diff(a, v) * b + a * diff(b, v);
    record(r, lhs == rhs, "d/d" + v.name() + " of (" + render_text(a) + ") * (" + render_text(b) + ")");
  }
  return r;
}

PropertyResult check_leibniz_loop(std::uint64_t seed, int cases) {
  PropertyResult r{"Leibniz rule for loop_apply", 0, 0, {}};
  RandomExpressions gen(seed);
  LoopContext ctx{1, PointLabel("q")};
  for (int c = 0; c < cases; ++c) {
    Expression a = gen.indexed(), b = gen.indexed();
    Expression lhs = loop_apply(a * b, ctx), rhs = loop_apply(a, ctx) * b + a * loop_apply(b, ctx);
    record(r, lhs == rhs, "(" + render_text(a) + ") * (" + render_text(b) + ")");
  }
  return r;
}

PropertyResult check_projectors(std::uint64_t seed, int cases) {
  PropertyResult r{"y1-degree projector algebra", 0, 0, {}};
  RandomExpressions gen(seed);
  for (int c = 0; c < cases; ++c) {
    Expression e = gen.unindexed(false);
    Expression sum;
    bool ok = true;
    for (int d = -3; d <= 6; ++d) {
      Expression p = project_y1(e, d);
      sum += p;
      ok &= project_y1(p, d) == p;
      for (int t = -3; t <= 6 && ok; ++t)
        if (t != d) ok &= project_y1(p, t).is_zero();
    }
    ok &= sum == e;
    record(r, ok, render_text(e));
  }
  return r;
}

PropertyResult check_z_convolution(int max_n) {
  PropertyResult r{"Z convolution identity", 0, 0, {}};
  for (int n = 0; n <= max_n; ++n) {
    Expression s;
    for (int m = 0; m <= n; ++m) s += z_poly(m) * Expression(Generator::moment(n - m + 1));
    record(r, s == Expression(n == 0 ? 1 : 0), "n = " + std::to_string(n));
  }
  return r;
}

PropertyResult check_lambda_grading(int max_h, CouplingTable& table) {
  PropertyResult r{"lambda grading and moment cutoff", 0, 0, {}};
  for (int h = 1; h <= max_h; ++h) {
    for (const auto& [m, c] : table.lambda(h).terms()) {
      int total = 0, weighted = 0, top = 0;
      for (const auto& f : m.factors()) {
        if (!f.gen.is_moment()) continue;
        total += f.exp;
        weighted += f.gen.order() * f.exp;
        top = std::max(top, f.gen.order());
      }
      bool ok = total == 2 - 2 * h && weighted == h - 1 && top <= 3 * h - 2;
      record(r, ok, "h = " + std::to_string(h) + ": " + render_monomial(m));
    }
  }
  return r;
}

}  // namespace lmm
