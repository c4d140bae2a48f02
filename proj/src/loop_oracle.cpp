#include "lmm/loop_oracle.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "lmm/multi_index.hpp"
#include "lmm/parallel.hpp"

namespace lmm {

namespace {

Expression gen(Generator g, int e = 1) { return Expression(g, e); }
Expression y(int f, int i, int e = 1) { return gen(Generator::moment(f, i), e); }
Expression bx(int i, int f, PointLabel p) { return gen(Generator::ext_prop(i, f, p)); }
Expression bb(int i, int j, int f, int g) { return gen(Generator::int_prop(i, j, f, g)); }

void require_index(Generator g) {
  if (g.cut() == 0) throw Error("loop operator needs indexed generators, got " + g.name());
}

}  // namespace

Expression delta_apply(int which, Generator t, const LoopContext& ctx) {
  PointLabel q = ctx.new_point;
  int n = 2 * ctx.s;
  switch (t.kind()) {
    case GeneratorKind::Moment: {
      require_index(t);
      int f = t.order(), i = t.cut();
      if (which == 1) return y(f + 1, i) * y(1, i, -1) * bx(i, 0, q) * Rational(2 * f + 1);
      if (which == 2) return -bx(i, f, q);
      return {};
    }
    case GeneratorKind::ExtProp: {
      require_index(t);
      int i = t.cut(), f = t.order();
      PointLabel p = t.point();
      if (which == 3) return bx(i, f + 1, p) * bx(i, 0, q) * y(1, i, -1) * Rational(2 * f + 1);
      if (which == 4) {
        Expression r;
        for (int j = 1; j <= n; ++j) r += bb(i, j, f, 0) * bx(j, 0, p) * bx(j, 0, q) * y(1, j, -1);
        return r;
      }
      return {};
    }
    case GeneratorKind::IntProp: {
      require_index(t);
      int i = t.cut(), j = t.cut2(), f = t.order(), g = t.order2();
      if (which == 5) return bb(i, j, f + 1, g) * bx(i, 0, q) * y(1, i, -1) * Rational(2 * f + 1);
      if (which == 6) return bb(i, j, f, g + 1) * bx(j, 0, q) * y(1, j, -1) * Rational(2 * g + 1);
      if (which == 7) {
        Expression r;
        for (int k = 1; k <= n; ++k) r += bb(i, k, f, 0) * bb(j, k, g, 0) * bx(k, 0, q) * y(1, k, -1);
        return r;
      }
      return {};
    }
    case GeneratorKind::LogMoment:
      throw LogPresent();
  }
  return {};
}

Expression loop_apply(const Expression& e, const LoopContext& ctx) {
  if (e.contains_kind(GeneratorKind::LogMoment)) throw LogPresent();
  for (const auto& g : e.generators())
    if (g.kind() == GeneratorKind::ExtProp && g.point() == ctx.new_point)
      throw std::invalid_argument("new point " + ctx.new_point.name() + " already occurs");
  std::map<Generator, Expression> var;
  for (const auto& g : e.generators()) {
    Expression v;
    for (int w = 1; w <= 7; ++w) v += delta_apply(w, g, ctx);
    var.emplace(g, std::move(v));
  }
  Expression out;
  for (const auto& [m, c] : e.terms())
    for (const auto& fa : m.factors()) {
      Monomial rest = m.times(fa.gen, -1);
      Rational cc = c * fa.exp;
      for (const auto& [vm, vc] : var.at(fa.gen).terms()) out.add_term(rest * vm, cc * vc);
    }
  return out;
}

Expression residue_step(int f, int g, int j, int k, int i, PointLabel p, int s) {
  (void)s;
  Expression r = bb(j, i, f, 0) * bx(i, 0, p) * y(1, i, -1) * bb(i, k, 0, g) * ratio(1, 2);
  if (k == i)
    for (int rr = 0; rr <= g + 1; ++rr)
      for (int mm = 0; rr + mm <= g + 1; ++mm)
        r += bx(i, rr, p) * bb(j, i, f, mm) * z_poly(g + 1 - rr - mm, i) * ratio(2 * g + 1, 2 * (2 * rr + 1));
  if (j == i)
    for (int rr = 0; rr <= f + 1; ++rr)
      for (int mm = 0; rr + mm <= f + 1; ++mm)
        r += bx(i, rr, p) * bb(k, i, g, mm) * z_poly(f + 1 - rr - mm, i) * ratio(2 * f + 1, 2 * (2 * rr + 1));
  if (j == i && k == i)
    for (int rr = 0; rr <= f + g + 2; ++rr)
      r += bx(i, rr, p) * z_poly(f + g + 2 - rr, i) * ratio((2 * g + 1) * (2 * f + 1), 2 * (2 * rr + 1));
  return r;
}

Expression w1_seed(int s, PointLabel p) {
  Expression r;
  for (int i = 1; i <= 2 * s; ++i) {
    r += y(2, i) * y(1, i, -2) * bx(i, 0, p) * ratio(-1, 8);
    r += y(1, i, -1) * bx(i, 1, p) * ratio(1, 24);
    r += y(1, i, -1) * bb(i, i, 0, 0) * bx(i, 0, p) * ratio(1, 2);
  }
  return r;
}

namespace {

// Maps every (x-free coefficient) B_j^f(x) B_k^g(x) term through the
// residue identity, summed over branch points.
Expression residue_sum(const Expression& e, PointLabel x, PointLabel p, int s) {
  using Key = std::tuple<int, int, int, int>;
  struct Item {
    Monomial rest;
    Rational c;
    Key key;
  };
  std::vector<Item> items;
  for (const auto& [m, c] : e.terms()) {
    std::vector<Generator> at_x;
    Monomial rest;
    for (const auto& fa : m.factors()) {
      if (fa.gen.kind() == GeneratorKind::ExtProp && fa.gen.point() == x) {
        for (int n = 0; n < fa.exp; ++n) at_x.push_back(fa.gen);
      } else {
        rest = rest.times(fa.gen, fa.exp);
      }
    }
    if (at_x.size() != 2)
      throw StructuralError("term with " + std::to_string(at_x.size()) + " propagators at " + x.name() + ": " +
                            render_monomial(m));
    items.push_back({rest, c, {at_x[0].order(), at_x[1].order(), at_x[0].cut(), at_x[1].cut()}});
  }
  std::map<Key, Expression> kernel;
  for (const auto& it : items) kernel.try_emplace(it.key);
  std::vector<std::pair<const Key, Expression>*> slots;
  for (auto& kv : kernel) slots.push_back(&kv);
  parallel_for(slots.size(), [&](std::size_t n) {
    auto [f, g, j, k] = slots[n]->first;
    Expression r;
    for (int i = 1; i <= 2 * s; ++i) r += residue_step(f, g, j, k, i, p, s);
    slots[n]->second = std::move(r);
  });
  int workers = std::max(1, worker_count());
  std::vector<Expression> partial(workers);
  parallel_for(static_cast<std::size_t>(workers), [&](std::size_t w) {
    for (std::size_t n = w; n < items.size(); n += workers) {
      const auto& it = items[n];
      for (const auto& [km, kc] : kernel.at(it.key).terms()) partial[w].add_term(it.rest * km, it.c * kc);
    }
  });
  Expression out;
  for (const auto& part : partial) out += part;
  return out;
}

}  // namespace

std::vector<Expression> w1_series(int h, int s, const Expression& seed) {
  if (seed.is_zero()) throw SeedMissing("W_1^(1) seed is empty");
  if (h < 1) throw std::invalid_argument("h must be at least 1");
  PointLabel p("p"), q("q"), x("x");
  std::vector<Expression> w(h + 1);
  w[1] = seed;
  for (int hh = 2; hh <= h; ++hh) {
    Expression tot;
    for (int m = 1; m < hh; ++m) tot += substitute_point(w[hh - m], p, x) * substitute_point(w[m], p, x);
    Expression w2 = loop_apply(w[hh - 1], {s, q});
    tot += substitute_point(substitute_point(w2, p, x), q, x);
    w[hh] = residue_sum(tot, x, p, s);
  }
  return w;
}

Expression w1_recursion(int h, int s, const Expression& seed) {
  if (h < 2) throw std::invalid_argument("the recursion starts at h = 2");
  return w1_series(h, s, seed)[h];
}

Expression w1_recursion(int h, int s) { return w1_recursion(h, s, w1_seed(s)); }

}  // namespace lmm
