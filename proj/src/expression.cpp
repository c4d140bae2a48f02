#include "lmm/expression.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lmm {

Monomial::Monomial(Generator g, int exp) {
  if (exp != 0) f_.push_back({g, exp});
  check(f_);
}

void Monomial::check(const std::vector<Factor>& f) {
  for (const auto& fa : f) {
    if (fa.gen.kind() == GeneratorKind::LogMoment && fa.exp > 1) throw LogDegreeError();
    if (fa.exp < 0 && !fa.gen.is_y1()) throw Error("negative exponent on " + fa.gen.name());
  }
}

int Monomial::exponent(Generator g) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), g, [](const Factor& a, Generator b) { return a.gen < b; });
  return (it != f_.end() && it->gen == g) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->gen < b->gen)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->gen < a->gen) {
      r.f_.push_back(*b++);
    } else {
      int e = a->exp + b->exp;
      if (e != 0) r.f_.push_back({a->gen, e});
      ++a;
      ++b;
    }
  }
  check(r.f_);
  return r;
}

Monomial Monomial::times(Generator g, int delta) const {
  if (delta == 0) return *this;
  Monomial r = *this;
  auto it = std::lower_bound(r.f_.begin(), r.f_.end(), g, [](const Factor& a, Generator b) { return a.gen < b; });
  if (it != r.f_.end() && it->gen == g) {
    it->exp += delta;
    if (it->exp == 0) r.f_.erase(it);
  } else {
    r.f_.insert(it, {g, delta});
  }
  check(r.f_);
  return r;
}

Expression::Expression(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Expression::Expression(Generator g, int exp) { terms_.emplace(Monomial(g, exp), Rational(1)); }

Expression::Expression(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

Rational Expression::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Expression::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Expression& Expression::operator+=(const Expression& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Expression& Expression::operator-=(const Expression& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Expression& Expression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Expression operator*(const Expression& a, const Expression& b) {
  Expression r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = r.terms_.try_emplace(std::move(m));
      if (inserted) {
        mpq_mul(it->second.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

std::vector<Generator> Expression::generators() const {
  std::set<Generator> s;
  for (const auto& [m, c] : terms_)
    for (const auto& fa : m.factors()) s.insert(fa.gen);
  return {s.begin(), s.end()};
}

bool Expression::contains_kind(GeneratorKind k) const {
  for (const auto& [m, c] : terms_)
    for (const auto& fa : m.factors())
      if (fa.gen.kind() == k) return true;
  return false;
}

Expression add(const Expression& a, const Expression& b) { return a + b; }
Expression mul(const Expression& a, const Expression& b) { return a * b; }

Expression pow(const Expression& a, int n) {
  if (n < 0) throw std::invalid_argument("negative power of an expression");
  Expression r(1);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

Expression diff(const Expression& e, Generator v) {
  if (!v.is_moment()) throw std::invalid_argument("diff: variable must be a moment generator");
  Generator lg = Generator::log_moment(v.cut());
  Expression r;
  for (const auto& [m, c] : e.terms()) {
    int k = m.exponent(v);
    if (k != 0) r.add_term(m.times(v, -1), c * k);
    if (v.is_y1() && m.exponent(lg) == 1) r.add_term(m.times(lg, -1).times(v, -1), c);
  }
  return r;
}

Expression project_y1(const Expression& e, int r, int cut) {
  Expression out;
  for (const auto& [m, c] : e.terms())
    if (m.y1_degree(cut) == -r) out.add_term(m, c);
  return out;
}

Complex evaluate(const Expression& e, const Environment& env) {
  std::set<std::string> missing;
  auto lookup = [&](Generator g, Complex& out) {
    if (g.kind() == GeneratorKind::LogMoment) {
      auto it = env.find(g);
      if (it != env.end()) {
        out = it->second;
        return true;
      }
      auto y = env.find(Generator::moment(1, g.cut()));
      if (y == env.end()) return false;
      out = std::log(y->second);
      return true;
    }
    auto it = env.find(g);
    if (it == env.end()) return false;
    out = it->second;
    return true;
  };
  Complex total = 0;
  for (const auto& [m, c] : e.terms()) {
    Complex t = c.get_d();
    for (const auto& fa : m.factors()) {
      Complex v;
      if (!lookup(fa.gen, v)) {
        missing.insert(fa.gen.kind() == GeneratorKind::LogMoment ? Generator::moment(1, fa.gen.cut()).name()
                                                                 : fa.gen.name());
        continue;
      }
      Complex p = 1;
      int n = fa.exp < 0 ? -fa.exp : fa.exp;
      for (int i = 0; i < n; ++i) p *= v;
      t *= fa.exp < 0 ? 1.0 / p : p;
    }
    total += t;
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& n : missing) names += (names.empty() ? "" : ", ") + n;
    throw UnboundGenerator(names);
  }
  return total;
}

Expression substitute_point(const Expression& e, PointLabel from, PointLabel to) {
  return map_generators(e, [&](Generator g) {
    return g.kind() == GeneratorKind::ExtProp && g.point() == from ? g.with_point(to) : g;
  });
}

Expression attach_index(const Expression& e, int cut) {
  return map_generators(e, [&](Generator g) {
    bool free_index = (g.kind() == GeneratorKind::Moment || g.kind() == GeneratorKind::LogMoment) && g.cut() == 0;
    return free_index ? g.with_cut(cut) : g;
  });
}

}  // namespace lmm
