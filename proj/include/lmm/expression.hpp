#pragma once

#include <complex>
#include <gmpxx.h>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lmm/errors.hpp"
#include "lmm/generator.hpp"

namespace lmm {

using Rational = mpq_class;
using Complex = std::complex<double>;

// n/d in lowest terms (mpq_class(n, d) alone does not reduce).
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

struct Factor {
  Generator gen;
  int exp;
  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// Product of generator powers, stored sorted by generator key with no zero
// exponents. Only y_{1,i} may carry a negative exponent; log y1 at most 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Generator g, int exp = 1);

  const std::vector<Factor>& factors() const { return f_; }
  bool empty() const { return f_.empty(); }
  int exponent(Generator g) const;

  // Exponent of y_{1,cut}; negative values mean inverse powers.
  int y1_degree(int cut = 0) const { return exponent(Generator::moment(1, cut)); }

  Monomial operator*(const Monomial& o) const;
  // Multiplies by g^delta; delta may be negative (used by differentiation).
  Monomial times(Generator g, int delta) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  friend class Expression;
  static void check(const std::vector<Factor>& f);
  std::vector<Factor> f_;
};

// Sparse exact-rational linear combination of monomials. Zero coefficients
// are never stored, so map equality is mathematical equality.
class Expression {
 public:
  using Terms = std::map<Monomial, Rational>;

  Expression() = default;
  Expression(const Rational& c);
  Expression(long c) : Expression(Rational(c)) {}
  Expression(int c) : Expression(Rational(c)) {}
  explicit Expression(Generator g, int exp = 1);
  Expression(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);
  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  Expression& operator*=(const Rational& c);

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator-(Expression a) { return a *= Rational(-1); }
  friend Expression operator*(Expression a, const Rational& c) { return a *= c; }
  friend Expression operator*(const Rational& c, Expression a) { return a *= c; }
  friend Expression operator*(const Expression& a, const Expression& b);

  friend bool operator==(const Expression&, const Expression&) = default;

  // Sorted set of generators occurring anywhere.
  std::vector<Generator> generators() const;
  bool contains_kind(GeneratorKind k) const;

 private:
  Terms terms_;
};

Expression add(const Expression& a, const Expression& b);
Expression mul(const Expression& a, const Expression& b);
Expression pow(const Expression& a, int n);

// Formal partial derivative with respect to a Moment generator.
Expression diff(const Expression& e, Generator v);

// Terms whose y_{1,cut} exponent is exactly -r.
Expression project_y1(const Expression& e, int r, int cut = 0);

using Environment = std::map<Generator, Complex>;
Complex evaluate(const Expression& e, const Environment& env);

Expression substitute_point(const Expression& e, PointLabel from, PointLabel to);

// Moves every index-free moment and log-moment onto cut `cut`.
Expression attach_index(const Expression& e, int cut);

// General termwise relabelling; the callback maps one generator to another.
template <class F>
Expression map_generators(const Expression& e, F&& fn) {
  Expression out;
  for (const auto& [m, c] : e.terms()) {
    Monomial r;
    for (const auto& fa : m.factors()) r = r.times(fn(fa.gen), fa.exp);
    out.add_term(r, c);
  }
  return out;
}

std::string render_text(const Expression& e);
std::string render_json(const Expression& e);
std::string render_monomial(const Monomial& m);
std::string render_rational(const Rational& c);
// Render ordering of monomials: lexicographic on exponent vectors over
// generators in render order, absent generators counting as exponent 0.
bool render_order_less(const Monomial& a, const Monomial& b);
std::vector<std::pair<Monomial, Rational>> ordered_terms(const Expression& e);

Expression parse_text(const std::string& text);
Generator parse_generator(const std::string& name);

}  // namespace lmm
