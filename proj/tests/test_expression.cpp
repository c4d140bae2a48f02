#include <doctest.h>

#include "lmm/coupling.hpp"
#include "lmm/golden.hpp"

using namespace lmm;

namespace {

Generator y(int f, int cut = 0) { return Generator::moment(f, cut); }
Expression Y(int f, int e = 1, int cut = 0) { return Expression(y(f, cut), e); }

}  // namespace

TEST_SUITE("exact-algebra") {
  TEST_CASE("ratio reduces to lowest terms") {
    CHECK(ratio(6, 4) == Rational(3, 2));
    CHECK(ratio(0, 5).get_den() == 1);
    CHECK(ratio(3, -6).get_str() == "-1/2");
  }

  TEST_CASE("generator names") {
    CHECK(y(2).name() == "y2");
    CHECK(y(2, 1).name() == "y2_1");
    CHECK(Generator::log_moment(1).name() == "log(y1_1)");
    CHECK(Generator::ext_prop(1, 0, PointLabel("p")).name() == "B_1^0(p)");
    CHECK(Generator::int_prop(1, 2, 0, 1).name() == "B_1,2^0,1");
  }

  TEST_CASE("internal propagator orientation is canonical") {
    CHECK(Generator::int_prop(2, 1, 1, 0) == Generator::int_prop(1, 2, 0, 1));
    CHECK(Generator::int_prop(1, 1, 1, 0) == Generator::int_prop(1, 1, 0, 1));
  }

  TEST_CASE("additive inverse and identity") {
    CHECK((Y(1, -1) + (-Y(1, -1))).is_zero());
    CouplingTable t;
    CHECK(t.lambda(2) + Expression() == t.lambda(2));
  }

  TEST_CASE("assembled lambda^(2) equals the published list") {
    Expression e = ratio(-21, 160) * (Y(2, 3) * Y(1, -5)) + ratio(29, 128) * (Y(2) * Y(3) * Y(1, -4)) +
                   ratio(-35, 384) * (Y(4) * Y(1, -3));
    CHECK(e == published_lambda(2));
    CouplingTable t;
    CHECK(e == t.lambda(2));
  }

  TEST_CASE("multiplication adds exponents") {
    CHECK(Y(1, -1) * Y(1, -1) == Y(1, -2));
    CHECK(Y(2) * Y(1, -1) * (Y(2, 2) * Y(1, -4)) == Y(2, 3) * Y(1, -5));
    CHECK((Y(1) * Y(1, -1)) == Expression(1));
  }

  TEST_CASE("log degree above one is rejected") {
    Expression l(Generator::log_moment());
    CHECK_THROWS_AS(l * l, LogDegreeError);
    CHECK_THROWS_AS(pow(l, 2), LogDegreeError);
  }

  TEST_CASE("negative exponents only on y1") {
    CHECK_THROWS_AS(Expression(y(2), -1), Error);
    CHECK_NOTHROW(Expression(y(1), -3));
  }

  TEST_CASE("differentiation") {
    Expression lam1 = ratio(-1, 24) * Expression(Generator::log_moment());
    CHECK(diff(lam1, y(1)) == ratio(-1, 24) * Y(1, -1));
    CHECK(diff(Y(2, 3) * Y(1, -5), y(2)) == Rational(3) * (Y(2, 2) * Y(1, -5)));
    CHECK(diff(Y(4) * Y(1, -3), y(2)).is_zero());
    CHECK(diff(Y(1, -3), y(1)) == Rational(-3) * Y(1, -4));
  }

  TEST_CASE("y1 projection") {
    CouplingTable t;
    const Expression& l2 = t.lambda(2);
    CHECK(project_y1(l2, 5) == ratio(-21, 160) * (Y(2, 3) * Y(1, -5)));
    CHECK(project_y1(l2, 7).is_zero());
    Expression sum;
    for (int r = -2; r <= 12; ++r) sum += project_y1(t.lambda(3), r);
    CHECK(sum == t.lambda(3));
  }

  TEST_CASE("evaluation") {
    Environment env{{y(1), Complex(2)}};
    CHECK(evaluate(Y(1, -1), env).real() == doctest::Approx(0.5));
    CHECK_THROWS_AS(evaluate(Y(2) * Y(1, -1), env), UnboundGenerator);
    Expression l(Generator::log_moment());
    CHECK(evaluate(l, env).real() == doctest::Approx(std::log(2.0)));
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    Environment env{{y(1), Complex(1.5)}, {y(2), Complex(-0.5, 0.25)}, {y(3), Complex(2)}, {y(4), Complex(0.75)}};
    CouplingTable t;
    Expression a = t.lambda(2), b = Y(2) * Y(1, -2) + ratio(1, 3) * Y(3);
    CHECK(std::abs(evaluate(a * b, env) - evaluate(a, env) * evaluate(b, env)) < 1e-12);
    CHECK(std::abs(evaluate(a + b, env) - evaluate(a, env) - evaluate(b, env)) < 1e-12);
  }

  TEST_CASE("point substitution") {
    PointLabel p("p"), q("q");
    Expression e = Expression(Generator::ext_prop(1, 0, p)) * Expression(Generator::ext_prop(1, 1, q));
    Expression want = Expression(Generator::ext_prop(1, 0, p)) * Expression(Generator::ext_prop(1, 1, p));
    CHECK(substitute_point(e, q, p) == want);
    CHECK(substitute_point(want, q, PointLabel("r")) == want);
  }

  TEST_CASE("attach index") {
    CHECK(attach_index(Y(2) * Y(1, -1), 2) == Y(2, 1, 2) * Y(1, -1, 2));
  }

  TEST_CASE("text rendering is canonical and round-trips") {
    CouplingTable t;
    CHECK(render_text(t.lambda(2)) == "- 21/160 * y1^-5 * y2^3\n+ 29/128 * y1^-4 * y2 * y3\n- 35/384 * y1^-3 * y4\n");
    CHECK(render_text(Expression()) == "0\n");
    for (int h = 1; h <= 5; ++h) CHECK(parse_text(render_text(t.lambda(h))) == t.lambda(h));
    Expression mixed = ratio(3, 7) * Expression(Generator::int_prop(1, 2, 0, 1), 2) *
                       Expression(Generator::ext_prop(2, 3, PointLabel("p1"))) * Y(1, -2, 1);
    CHECK(parse_text(render_text(mixed)) == mixed);
  }

  TEST_CASE("json rendering") {
    Expression e = ratio(-21, 160) * (Y(2, 3) * Y(1, -5));
    CHECK(render_json(e) == R"([{"coefficient":"-21/160","exponents":[["y1",-5],["y2",3]]}])");
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_text("+ 1/2 * zz"), ParseError);
    CHECK_THROWS_AS(parse_generator("B_1^x(p)"), ParseError);
  }
}
