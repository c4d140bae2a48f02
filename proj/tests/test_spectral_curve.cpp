#include <doctest.h>

#include <cmath>

#include "lmm/assemble.hpp"
#include "lmm/loop_oracle.hpp"
#include "lmm/spectral_curve.hpp"

using namespace lmm;

namespace {

CurveData gaussian() {
  Potential v;
  v.t = {0, 0.5};
  return solve_endpoints(v);
}

}  // namespace

TEST_SUITE("spectral-curve") {
  TEST_CASE("Gaussian endpoints") {
    auto c = gaussian();
    CHECK(std::abs(c.a1 + 2) < 1e-12);
    CHECK(std::abs(c.a2 - 2) < 1e-12);
    REQUIRE(c.m_poly.size() == 1);
    CHECK(std::abs(c.m_poly[0] - 1) < 1e-12);
  }

  TEST_CASE("quartic perturbation satisfies the endpoint conditions") {
    Potential v;
    v.t = {0, 0.5, 0, 0.05};
    auto c = solve_endpoints(v);
    auto r = c.residuals();
    CHECK(std::abs(r[0]) < 1e-12);
    CHECK(std::abs(r[1]) < 1e-12);
    CHECK(c.a2 < 2);
    CHECK(std::abs(c.a1 + c.a2) < 1e-12);
  }

  TEST_CASE("cubic potential shifts the cut") {
    Potential v;
    v.t = {0, 0.5, 0.05};
    auto c = solve_endpoints(v);
    auto r = c.residuals();
    CHECK(std::abs(r[0]) < 1e-12);
    CHECK(std::abs(r[1]) < 1e-12);
    CHECK(c.centre() != doctest::Approx(0));
  }

  TEST_CASE("deep double well has no one-cut solution") {
    Potential v;
    v.t = {0, -5, 0, 0.25};
    CHECK_THROWS_AS(solve_endpoints(v), NoOneCutSolution);
  }

  TEST_CASE("Gaussian moments") {
    auto c = gaussian();
    CHECK(std::abs(moment(c, 1, 2) - 2.0) < 1e-10);
    CHECK(std::abs(moment(c, 2, 2) - 0.25) < 1e-10);
    CHECK(std::abs(moment(c, 1, 1) - Complex(0, 2)) < 1e-10);
    QuadratureSpec half;
    half.radius = 0.5;
    for (int f = 1; f <= 4; ++f) CHECK(std::abs(moment(c, f, 2) - moment(c, f, 2, half)) < 1e-10);
  }

  TEST_CASE("regularized kernel") {
    auto c = gaussian();
    Complex p(3, 1), q(-2.5, 0.5);
    CHECK(std::abs(bergmann_reg(c, p, q) - bergmann_reg(c, q, p)) < 1e-12);
    Complex big = 1e4;
    CHECK(std::abs(bergmann_reg(c, big, Complex(0, 3))) < 1e-3);
    CHECK(std::abs(bergmann_reg(c, big, 2.0 * big)) < 1e-8);
    CHECK_THROWS_AS(bergmann_reg(c, 0.5, 3.0), OnCutError);
  }

  TEST_CASE("regularized kernel keeps half the double pole at coincidence") {
    auto c = gaussian();
    Complex p(3, 0.5);
    auto finite_part = [&](double eps) { return bergmann_reg(c, p, p + eps) - 1.0 / (2 * eps * eps); };
    Complex a = finite_part(1e-3), b = finite_part(2e-3);
    CHECK(std::abs(a - b) < 1e-4);
    CHECK(std::abs(bergmann_reg(c, p, p + 1e-3) * 1e-6 - 0.5) < 1e-6);
  }

  TEST_CASE("external propagators") {
    auto c = gaussian();
    Complex b = prop_ext(c, 2, 0, 3.0);
    QuadratureSpec fine;
    fine.points = 512;
    CHECK(std::abs(b - prop_ext(c, 2, 0, 3.0, fine)) < 1e-10);
    CHECK(std::abs(prop_ext(c, 2, 0, 1e5)) < 1e-6);
    for (int f = 0; f <= 3; ++f) {
      Complex left = prop_ext(c, 1, f, -3.0), right = prop_ext(c, 2, f, 3.0);
      Complex phase = f % 2 ? Complex(0, -1) : Complex(0, 1);
      CHECK(std::abs(left - phase * right) < 1e-10);
    }
  }

  TEST_CASE("internal propagators") {
    auto c = gaussian();
    for (auto [i, j, f, g] : {std::array{1, 2, 0, 1}, {1, 1, 0, 1}, {2, 2, 1, 2}, {1, 2, 2, 0}})
      CHECK(std::abs(prop_int(c, i, j, f, g) - prop_int(c, j, i, g, f)) < 1e-10);
    QuadratureSpec small;
    small.radius = 0.6;
    CHECK(std::abs(prop_int(c, 1, 2, 0, 0) - prop_int(c, 1, 2, 0, 0, small)) < 1e-9);
    CHECK(std::abs(prop_int(c, 1, 1, 0, 0) - prop_int(c, 1, 1, 0, 0, small)) < 1e-9);
  }

  TEST_CASE("invalid quadrature settings") {
    auto c = gaussian();
    QuadratureSpec wide;
    wide.radius = 2.5;
    CHECK_THROWS_AS(moment(c, 1, 2, wide), std::invalid_argument);
    QuadratureSpec odd;
    odd.points = 100;
    CHECK_THROWS_AS(moment(c, 1, 2, odd), std::invalid_argument);
  }

  TEST_CASE("free energy at order two") {
    auto c = gaussian();
    CouplingTable t;
    CHECK(std::abs(eval_expression(c, correlator(0, 2, 1, t), {}) + 1.0 / 240) < 1e-9);
  }

  TEST_CASE("one-point functions match closed forms and both pipelines") {
    auto c = gaussian();
    CouplingTable t;
    PointLabel p("p");
    Complex w1 = eval_expression(c, correlator(1, 1, 1, t), {{p, 3.0}});
    CHECK(std::abs(w1 - std::pow(5.0, -2.5)) < 1e-12);
    Complex w2d = eval_expression(c, correlator(1, 2, 1, t), {{p, 3.0}});
    Complex w2o = eval_expression(c, w1_recursion(2, 1), {{p, 3.0}});
    CHECK(std::abs(w2d - w2o) < 1e-9);
    CHECK(std::abs(w2d - 210 * std::pow(5.0, -5.5)) < 1e-10);
  }

  TEST_CASE("W_1^(1) scales as the Gaussian closed form in p") {
    auto c = gaussian();
    CouplingTable t;
    PointLabel p("p");
    auto e = correlator(1, 1, 1, t);
    for (double x : {2.5, 3.0, 5.0, 6.0}) {
      Complex v = eval_expression(c, e, {{p, x}});
      CHECK(std::abs(v - 1.0 / std::pow(x * x - 4, 2.5)) < 1e-10);
    }
  }

  TEST_CASE("two-point function is symmetric") {
    auto c = gaussian();
    CouplingTable t;
    auto e = correlator(2, 1, 1, t);
    PointLabel p1("p1"), p2("p2");
    Complex a = eval_expression(c, e, {{p1, 3.0}, {p2, 4.0}});
    Complex b = eval_expression(c, e, {{p1, 4.0}, {p2, 3.0}});
    CHECK(std::abs(a - b) < 1e-10);
  }

  TEST_CASE("unbound points are reported") {
    auto c = gaussian();
    CouplingTable t;
    CHECK_THROWS_AS(eval_expression(c, correlator(1, 1, 1, t), {}), UnboundGenerator);
  }

  TEST_CASE("curve configuration") {
    auto cfg = parse_curve_config(R"({"t": [0, 0.5], "s": 1, "quadrature": {"radius": 0.8, "points": 128}})");
    CHECK(cfg.potential.t.size() == 2);
    CHECK(cfg.quadrature.radius == 0.8);
    CHECK(cfg.quadrature.points == 128);
    CHECK_THROWS_AS(parse_curve_config("{"), ParseError);
    CHECK_THROWS_AS(parse_curve_config(R"({"s": 1})"), ParseError);
    CHECK_THROWS_AS(parse_curve_config(R"({"t": [0, 0.5], "s": 2})"), ParseError);
  }
}
