#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lmm/expression.hpp"

namespace lmm {

// V(M) = sum_n t_n M^n with t[n-1] = t_n.
struct Potential {
  std::vector<double> t;
  // coefficients of V'(x), ascending powers
  std::vector<double> derivative() const;
};

struct QuadratureSpec {
  double radius = 0;  // 0 selects 0.25 (a2 - a1)
  int points = 256;
  int max_points = 4096;
};

// One-cut spectral curve y(x) = M(x) sqrt((x - a1)(x - a2)).
struct CurveData {
  double a1 = 0, a2 = 0;
  std::vector<double> m_poly;  // M in powers of (x - centre)
  Potential potential;

  double centre() const { return 0.5 * (a1 + a2); }
  double branch_point(int i) const { return i == 1 ? a1 : a2; }
  Complex sqrt_sigma(Complex z) const;
  // (z - a_i)^(1/2) with its cut pointing into the segment [a1, a2]
  Complex local_root(int i, Complex z) const;
  Complex m_value(Complex x) const;
  Complex y(Complex x) const { return m_value(x) * sqrt_sigma(x); }
  // The two endpoint conditions: (contour integral of V'/sqrt(sigma),
  // contour integral of x V'/sqrt(sigma) - 2).
  std::array<double, 2> residuals() const;
};

CurveData solve_endpoints(const Potential& pot);
QuadratureSpec resolve(const CurveData& c, QuadratureSpec q);

// y_{f,i}; left-endpoint values are imaginary under the branch convention.
Complex moment(const CurveData& c, int f, int i, QuadratureSpec q = {});
Complex bergmann_reg(const CurveData& c, Complex p, Complex q);
Complex prop_ext(const CurveData& c, int i, int f, Complex p, QuadratureSpec q = {});
Complex prop_int(const CurveData& c, int i, int j, int f, int g, QuadratureSpec q = {});

using PointBindings = std::map<PointLabel, Complex>;
// Numeric values of every generator occurring in e.
Environment curve_environment(const CurveData& c, const Expression& e, const PointBindings& at, QuadratureSpec q = {});
Complex eval_expression(const CurveData& c, const Expression& e, const PointBindings& at, QuadratureSpec q = {});

// {"t": [...], "s": 1, "quadrature": {"radius": r, "points": n}}
struct CurveConfig {
  Potential potential;
  int s = 1;
  QuadratureSpec quadrature;
};
CurveConfig parse_curve_config(const std::string& json_text);

}  // namespace lmm
