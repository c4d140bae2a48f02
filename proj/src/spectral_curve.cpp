#include "lmm/spectral_curve.hpp"

#include <cmath>
#include <functional>

namespace lmm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// I_m = (1/2 pi i) contour integral of w^m / sqrt(sigma) around the cut,
// with its derivatives in the centre c and half-width d.
struct Moments {
  double value, dc, dd;
};

Moments cut_moment(int m, double c, double d) {
  Moments r{0, 0, 0};
  for (int n = 0; 2 * n <= m; ++n) {
    double w = binom(2 * n, n) * binom(m, 2 * n);
    double dn = std::pow(d / 2, 2 * n);
    r.value += w * dn * std::pow(c, m - 2 * n);
    if (m - 2 * n > 0) r.dc += w * dn * (m - 2 * n) * std::pow(c, m - 2 * n - 1);
    if (n > 0) r.dd += w * n * std::pow(d / 2, 2 * n - 1) * std::pow(c, m - 2 * n);
  }
  return r;
}

std::array<double, 2> conditions(const std::vector<double>& vp, double c, double d, double jac[2][2]) {
  std::array<double, 2> f{0, -2};
  for (int a = 0; a < 2; ++a) jac[a][0] = jac[a][1] = 0;
  for (std::size_t m = 0; m < vp.size(); ++m) {
    auto i0 = cut_moment(static_cast<int>(m), c, d), i1 = cut_moment(static_cast<int>(m) + 1, c, d);
    f[0] += vp[m] * i0.value;
    f[1] += vp[m] * i1.value;
    jac[0][0] += vp[m] * i0.dc;
    jac[0][1] += vp[m] * i0.dd;
    jac[1][0] += vp[m] * i1.dc;
    jac[1][1] += vp[m] * i1.dd;
  }
  return f;
}

// Trapezoidal (1/2 pi i) contour integral on a circle, nodes offset by half
// a step so none lies on the real axis; doubles the node count to converge.
Complex circle_integral(Complex centre, double radius, const QuadratureSpec& q,
                        const std::function<Complex(Complex)>& fn, const std::string& what) {
  auto rule = [&](int n) {
    Complex s = 0;
    for (int k = 0; k < n; ++k) {
      double th = 2 * kPi * (k + 0.5) / n;
      Complex e(std::cos(th), std::sin(th));
      s += fn(centre + radius * e) * radius * e;
    }
    return s / static_cast<double>(n);
  };
  int n = q.points;
  Complex prev = rule(n);
  while (n < q.max_points) {
    n *= 2;
    Complex cur = rule(n);
    if (std::abs(cur - prev) <= 1e-10 * std::abs(cur) + 1e-13) return cur;
    prev = cur;
  }
  throw ConvergenceError(what + " did not converge with " + std::to_string(q.max_points) + " nodes");
}

}  // namespace

std::vector<double> Potential::derivative() const {
  std::vector<double> vp;
  for (std::size_t n = 1; n <= t.size(); ++n) vp.push_back(static_cast<double>(n) * t[n - 1]);
  while (!vp.empty() && vp.back() == 0) vp.pop_back();
  return vp;
}

Complex CurveData::sqrt_sigma(Complex z) const { return std::sqrt(z - a1) * std::sqrt(z - a2); }

Complex CurveData::local_root(int i, Complex z) const {
  if (i == 2) return std::sqrt(z - a2);
  if (i == 1) return Complex(0, 1) * std::sqrt(a1 - z);
  throw std::out_of_range("branch point index must be 1 or 2 for a one-cut curve");
}

Complex CurveData::m_value(Complex x) const {
  Complex u = x - centre(), r = 0;
  for (auto it = m_poly.rbegin(); it != m_poly.rend(); ++it) r = r * u + *it;
  return r;
}

std::array<double, 2> CurveData::residuals() const {
  double jac[2][2];
  return conditions(potential.derivative(), centre(), 0.5 * (a2 - a1), jac);
}

CurveData solve_endpoints(const Potential& pot) {
  auto vp = pot.derivative();
  if (vp.size() < 2) throw NoOneCutSolution("potential must have degree at least 2");
  double best_c = 0, best_d = 0;
  bool found = false;
  for (double d0 : {2.0, 1.0, 4.0, 0.5, 8.0, 0.25}) {
    for (double c0 : {0.0, 0.5, -0.5, 1.0, -1.0}) {
      double c = c0, d = d0, jac[2][2];
      auto f = conditions(vp, c, d, jac);
      double norm = std::hypot(f[0], f[1]);
      for (int it = 0; it < 200 && norm > 1e-15; ++it) {
        double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        if (det == 0 || !std::isfinite(det)) break;
        double dc = (f[0] * jac[1][1] - f[1] * jac[0][1]) / det;
        double dd = (jac[0][0] * f[1] - jac[1][0] * f[0]) / det;
        double step = 1;
        bool improved = false;
        for (int ls = 0; ls < 40; ++ls, step /= 2) {
          double nc = c - step * dc, nd = d - step * dd, nj[2][2];
          if (nd <= 0) continue;
          auto nf = conditions(vp, nc, nd, nj);
          double nn = std::hypot(nf[0], nf[1]);
          if (nn < norm) {
            c = nc;
            d = nd;
            f = nf;
            norm = nn;
            std::copy(&nj[0][0], &nj[0][0] + 4, &jac[0][0]);
            improved = true;
            break;
          }
        }
        if (!improved) break;
      }
      if (norm < 1e-12 && d > 0) {
        best_c = c;
        best_d = d;
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw NoOneCutSolution("endpoint conditions have no one-cut solution");
  CurveData curve;
  curve.potential = pot;
  curve.a1 = best_c - best_d;
  curve.a2 = best_c + best_d;
  // M = polynomial part of V'/sqrt(sigma), expanded in u = x - c
  std::vector<double> b(vp.size(), 0);  // V'(c + u) in powers of u
  for (std::size_t m = 0; m < vp.size(); ++m)
    for (std::size_t j = 0; j <= m; ++j)
      b[j] += vp[m] * binom(static_cast<int>(m), static_cast<int>(j)) * std::pow(best_c, static_cast<double>(m - j));
  curve.m_poly.assign(vp.size() - 1, 0);
  for (std::size_t m = 1; m < b.size(); ++m)
    for (int n = 0; 2 * n <= static_cast<int>(m) - 1; ++n)
      curve.m_poly[m - 1 - 2 * n] += b[m] * binom(2 * n, n) * std::pow(best_d / 2, 2 * n);
  const int samples = 2000;
  for (int s = 0; s <= samples; ++s) {
    double x = curve.a1 + (curve.a2 - curve.a1) * s / samples;
    if (curve.m_value(x).real() <= 0)
      throw NoOneCutSolution("M(x) is not positive on the cut; the density would change sign");
  }
  return curve;
}

QuadratureSpec resolve(const CurveData& c, QuadratureSpec q) {
  if (q.radius <= 0) q.radius = 0.25 * (c.a2 - c.a1);
  if (q.radius >= 0.5 * (c.a2 - c.a1)) throw std::invalid_argument("quadrature radius must be below (a2 - a1)/2");
  if (q.points < 4 || (q.points & (q.points - 1))) throw std::invalid_argument("quadrature points must be a power of two");
  return q;
}

Complex moment(const CurveData& c, int f, int i, QuadratureSpec q) {
  q = resolve(c, q);
  return circle_integral(c.branch_point(i), q.radius, q,
                         [&](Complex z) { return c.y(z) / std::pow(c.local_root(i, z), 2 * f + 1); },
                         "moment y_" + std::to_string(f) + "," + std::to_string(i));
}

Complex bergmann_reg(const CurveData& c, Complex p, Complex q) {
  auto on_cut = [&](Complex z) {
    return std::abs(z.imag()) < 1e-14 && z.real() >= c.a1 && z.real() <= c.a2;
  };
  if (on_cut(p) || on_cut(q)) throw OnCutError("argument on the cut");
  if (p == q) throw Error("regularized kernel has a double pole at coincident arguments");
  double s = c.a1 + c.a2, pr = c.a1 * c.a2;
  Complex num = p * q - 0.5 * s * (p + q) + pr;
  return num / (2.0 * c.sqrt_sigma(p) * c.sqrt_sigma(q) * (p - q) * (p - q));
}

Complex prop_ext(const CurveData& c, int i, int f, Complex p, QuadratureSpec q) {
  q = resolve(c, q);
  double r = std::min(q.radius, 0.5 * std::abs(p - c.branch_point(i)));
  return 2.0 * circle_integral(c.branch_point(i), r, q,
                               [&](Complex z) { return bergmann_reg(c, p, z) / std::pow(c.local_root(i, z), 2 * f + 1); },
                               "propagator B_" + std::to_string(i) + "^" + std::to_string(f));
}

Complex prop_int(const CurveData& c, int i, int j, int f, int g, QuadratureSpec q) {
  q = resolve(c, q);
  QuadratureSpec inner = q;
  // nested circles for a common branch point
  inner.radius = i == j ? 0.5 * q.radius : q.radius;
  return 2.0 * circle_integral(c.branch_point(i), q.radius, q,
                               [&](Complex z) { return prop_ext(c, j, g, z, inner) / std::pow(c.local_root(i, z), 2 * f + 1); },
                               "propagator B_" + std::to_string(i) + "," + std::to_string(j));
}

Environment curve_environment(const CurveData& c, const Expression& e, const PointBindings& at, QuadratureSpec q) {
  Environment env;
  std::string missing;
  for (const auto& g : e.generators()) {
    if (g.cut() < 1 || g.cut() > 2 || (g.kind() == GeneratorKind::IntProp && (g.cut2() < 1 || g.cut2() > 2))) {
      missing += (missing.empty() ? "" : ", ") + g.name();
      continue;
    }
    switch (g.kind()) {
      case GeneratorKind::Moment: env[g] = moment(c, g.order(), g.cut(), q); break;
      case GeneratorKind::LogMoment: env[g] = std::log(moment(c, 1, g.cut(), q)); break;
      case GeneratorKind::ExtProp: {
        auto it = at.find(g.point());
        if (it == at.end()) {
          missing += (missing.empty() ? "" : ", ") + g.name();
          continue;
        }
        env[g] = prop_ext(c, g.cut(), g.order(), it->second, q);
        break;
      }
      case GeneratorKind::IntProp: env[g] = prop_int(c, g.cut(), g.cut2(), g.order(), g.order2(), q); break;
    }
  }
  if (!missing.empty()) throw UnboundGenerator(missing);
  return env;
}

Complex eval_expression(const CurveData& c, const Expression& e, const PointBindings& at, QuadratureSpec q) {
  return evaluate(e, curve_environment(c, e, at, q));
}

}  // namespace lmm
