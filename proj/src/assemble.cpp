#include "lmm/assemble.hpp"

#include "lmm/parallel.hpp"

namespace lmm {

Expression assemble_sd(const Diagram& d, int s, CouplingTable& table) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  int nv = static_cast<int>(d.vertices.size());
  if (nv == 0) return Expression(1);
  int cuts = 2 * s;
  // vertex factors per branch point
  std::vector<std::vector<Expression>> vf(nv);
  for (int v = 0; v < nv; ++v) {
    Expression base = d_alpha(d.vertices[v].h, d.vertices[v].alpha, table);
    for (int i = 1; i <= cuts; ++i) vf[v].push_back(attach_index(base, i));
  }
  Expression total;
  std::vector<int> idx(nv, 1);
  for (;;) {
    Monomial props;
    for (const auto& e : d.edges)
      props = props * Monomial(Generator::int_prop(idx[e.a.vertex], idx[e.b.vertex], e.a.order, e.b.order));
    for (const auto& l : d.legs) props = props * Monomial(Generator::ext_prop(idx[l.vertex], l.order, l.point));
    Expression term(props, Rational(1));
    for (int v = 0; v < nv; ++v) term = term * vf[v][idx[v] - 1];
    total += term;
    int p = 0;
    while (p < nv && idx[p] == cuts) idx[p++] = 1;
    if (p == nv) break;
    ++idx[p];
  }
  return total;
}

Expression correlator(int k, int h, int s, CouplingTable& table, const std::vector<PointLabel>& labels) {
  if (excluded_case(k, h)) throw ExcludedCase(k, h);
  table.lambda(h);
  auto catalog = enumerate_diagrams(k, h, labels);
  std::vector<Expression> parts(catalog.size());
  parallel_for(catalog.size(), [&](std::size_t n) {
    parts[n] = assemble_sd(catalog[n], s, table) * symmetry_factor(catalog[n]).value;
  });
  Expression total;
  for (const auto& p : parts) total += p;
  return total;
}

Expression correlator(int k, int h, int s, CouplingTable& table) {
  return correlator(k, h, s, table, default_labels(k));
}

}  // namespace lmm
