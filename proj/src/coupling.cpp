#include "lmm/coupling.hpp"

#include "lmm/parallel.hpp"

namespace lmm {

namespace {

const Generator kY1 = Generator::moment(1);

// D_alpha applied to an explicit expression, no memoization.
Expression apply_d_alpha(const Expression& lam, int h, const MultiIndex& a) {
  int n0 = a[0] - (h == 0 ? 3 : 0);
  if (n0 < 0) throw AdmissibilityError("alpha_0 too small for a topological index 0 vertex: " + a.str());
  Expression e = lam;
  for (int i = 0; i < n0; ++i) e = delta1_remnant(e);
  for (int f = 1; f < a.length(); ++f)
    for (int i = 0; i < a[f]; ++i) e = -diff(e, Generator::moment(f));
  return e;
}

void check_admissible(int h, const MultiIndex& a) {
  if (h < 0 || !in_mset(a, h) || (h == 0 && a[0] < 3))
    throw AdmissibilityError("multi-index " + a.str() + " not in M_" + std::to_string(a.total()) + "^(" +
                             std::to_string(h) + ")");
}

void check_negative_y1(const Expression& e, int h, const MultiIndex& a) {
  for (const auto& [m, c] : e.terms())
    if (m.y1_degree() >= 0)
      throw DivisionByZeroGuard("D_" + a.str() + " lambda^(" + std::to_string(h) +
                                ") has a term without inverse powers of y1");
}

struct Contribution {
  int n;  // Z subscript before any shift
  Rational weight;
  Expression product;
};

// All contributions of the quadratic and linear parts of the coupling
// equation, each as (n, A-weight, product of derived couplings).
std::vector<Contribution> contributions(int h, CouplingTable& table, bool guard) {
  struct Task {
    int m;
    MultiIndex a, b;
    bool linear;
  };
  std::vector<Task> tasks;
  for (int m = 1; m < h; ++m)
    for (const auto& a : enumerate_mset(1, h - m))
      for (const auto& b : enumerate_mset(1, m)) tasks.push_back({m, a, b, false});
  for (const auto& a : enumerate_mset(2, h - 1)) tasks.push_back({0, a, {}, true});

  std::vector<Contribution> out(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t t) {
    const Task& task = tasks[t];
    if (task.linear) {
      const Expression& da = table.derived(h - 1, task.a);
      if (guard) check_negative_y1(da, h - 1, task.a);
      int twos = 0;
      for (int v : task.a.entries()) twos += (v == 2);
      out[t] = {n_index(task.a), Rational(2 - twos) * 2 * a_factor(task.a), da};
    } else {
      const Expression& da = table.derived(h - task.m, task.a);
      const Expression& db = table.derived(task.m, task.b);
      if (guard) {
        check_negative_y1(da, h - task.m, task.a);
        check_negative_y1(db, task.m, task.b);
      }
      out[t] = {n_index(task.a, task.b), 2 * a_factor(task.a) * a_factor(task.b), da * db};
    }
  });
  return out;
}

// Sums weight * Z_{n - shift} * product, grouping equal subscripts first.
Expression combine(const std::vector<Contribution>& cs, int shift, const Expression& extra) {
  std::map<int, Expression> by_n;
  for (const auto& c : cs) {
    if (c.n - shift < 0) continue;
    by_n[c.n - shift] += c.product * c.weight;
  }
  std::vector<std::pair<int, Expression>> groups(by_n.begin(), by_n.end());
  std::vector<Expression> parts(groups.size());
  parallel_for(groups.size(), [&](std::size_t g) {
    parts[g] = z_poly(groups[g].first) * extra * groups[g].second;
  });
  Expression total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

CouplingTable::CouplingTable() {
  by_order_[0] = Expression(kY1, -1);
  by_order_[1] = Expression(Generator::log_moment()) * ratio(-1, 24);
}

bool CouplingTable::has(int h) const {
  std::lock_guard lock(mu_);
  return by_order_.count(h) > 0;
}

int CouplingTable::max_order() const {
  std::lock_guard lock(mu_);
  int h = -1;
  while (by_order_.count(h + 1)) ++h;
  return h;
}

void CouplingTable::set(int h, Expression e) {
  std::lock_guard lock(mu_);
  by_order_[h] = std::move(e);
  std::erase_if(derived_, [h](const auto& kv) { return kv.first.first == h; });
}

const Expression& CouplingTable::lambda(int h) {
  {
    std::lock_guard lock(mu_);
    auto it = by_order_.find(h);
    if (it != by_order_.end()) return it->second;
  }
  if (h < 0) throw std::invalid_argument("negative order");
  std::lock_guard compute(compute_mu_);
  for (int o = 2; o <= h; ++o) {
    if (has(o)) continue;
    Expression e = lambda_order(o, *this);
    std::lock_guard lock(mu_);
    by_order_.emplace(o, std::move(e));
  }
  std::lock_guard lock(mu_);
  return by_order_.at(h);
}

const Expression& CouplingTable::derived(int h, const MultiIndex& a) {
  auto key = std::pair(h, a);
  {
    std::lock_guard lock(mu_);
    auto it = derived_.find(key);
    if (it != derived_.end()) return it->second;
  }
  Expression value;
  if (a.empty() || (h == 0 && a.length() == 1 && a[0] <= 3)) {
    value = lambda(h);
    if (h == 0 && a[0] < 3)
      throw AdmissibilityError("alpha_0 too small for a topological index 0 vertex: " + a.str());
  } else if (a.length() > 1) {
    // peel one derivative off the highest order present
    std::vector<int> e = a.entries();
    int f = a.length() - 1;
    --e[f];
    value = -diff(derived(h, MultiIndex(e)), Generator::moment(f));
  } else {
    value = delta1_remnant(derived(h, MultiIndex({a[0] - 1})));
  }
  std::lock_guard lock(mu_);
  return derived_.emplace(key, std::move(value)).first->second;
}

Expression d_alpha(int h, const MultiIndex& a, CouplingTable& table) {
  check_admissible(h, a);
  return table.derived(h, a);
}

Expression lambda_order(int h, CouplingTable& table) {
  if (h < 2) throw std::invalid_argument("lambda_order needs h >= 2");
  for (int m = 0; m < h; ++m)
    if (!table.has(m)) throw std::logic_error("lambda^(" + std::to_string(m) + ") missing");
  // Every term of the summed right side is Z^[k] y1^-k P_r(.) P_r'(.) and
  // is weighted by 1/(k + r + r'), i.e. by minus its total y1 exponent.
  auto cs = contributions(h, table, true);
  Expression raw = combine(cs, 0, Expression(kY1));
  Expression out;
  for (const auto& [m, c] : raw.terms()) {
    int deg = -m.y1_degree();
    if (deg <= 0) throw DivisionByZeroGuard("vanishing y1 weight in the order " + std::to_string(h) + " equation");
    out.add_term(m, c / (3 * deg));
  }
  return out;
}

bool lambda_consistency(int h, int kp, const Expression& candidate, CouplingTable& table) {
  for (int m = 0; m < h; ++m) table.lambda(m);
  MultiIndex unit = MultiIndex::unit(kp);
  Expression lhs = apply_d_alpha(candidate, h, unit);
  auto cs = contributions(h, table, false);
  Expression rhs = combine(cs, kp - 1, Expression(1)) * ratio(1, 2 * kp + 1);
  return lhs == rhs;
}

bool lambda_consistency(int h, int kp, CouplingTable& table) {
  return lambda_consistency(h, kp, table.lambda(h), table);
}

Expression free_energy_hat(int h, int s, CouplingTable& table) {
  Expression lam = table.lambda(h);
  Expression out;
  for (int i = 1; i <= 2 * s; ++i) out += attach_index(lam, i);
  return out;
}

}  // namespace lmm
