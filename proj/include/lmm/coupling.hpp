#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "lmm/multi_index.hpp"

namespace lmm {

// lambda^(h) by order plus memoized derived couplings D_alpha lambda^(h).
// Orders are appended on demand; all accessors are safe to call from
// several workers at once.
class CouplingTable {
 public:
  CouplingTable();

  // lambda^(h), computing missing orders first.
  const Expression& lambda(int h);
  bool has(int h) const;
  int max_order() const;
  void set(int h, Expression e);

  // lambda_alpha^(h) = D_alpha lambda^(h).
  const Expression& derived(int h, const MultiIndex& a);

 private:
  mutable std::mutex mu_;
  std::mutex compute_mu_;
  std::map<int, Expression> by_order_;
  std::map<std::pair<int, MultiIndex>, Expression> derived_;
};

Expression d_alpha(int h, const MultiIndex& a, CouplingTable& table);

// Integrated loop equation for lambda^(h), h >= 2. Requires lambda^(<h).
Expression lambda_order(int h, CouplingTable& table);

// Checks D_{a'} lambda^(h) (a'_j = delta_{j,k'}) against the unintegrated
// coupling equation.
bool lambda_consistency(int h, int kp, CouplingTable& table);
// Same check for an arbitrary candidate lambda^(h), lower orders from table.
bool lambda_consistency(int h, int kp, const Expression& candidate, CouplingTable& table);

// Vacuum contribution sum_i lambda^(h)_i for the 2s branch points.
Expression free_energy_hat(int h, int s, CouplingTable& table);

}  // namespace lmm
