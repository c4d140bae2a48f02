#pragma once

#include <vector>

#include "lmm/expression.hpp"

namespace lmm {

struct LoopContext {
  int s = 1;  // branch points 1..2s
  PointLabel new_point;
};

// Rules 1..7 of the loop operator on a single generator; incompatible
// (rule, generator kind) pairs give 0.
Expression delta_apply(int which, Generator target, const LoopContext& ctx);

// Loop operator as a derivation over all generator occurrences.
Expression loop_apply(const Expression& e, const LoopContext& ctx);

// Residue of B_j^f(x) B_k^g(x) against the recursion kernel at branch point i.
Expression residue_step(int f, int g, int j, int k, int i, PointLabel p, int s);

// W_1^(1) written out directly (three terms per branch point).
Expression w1_seed(int s, PointLabel p = PointLabel("p"));

// W_1^(1..h)(p) from the seed; index m of the result holds W_1^(m), index 0
// is unused.
std::vector<Expression> w1_series(int h, int s, const Expression& seed);
Expression w1_recursion(int h, int s, const Expression& seed);
// Seeded with w1_seed(s).
Expression w1_recursion(int h, int s);

}  // namespace lmm
