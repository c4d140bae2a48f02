#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "lmm/coupling.hpp"

namespace lmm {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

// Random sparse expressions for property tests. Only y1 receives negative
// exponents; log(y1) appears at most once per monomial when allowed.
struct RandomExpressions {
  explicit RandomExpressions(std::uint64_t seed) : rng(seed) {}
  // Single-point algebra: y_1..y_6 without branch-point index.
  Expression unindexed(bool with_log);
  // Branch-point indexed moments and propagators for s = 1 at points p1, p2.
  Expression indexed();
  Generator unindexed_variable();
  std::mt19937_64 rng;

 private:
  int uniform(int lo, int hi);
};

PropertyResult check_leibniz_diff(std::uint64_t seed, int cases = 200);
PropertyResult check_leibniz_loop(std::uint64_t seed, int cases = 200);
// P_r P_r = P_r, P_r P_t = 0 (r != t), sum_r P_r = identity.
PropertyResult check_projectors(std::uint64_t seed, int cases = 50);
// sum_m Z_m y_{n-m+1} = delta_{n,0}
PropertyResult check_z_convolution(int max_n = 8);
// sum e_f = 2 - 2h, sum f e_f = h - 1, no y_f with f > 3h - 2.
PropertyResult check_lambda_grading(int max_h, CouplingTable& table);

}  // namespace lmm
