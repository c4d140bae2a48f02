#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lmm/expression.hpp"

namespace lmm {

// (alpha_0, alpha_1, ...) with trailing zeros trimmed; alpha_j counts lines
// carrying j derivatives.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> e) : MultiIndex(std::vector<int>(e)) {}
  explicit MultiIndex(std::vector<int> e);
  static MultiIndex unit(int j);

  int operator[](int j) const { return j < static_cast<int>(e_.size()) ? e_[j] : 0; }
  int length() const { return static_cast<int>(e_.size()); }
  const std::vector<int>& entries() const { return e_; }
  int total() const;   // sum alpha_j
  int weight() const;  // sum j alpha_j
  bool empty() const { return e_.empty(); }
  std::string str() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> e_;
};

// M_k^(h): sum alpha_j = k, sum j alpha_j <= k + 3h - 3, lexicographic order.
std::vector<MultiIndex> enumerate_mset(int k, int h);
bool in_mset(const MultiIndex& a, int h);

// N(k,h) from the partition generating function prod_n 1/(1 - x q^n).
std::uint64_t count_terms(int k, int h);
// P(m,r) table, indexed [m][r] for m <= max_m, r <= max_r.
std::vector<std::vector<std::uint64_t>> partition_table(int max_m, int max_r);

// Z_n: u^n coefficient of 1 / (sum_l y_{1+l} u^l); zero for n < 0.
Expression z_poly(int n, int cut = 0);
// Z_n^[k] with Z_n = sum_k Z_n^[k] / y1^(k+1).
Expression z_split(int n, int k, int cut = 0);

Rational a_factor(const MultiIndex& a);
int n_index(const MultiIndex& a);
int n_index(const MultiIndex& a, const MultiIndex& b);

// sum_f (2f+1) (y_{f+1}/y1) d/dy_f
Expression delta1_remnant(const Expression& e, int cut = 0);

}  // namespace lmm
