#pragma once

#include <string>
#include <vector>

#include "lmm/coupling.hpp"

namespace lmm {

// Orders with a published closed form of lambda^(h).
std::vector<int> published_orders();
// Published lambda^(h) as transcribed, printed term order preserved.
std::vector<std::pair<Monomial, Rational>> published_terms(int h);
Expression published_lambda(int h);

struct GoldenReport {
  int h = 0;
  std::size_t published_terms = 0, computed_terms = 0;
  bool equal = false;
  // published == -computed term by term
  bool negated = false;
  // published candidate satisfies the coupling equation for every k'
  bool published_consistent = false;
  std::vector<std::string> mismatches;
  std::string summary() const;
};

GoldenReport compare_lambda(int h, CouplingTable& table);

}  // namespace lmm
