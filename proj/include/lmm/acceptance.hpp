#pragma once

#include <string>
#include <vector>

namespace lmm {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string title;
};

const std::vector<Criterion>& acceptance_criteria();
CriterionResult run_criterion(int id);
// One status line followed by indented details.
std::string format_result(const CriterionResult& r);

}  // namespace lmm
