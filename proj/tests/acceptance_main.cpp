#include <CLI11.hpp>

#include <iostream>

#include "lmm/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool quiet = false;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 9));
  app.add_flag("--quiet", quiet, "status lines only");
  CLI11_PARSE(app, argc, argv);

  bool ok = true;
  for (const auto& c : lmm::acceptance_criteria()) {
    if (only && c.id != only) continue;
    auto r = lmm::run_criterion(c.id);
    if (quiet) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
    } else {
      std::cout << lmm::format_result(r);
    }
    std::cout << std::flush;
    ok &= r.pass;
  }
  return ok ? 0 : 1;
}
