#include "lmm/parallel.hpp"

#include <cstdlib>
#include <string>

namespace lmm {

int worker_count() {
  if (const char* env = std::getenv("LMM_WORKERS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace lmm
