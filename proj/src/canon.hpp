#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace lmm::detail {

// Vertex-coloured multigraph whose edge ends carry derivative orders.
struct ColouredGraph {
  int n = 0;
  std::vector<std::vector<std::int64_t>> colour;
  std::vector<std::array<int, 4>> edges;  // v, f, w, g
};

struct CanonResult {
  std::vector<int> perm;  // old index -> canonical index
  std::vector<std::int64_t> code;
  // Vertex automorphisms (old -> old), identity included; only filled when
  // requested.
  std::vector<std::vector<int>> automorphisms;
};

// Individualization-refinement over all branches; the code is the
// lexicographically smallest encoding among discrete leaves.
CanonResult canonical_form(const ColouredGraph& g, bool want_automorphisms);

}  // namespace lmm::detail
