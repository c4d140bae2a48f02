#pragma once

#include "lmm/coupling.hpp"
#include "lmm/diagram.hpp"

namespace lmm {

// S_D summed over all branch-point assignments i_j in 1..2s.
Expression assemble_sd(const Diagram& d, int s, CouplingTable& table);

// W_k^(h) = sum_D Pi_D S_D. Labels default to default_labels(k).
Expression correlator(int k, int h, int s, CouplingTable& table);
Expression correlator(int k, int h, int s, CouplingTable& table, const std::vector<PointLabel>& labels);

}  // namespace lmm
