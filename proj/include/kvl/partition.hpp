#pragma once

#include <vector>

#include "kvl/truth_table.hpp"

namespace kvl {

/// An ordered tuple of pairwise disjoint, nonempty variable sets whose
/// union is {1, ..., n}.
struct Partition {
    std::vector<VariableSet> blocks;

    static Partition of(std::vector<VariableSet> blocks, int n);
};

/// Target ranges q_1, ..., q_s paired with a Partition.
using QVector = std::vector<int>;

} // namespace kvl
