#pragma once

#include <cstdint>

#include "floodsim/flood.hpp"
#include "floodsim/geometry.hpp"

namespace floodsim {

struct OracleResult {
    double expected_rch{};
    double expected_ret{};
    std::uint64_t enumerated_outcomes{};
    double probability_mass{};  // sum of all assignment weights; must be ~1
};

// Exact E[RCH] and E[RET] by exhaustive enumeration of every assignment of
// {success, fail} to each directed delivery draw and each non-source
// retransmission coin, replaying the engine's own traversal per assignment.
// Bounded to n <= 8 nodes and <= 12 directed links (2^19 assignments max).
OracleResult exact_metrics(const Topology& topology, int source, FloodParams params);

}  // namespace floodsim
