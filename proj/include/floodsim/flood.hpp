#pragma once

#include <span>
#include <vector>

#include "floodsim/geometry.hpp"
#include "floodsim/rng.hpp"

namespace floodsim {

struct FloodParams {
    double retransmit_prob{1.0};  // p_r, applied to non-source nodes
    double reception_prob{1.0};   // p_c, applied per directed delivery
};

struct FloodOutcome {
    std::vector<int> reached;         // ids with at least one reception, source excluded, ascending
    std::vector<int> retransmitters;  // ids that transmitted, source included, ascending
    int transmissions{};              // == retransmitters.size()
    std::vector<int> receptions;      // per-node reception counts
};

// One flood from `source` over a frozen topology. The source always
// transmits; every delivery runs an independent reception test against p_c;
// a node's retransmission coin is flipped once, at its first successful
// reception.
FloodOutcome flood(const Topology& topology, int source, FloodParams params, RngStream& rng);

// All uniform draws a flood can consume, pre-generated in a fixed order so
// the same randomness can be replayed across a parameter sweep.
struct DrawTable {
    std::vector<double> link_draw;  // xi_1, indexed by Topology::link_index
    std::vector<double> node_draw;  // xi_2, indexed by node id
};

DrawTable make_draw_table(const Topology& topology, RngStream& rng);

FloodOutcome flood_with_table(const Topology& topology, int source, FloodParams params,
                              const DrawTable& draws);

// Common-random-numbers sweep over an ascending p_c grid: one DrawTable is
// shared by every flood, so the reached set grows monotonically with p_c on
// every single run, not just in expectation.
std::vector<FloodOutcome> flood_coupled(const Topology& topology, int source,
                                        double retransmit_prob,
                                        std::span<const double> reception_probs, RngStream& rng);

}  // namespace floodsim
