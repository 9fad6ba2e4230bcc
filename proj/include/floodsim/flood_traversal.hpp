#pragma once

#include <stdexcept>
#include <vector>

#include "floodsim/flood.hpp"
#include "floodsim/geometry.hpp"

namespace floodsim {

// Core propagation loop shared by the stochastic engine and the exact
// enumeration oracle; the two differ only in the Draws policy. Draws must
// provide:
//   bool deliver(int link_index, int receiver)  -- reception test for one
//                                                  directed transmission
//   bool retransmit(int node)                   -- the node's single p_r coin
// deliver() is called once per (transmitter, neighbor) pair in FIFO
// transmitter order with neighbors in adjacency order; retransmit() is called
// at most once per node, at its first successful reception.
template <class Draws>
FloodOutcome propagate(const Topology& topology, int source, Draws&& draws) {
    const int n = topology.node_count();
    if (source < 0 || source >= n) throw std::invalid_argument("flood: invalid source id");

    std::vector<char> retransmitted(n, 0);
    std::vector<char> coin_spent(n, 0);
    FloodOutcome outcome;
    outcome.receptions.assign(n, 0);

    std::vector<int> queue;
    queue.reserve(n);
    retransmitted[source] = 1;  // the source initiates unconditionally
    queue.push_back(source);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int tx = queue[head];
        const auto& neighbors = topology.adjacency[tx];
        for (int k = 0; k < static_cast<int>(neighbors.size()); ++k) {
            const int rx = neighbors[k];
            if (!draws.deliver(topology.link_index(tx, k), rx)) continue;
            ++outcome.receptions[rx];
            if (!retransmitted[rx] && !coin_spent[rx]) {
                coin_spent[rx] = 1;
                if (draws.retransmit(rx)) {
                    retransmitted[rx] = 1;
                    queue.push_back(rx);
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        if (i != source && outcome.receptions[i] > 0) outcome.reached.push_back(i);
        if (retransmitted[i]) outcome.retransmitters.push_back(i);
    }
    outcome.transmissions = static_cast<int>(outcome.retransmitters.size());
    return outcome;
}

}  // namespace floodsim
