#include "floodsim/flood.hpp"

#include <algorithm>
#include <stdexcept>

#include "floodsim/flood_traversal.hpp"

namespace floodsim {

namespace {

void validate_params(const FloodParams& params) {
    if (!(params.retransmit_prob >= 0.0 && params.retransmit_prob <= 1.0))
        throw std::invalid_argument("flood: p_r must be in [0,1]");
    if (!(params.reception_prob >= 0.0 && params.reception_prob <= 1.0))
        throw std::invalid_argument("flood: p_c must be in [0,1]");
}

// Lazily draws from the stream in traversal order.
struct StreamDraws {
    FloodParams params;
    RngStream& rng;

    bool deliver(int, int) { return chance(rng, params.reception_prob); }
    bool retransmit(int) { return chance(rng, params.retransmit_prob); }
};

// Replays a pre-generated table; used for coupled sweeps.
struct TableDraws {
    FloodParams params;
    const DrawTable& table;

    bool deliver(int link, int) { return passes(table.link_draw[link], params.reception_prob); }
    bool retransmit(int node) { return passes(table.node_draw[node], params.retransmit_prob); }
};

}  // namespace

FloodOutcome flood(const Topology& topology, int source, FloodParams params, RngStream& rng) {
    validate_params(params);
    return propagate(topology, source, StreamDraws{params, rng});
}

DrawTable make_draw_table(const Topology& topology, RngStream& rng) {
    DrawTable table;
    table.link_draw.reserve(topology.directed_link_count());
    for (int i = 0; i < topology.directed_link_count(); ++i) table.link_draw.push_back(uniform01(rng));
    table.node_draw.reserve(topology.node_count());
    for (int i = 0; i < topology.node_count(); ++i) table.node_draw.push_back(uniform01(rng));
    return table;
}

FloodOutcome flood_with_table(const Topology& topology, int source, FloodParams params,
                              const DrawTable& draws) {
    validate_params(params);
    if (static_cast<int>(draws.link_draw.size()) != topology.directed_link_count() ||
        static_cast<int>(draws.node_draw.size()) != topology.node_count())
        throw std::invalid_argument("flood_with_table: draw table does not match topology");
    return propagate(topology, source, TableDraws{params, draws});
}

std::vector<FloodOutcome> flood_coupled(const Topology& topology, int source,
                                        double retransmit_prob,
                                        std::span<const double> reception_probs, RngStream& rng) {
    if (!std::is_sorted(reception_probs.begin(), reception_probs.end()))
        throw std::invalid_argument("flood_coupled: p_c list must be sorted ascending");

    const DrawTable table = make_draw_table(topology, rng);
    std::vector<FloodOutcome> outcomes;
    outcomes.reserve(reception_probs.size());
    for (double p_c : reception_probs) {
        outcomes.push_back(flood_with_table(topology, source, {retransmit_prob, p_c}, table));
    }
    return outcomes;
}

}  // namespace floodsim
