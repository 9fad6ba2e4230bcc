#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "floodsim/flood.hpp"
#include "floodsim/metrics.hpp"
#include "floodsim/mobility.hpp"

using namespace floodsim;

namespace {

// Independent reachability reference: plain BFS over the adjacency.
std::set<int> component_of(const Topology& topo, int source) {
    std::set<int> seen{source};
    std::vector<int> queue{source};
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w : topo.adjacency[v]) {
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen;
}

Topology random_snapshot(RngStream& rng, int n, double range) {
    std::vector<Vec2> positions;
    for (int i = 0; i < n; ++i)
        positions.push_back({uniform01(rng) * 600.0, uniform01(rng) * 600.0});
    return build_topology(positions, range);
}

}  // namespace

TEST_CASE("noiseless pure flood on a 2-node chain") {
    const Topology topo = build_topology({{0, 0}, {50, 0}}, 100.0);
    RngStream rng(1);
    const FloodOutcome out = flood(topo, 0, {1.0, 1.0}, rng);
    CHECK(out.reached == std::vector<int>{1});
    CHECK(out.transmissions == 2);
    CHECK(out.retransmitters == std::vector<int>{0, 1});
}

TEST_CASE("p_c = 0 reaches nobody") {
    RngStream rng(2);
    const Topology topo = random_snapshot(rng, 50, 150.0);
    const FloodOutcome out = flood(topo, 3, {1.0, 0.0}, rng);
    CHECK(out.reached.empty());
    CHECK(out.transmissions == 1);
    CHECK(out.retransmitters == std::vector<int>{3});
}

TEST_CASE("3-chain Monte Carlo mean matches the closed form") {
    // E[|reached|] = 0.5 * (1 + 0.5) = 0.75 at p_c = 0.5, p_r = 1.
    const Topology topo = build_topology({{0, 0}, {100, 0}, {200, 0}}, 100.0);
    RngStream rng(3);
    const int runs = 100000;
    double sum = 0, sumsq = 0;
    for (int i = 0; i < runs; ++i) {
        const double reached = static_cast<double>(flood(topo, 0, {1.0, 0.5}, rng).reached.size());
        sum += reached;
        sumsq += reached * reached;
    }
    const double mean = sum / runs;
    const double stderr_mean = std::sqrt((sumsq / runs - mean * mean) / (runs - 1));
    CHECK(std::abs(mean - 0.75) <= 3.0 * stderr_mean);
}

TEST_CASE("a failed delivery plus a declined coin leaves the far node unreachable") {
    // Diamond: source 0 with intermediates 1 and 2, node 3 behind both.
    const Topology topo = build_topology({{0, 0}, {100, 0}, {0, 100}, {100, 100}}, 100.0);
    DrawTable draws;
    draws.link_draw.assign(topo.directed_link_count(), 0.0);
    draws.node_draw.assign(4, 0.0);
    draws.link_draw[topo.link_index(0, 0)] = 0.9;  // 0 -> 1 lost at p_c = 0.5
    draws.link_draw[topo.link_index(0, 1)] = 0.1;  // 0 -> 2 delivered
    draws.node_draw[2] = 0.95;                     // node 2 declines at p_r = 0.9

    const FloodOutcome out = flood_with_table(topo, 0, {0.9, 0.5}, draws);
    CHECK(out.reached == std::vector<int>{2});
    CHECK(out.transmissions == 1);
    CHECK(std::find(out.reached.begin(), out.reached.end(), 3) == out.reached.end());
}

TEST_CASE("structural invariants hold on random topologies and parameters") {
    RngStream rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const Topology topo = random_snapshot(rng, 30, 120.0);
        const FloodParams params{uniform01(rng), uniform01(rng)};
        const int source = static_cast<int>(uniform01(rng) * 30);
        const FloodOutcome out = flood(topo, source, params, rng);

        CHECK(out.transmissions == static_cast<int>(out.retransmitters.size()));
        CHECK(std::binary_search(out.retransmitters.begin(), out.retransmitters.end(), source));
        CHECK(std::adjacent_find(out.retransmitters.begin(), out.retransmitters.end()) ==
              out.retransmitters.end());  // each node retransmits at most once

        const std::set<int> component = component_of(topo, source);
        for (int id : out.reached) CHECK(component.count(id) == 1);
        for (int id : out.retransmitters) {
            if (id != source) {
                CHECK(std::binary_search(out.reached.begin(), out.reached.end(), id));
                CHECK(out.receptions[id] >= 1);
            }
        }
    }
}

TEST_CASE("noiseless pure flood covers exactly the source's component") {
    RngStream rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Topology topo = random_snapshot(rng, 40, 100.0);
        const FloodOutcome out = flood(topo, 0, {1.0, 1.0}, rng);
        std::set<int> expected = component_of(topo, 0);
        CHECK(out.transmissions == static_cast<int>(expected.size()));
        expected.erase(0);
        CHECK(std::set<int>(out.reached.begin(), out.reached.end()) == expected);
    }
}

TEST_CASE("identical seeds give identical outcomes") {
    RngStream topo_rng(6);
    const Topology topo = random_snapshot(topo_rng, 50, 120.0);
    RngStream a(99), b(99);
    const FloodOutcome oa = flood(topo, 7, {0.6, 0.7}, a);
    const FloodOutcome ob = flood(topo, 7, {0.6, 0.7}, b);
    CHECK(oa.reached == ob.reached);
    CHECK(oa.retransmitters == ob.retransmitters);
    CHECK(oa.receptions == ob.receptions);
}

TEST_CASE("flood rejects invalid input") {
    const Topology topo = build_topology({{0, 0}, {50, 0}}, 100.0);
    RngStream rng(1);
    CHECK_THROWS_AS(flood(topo, 2, {1.0, 1.0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(flood(topo, -1, {1.0, 1.0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(flood(topo, 0, {1.5, 1.0}, rng), std::invalid_argument);
}

TEST_CASE("coupled sweep is pathwise monotone in p_c") {
    RngStream rng(8);
    const std::vector<double> grid{0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    for (int trial = 0; trial < 200; ++trial) {
        const Topology topo = random_snapshot(rng, 40, 120.0);
        const auto outcomes = flood_coupled(topo, 0, 0.8, grid, rng);
        REQUIRE(outcomes.size() == grid.size());
        for (std::size_t i = 1; i < outcomes.size(); ++i) {
            // Reached sets are nested, not merely growing in size.
            CHECK(std::includes(outcomes[i].reached.begin(), outcomes[i].reached.end(),
                                outcomes[i - 1].reached.begin(), outcomes[i - 1].reached.end()));
        }
    }
}

TEST_CASE("coupled sweep with the same table is monotone in p_r") {
    RngStream rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const Topology topo = random_snapshot(rng, 40, 120.0);
        const DrawTable table = make_draw_table(topo, rng);
        const FloodOutcome low = flood_with_table(topo, 0, {0.4, 0.7}, table);
        const FloodOutcome high = flood_with_table(topo, 0, {0.9, 0.7}, table);
        CHECK(std::includes(high.reached.begin(), high.reached.end(), low.reached.begin(),
                            low.reached.end()));
    }
}

TEST_CASE("degenerate coupled sweep equals the plain pure flood") {
    RngStream rng(11);
    const Topology topo = random_snapshot(rng, 40, 120.0);
    const std::vector<double> grid{1.0};
    const auto outcomes = flood_coupled(topo, 5, 1.0, grid, rng);
    const FloodOutcome plain = flood(topo, 5, {1.0, 1.0}, rng);
    CHECK(outcomes[0].reached == plain.reached);
    CHECK(outcomes[0].transmissions == plain.transmissions);
}

TEST_CASE("coupled sweep rejects an unsorted grid") {
    RngStream rng(12);
    const Topology topo = random_snapshot(rng, 10, 200.0);
    const std::vector<double> grid{0.9, 0.5};
    CHECK_THROWS_AS(flood_coupled(topo, 0, 1.0, grid, rng), std::invalid_argument);
}
