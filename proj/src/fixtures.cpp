#include "floodsim/fixtures.hpp"

#include <cmath>

#include "floodsim/metrics.hpp"
#include "floodsim/oracle.hpp"

namespace floodsim {

std::vector<Fixture> oracle_fixtures() {
    const double range = 100.0;
    std::vector<Fixture> fixtures;

    fixtures.push_back({"chain-3",
                        build_topology({{0, 0}, {100, 0}, {200, 0}}, range),
                        0});

    // Node 0 is a leaf, node 1 the hub; leaves are pairwise out of range.
    fixtures.push_back({"star-4",
                        build_topology({{100, 0}, {0, 0}, {0, 100}, {-100, 0}}, range),
                        0});

    // Unit square scaled to the range: sides in range, diagonals out.
    fixtures.push_back({"cycle-4",
                        build_topology({{0, 0}, {100, 0}, {100, 100}, {0, 100}}, range),
                        0});

    // Triangle {0,1,2}, bridge 2-3, hub 3 serving leaves 4 and 5.
    // 6 undirected edges = 12 directed links, the oracle's bound.
    fixtures.push_back({"two-cluster-6",
                        build_topology({{0, 0}, {100, 0}, {50, 80}, {50, 180}, {140, 220}, {-40, 220}},
                                       range),
                        0});

    return fixtures;
}

OracleCheckReport run_oracle_check(int runs, std::uint64_t seed) {
    const std::vector<double> grid = {0.25, 0.5, 0.75, 1.0};
    OracleCheckReport report;

    std::int64_t task = 0;
    for (const Fixture& fixture : oracle_fixtures()) {
        const int n = fixture.topology.node_count();
        for (double p_r : grid) {
            for (double p_c : grid) {
                const FloodParams params{p_r, p_c};
                const OracleResult exact = exact_metrics(fixture.topology, fixture.source, params);

                RngStream rng = derive_substream(seed, {task++});
                std::vector<std::pair<double, double>> samples;
                samples.reserve(runs);
                for (int r = 0; r < runs; ++r) {
                    const FloodOutcome outcome = flood(fixture.topology, fixture.source, params, rng);
                    samples.emplace_back(rch_of(outcome, n), ret_of(outcome, n));
                }
                const MetricPoint mc = aggregate(samples);

                OracleCheckRow row;
                row.fixture = fixture.name;
                row.p_r = p_r;
                row.p_c = p_c;
                row.oracle_rch = exact.expected_rch;
                row.mc_rch = mc.rch;
                row.rch_stderr = mc.rch_stderr;
                row.oracle_ret = exact.expected_ret;
                row.mc_ret = mc.ret;
                row.ret_stderr = mc.ret_stderr;
                // The 1e-12 slack covers summation rounding in the degenerate
                // zero-variance cells (e.g. p_c = p_r = 1).
                row.ok = std::abs(mc.rch - exact.expected_rch) <= 3.0 * mc.rch_stderr + 1e-12 &&
                         std::abs(mc.ret - exact.expected_ret) <= 3.0 * mc.ret_stderr + 1e-12;
                if (!row.ok) report.all_ok = false;
                report.rows.push_back(row);
            }
        }
    }
    return report;
}

}  // namespace floodsim
