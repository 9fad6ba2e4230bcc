#pragma once

#include <vector>

namespace floodsim {

struct Vec2 {
    double x{};
    double y{};
};

struct Area {
    double width{};
    double height{};

    double size() const { return width * height; }
};

// Frozen snapshot of the network: node positions and the within-range
// adjacency induced by a common radio range. Links are symmetric; a node is
// never its own neighbor. Distance exactly equal to the range counts as
// in-range.
struct Topology {
    std::vector<Vec2> positions;
    double radio_range{};
    std::vector<std::vector<int>> adjacency;
    // Prefix sums over adjacency sizes; directed link (tx, adjacency[tx][k])
    // has the stable index link_offset[tx] + k.
    std::vector<int> link_offset;

    int node_count() const { return static_cast<int>(positions.size()); }
    int directed_link_count() const { return link_offset.back(); }
    int link_index(int tx, int k) const { return link_offset[tx] + k; }
};

Topology build_topology(const std::vector<Vec2>& positions, double radio_range);

// tau = 0.75 * R / u. Throws for u <= 0 (a static network has no pause time;
// the snapshot count must then be configured explicitly).
double pause_time(double radio_range, double speed);

// Number of quasi-static snapshots in a simulation: floor(T_sim / tau).
int snapshot_count(double sim_time, double tau);

// Mean neighbors per node, pi * n * R^2 / A.
double density(int n, double radio_range, const Area& area);

}  // namespace floodsim
