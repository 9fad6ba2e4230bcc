#include "floodsim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace floodsim {

Topology build_topology(const std::vector<Vec2>& positions, double radio_range) {
    const int n = static_cast<int>(positions.size());
    if (n < 2) throw std::invalid_argument("build_topology: need at least 2 nodes");
    if (!(radio_range > 0.0)) throw std::invalid_argument("build_topology: radio_range must be > 0");
    for (const Vec2& p : positions) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("build_topology: non-finite coordinate");
    }

    Topology topo;
    topo.positions = positions;
    topo.radio_range = radio_range;
    topo.adjacency.resize(n);

    const double r2 = radio_range * radio_range;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = positions[i].x - positions[j].x;
            const double dy = positions[i].y - positions[j].y;
            if (dx * dx + dy * dy <= r2) {
                topo.adjacency[i].push_back(j);
                topo.adjacency[j].push_back(i);
            }
        }
    }

    topo.link_offset.resize(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        topo.link_offset[i + 1] = topo.link_offset[i] + static_cast<int>(topo.adjacency[i].size());
    }
    return topo;
}

double pause_time(double radio_range, double speed) {
    if (!(speed > 0.0)) throw std::invalid_argument("pause_time: speed must be > 0");
    return 0.75 * radio_range / speed;
}

int snapshot_count(double sim_time, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("snapshot_count: tau must be > 0");
    if (!(sim_time > 0.0)) throw std::invalid_argument("snapshot_count: sim_time must be > 0");
    return static_cast<int>(std::floor(sim_time / tau));
}

double density(int n, double radio_range, const Area& area) {
    if (!(area.size() > 0.0)) throw std::invalid_argument("density: area must be positive");
    return std::numbers::pi * n * radio_range * radio_range / area.size();
}

}  // namespace floodsim
