#pragma once

#include "floodsim/geometry.hpp"
#include "floodsim/rng.hpp"

namespace floodsim {

struct MobilityState {
    std::vector<Vec2> positions;
    std::vector<double> headings;  // radians in [0, 2*pi)
};

// Uniform random placement over the area; one heading per node.
MobilityState init_positions(RngStream& rng, int n, const Area& area);

// Folds a coordinate back into [0, extent] by mirror reflection at the walls.
double reflect_coordinate(double x, double extent);

// Straight-line move of `distance` along `heading`, reflecting off the area
// boundary. Path length along the (possibly folded) line equals `distance`.
Vec2 advance_position(Vec2 pos, double heading, double distance, const Area& area);

// One mobility interval: every node draws a fresh uniform heading and travels
// speed * dt along it with boundary reflection.
MobilityState step(const MobilityState& state, RngStream& rng, double speed, double dt,
                   const Area& area);

}  // namespace floodsim
