#include "floodsim/mobility.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace floodsim {

MobilityState init_positions(RngStream& rng, int n, const Area& area) {
    if (n < 1) throw std::invalid_argument("init_positions: n must be >= 1");
    MobilityState state;
    state.positions.reserve(n);
    state.headings.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = uniform01(rng) * area.width;
        const double y = uniform01(rng) * area.height;
        state.positions.push_back({x, y});
        state.headings.push_back(uniform01(rng) * 2.0 * std::numbers::pi);
    }
    return state;
}

double reflect_coordinate(double x, double extent) {
    const double period = 2.0 * extent;
    x = std::fmod(x, period);
    if (x < 0.0) x += period;
    if (x > extent) x = period - x;
    return x;
}

Vec2 advance_position(Vec2 pos, double heading, double distance, const Area& area) {
    pos.x = reflect_coordinate(pos.x + distance * std::cos(heading), area.width);
    pos.y = reflect_coordinate(pos.y + distance * std::sin(heading), area.height);
    return pos;
}

MobilityState step(const MobilityState& state, RngStream& rng, double speed, double dt,
                   const Area& area) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
    const double distance = speed * dt;
    MobilityState next;
    next.positions.reserve(state.positions.size());
    next.headings.reserve(state.positions.size());
    for (const Vec2& pos : state.positions) {
        const double heading = uniform01(rng) * 2.0 * std::numbers::pi;
        next.positions.push_back(advance_position(pos, heading, distance, area));
        next.headings.push_back(heading);
    }
    return next;
}

}  // namespace floodsim
