#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "floodsim/flood.hpp"

namespace floodsim {

struct MetricPoint {
    double rch{};
    double ret{};
    double rch_stderr{};
    double ret_stderr{};
    std::size_t sample_count{};
};

// Reachability: reached nodes (source excluded) normalized by n.
double rch_of(const FloodOutcome& outcome, int n);

// Retransmission ratio: transmissions (source included) normalized by n.
double ret_of(const FloodOutcome& outcome, int n);

// Sample means and standard errors over per-run (rch, ret) pairs,
// accumulated in input order so output is bit-stable.
MetricPoint aggregate(std::span<const std::pair<double, double>> points);

// Percentage relative change (V(1) - V(p_c)) / V(1) * 100.
double relative_change(double noiseless, double noisy);

}  // namespace floodsim
