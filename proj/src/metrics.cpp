#include "floodsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace floodsim {

double rch_of(const FloodOutcome& outcome, int n) {
    if (n < 2) throw std::invalid_argument("rch_of: n must be >= 2");
    return static_cast<double>(outcome.reached.size()) / n;
}

double ret_of(const FloodOutcome& outcome, int n) {
    if (n < 2) throw std::invalid_argument("ret_of: n must be >= 2");
    return static_cast<double>(outcome.transmissions) / n;
}

MetricPoint aggregate(std::span<const std::pair<double, double>> points) {
    if (points.empty()) throw std::invalid_argument("aggregate: empty sample list");

    const double k = static_cast<double>(points.size());
    double sum_rch = 0.0, sum_ret = 0.0, sumsq_rch = 0.0, sumsq_ret = 0.0;
    for (const auto& [rch, ret] : points) {
        sum_rch += rch;
        sum_ret += ret;
        sumsq_rch += rch * rch;
        sumsq_ret += ret * ret;
    }

    MetricPoint point;
    point.sample_count = points.size();
    point.rch = sum_rch / k;
    point.ret = sum_ret / k;
    if (points.size() > 1) {
        const double var_rch = std::max(0.0, (sumsq_rch - sum_rch * sum_rch / k) / (k - 1.0));
        const double var_ret = std::max(0.0, (sumsq_ret - sum_ret * sum_ret / k) / (k - 1.0));
        point.rch_stderr = std::sqrt(var_rch / k);
        point.ret_stderr = std::sqrt(var_ret / k);
    }
    return point;
}

double relative_change(double noiseless, double noisy) {
    if (!(noiseless > 0.0))
        throw std::domain_error("relative_change: noiseless baseline must be > 0");
    return (noiseless - noisy) / noiseless * 100.0;
}

}  // namespace floodsim
