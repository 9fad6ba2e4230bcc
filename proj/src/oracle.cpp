#include "floodsim/oracle.hpp"

#include <stdexcept>

#include "floodsim/flood_traversal.hpp"

namespace floodsim {

namespace {

constexpr int kMaxNodes = 8;
constexpr int kMaxDirectedLinks = 12;

// Compensated (Kahan) accumulator; the mass sum spans up to 2^19 terms and
// must land within 1e-12 of 1.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double value) {
        const double y = value - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Fixed boolean assignment: link bit k is delivery draw k, node bits follow.
struct AssignmentDraws {
    std::uint64_t assignment;
    const std::vector<int>& node_bit;  // -1 for the source

    bool deliver(int link, int) const { return (assignment >> link) & 1; }
    bool retransmit(int node) const { return (assignment >> node_bit[node]) & 1; }
};

}  // namespace

OracleResult exact_metrics(const Topology& topology, int source, FloodParams params) {
    const int n = topology.node_count();
    const int links = topology.directed_link_count();
    if (n > kMaxNodes || links > kMaxDirectedLinks)
        throw std::invalid_argument("exact_metrics: topology exceeds enumeration size bounds");
    if (source < 0 || source >= n) throw std::invalid_argument("exact_metrics: invalid source id");

    std::vector<int> node_bit(n, -1);
    int bits = links;
    for (int i = 0; i < n; ++i) {
        if (i != source) node_bit[i] = bits++;
    }

    // Per-bit success probabilities: delivery bits carry p_c, coin bits p_r.
    std::vector<double> success_prob(bits);
    for (int b = 0; b < links; ++b) success_prob[b] = params.reception_prob;
    for (int b = links; b < bits; ++b) success_prob[b] = params.retransmit_prob;

    OracleResult result;
    result.enumerated_outcomes = std::uint64_t{1} << bits;

    KahanSum mass, rch, ret;
    for (std::uint64_t assignment = 0; assignment < result.enumerated_outcomes; ++assignment) {
        double weight = 1.0;
        for (int b = 0; b < bits && weight != 0.0; ++b) {
            weight *= ((assignment >> b) & 1) ? success_prob[b] : 1.0 - success_prob[b];
        }
        mass.add(weight);
        if (weight == 0.0) continue;

        const FloodOutcome outcome = propagate(topology, source, AssignmentDraws{assignment, node_bit});
        rch.add(weight * static_cast<double>(outcome.reached.size()) / n);
        ret.add(weight * static_cast<double>(outcome.transmissions) / n);
    }
    result.probability_mass = mass.sum;
    result.expected_rch = rch.sum;
    result.expected_ret = ret.sum;
    return result;
}

}  // namespace floodsim
