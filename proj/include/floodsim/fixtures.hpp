#pragma once

#include <string>
#include <vector>

#include "floodsim/geometry.hpp"

namespace floodsim {

struct Fixture {
    std::string name;
    Topology topology;
    int source{};
};

// Small topologies within the oracle's enumeration bounds, used to
// cross-check the Monte Carlo engine against exact expectations.
std::vector<Fixture> oracle_fixtures();

struct OracleCheckRow {
    std::string fixture;
    double p_r{};
    double p_c{};
    double oracle_rch{};
    double mc_rch{};
    double rch_stderr{};
    double oracle_ret{};
    double mc_ret{};
    double ret_stderr{};
    bool ok{};
};

struct OracleCheckReport {
    std::vector<OracleCheckRow> rows;
    bool all_ok{true};
};

// Runs `runs` Monte Carlo floods per (fixture, p_r, p_c) grid point and
// requires |MC mean - oracle| <= 3 standard errors on both RCH and RET.
OracleCheckReport run_oracle_check(int runs, std::uint64_t seed);

}  // namespace floodsim
