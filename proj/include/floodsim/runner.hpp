#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "floodsim/config.hpp"

namespace floodsim {

struct ResultRow {
    double varied_value{};
    double p_c{};
    double rch{};
    double rch_stderr{};
    double ret{};
    double ret_stderr{};
    double s_rch{};
    double s_ret{};
    std::size_t samples{};
};

struct ResultTable {
    std::string varied;  // p_r | n | u | R
    std::vector<ResultRow> rows;  // |values| x |p_c grid|, grouped by varied value
};

// Full sweep: for each varied value, run the mobility loop, flood from every
// source with common random numbers across the p_c grid, aggregate, and
// compute S_V against the group's own p_c = 1 baseline. Output is
// bit-identical for identical (spec, seed), independent of parallelism.
ResultTable run_scenario(const SweepSpec& spec, std::uint64_t seed, int parallelism = 1);

// CSV contract: fixed header, shortest round-trippable number formatting.
extern const char* const kCsvHeader;
std::string to_csv(const ResultTable& table);
ResultTable read_csv(std::istream& in);

}  // namespace floodsim
