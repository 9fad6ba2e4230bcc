#pragma once

#include <string>
#include <vector>

#include "floodsim/runner.hpp"

namespace floodsim {

// Formats the S_V summary: one row per varied value, S_RCH and S_RET at
// p_c = 0.5 and 0.6, one decimal place. Rows keep the sweep's own value
// order. Throws if the required p_c columns or the p_c = 1 baseline are
// missing.
std::string format_sv_table(const ResultTable& table);

struct PlotSeries {
    std::string name;  // "<varied>=<value>"
    std::vector<std::pair<double, double>> points;  // (p_c, metric)
};

// One (p_c, value) series per varied value for the requested metric
// ("rch" or "ret").
std::vector<PlotSeries> plot_series(const ResultTable& table, const std::string& figure);

std::string format_series(const PlotSeries& series);

}  // namespace floodsim
