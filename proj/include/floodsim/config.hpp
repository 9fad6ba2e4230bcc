#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "floodsim/geometry.hpp"

namespace floodsim {

// One row of an input-parameter table: everything a single simulation run
// needs. sources == 0 means "flood from every node".
struct ScenarioConfig {
    int n{};
    Area area{};
    double radio_range{};
    double speed{};
    double retransmit_prob{};
    std::vector<double> reception_probs;
    double sim_time{};
    std::uint64_t seed{};
    int sources{0};
    int snapshot_override{0};  // 0 = derive floor(sim_time / tau); required when speed == 0
};

enum class Varied { retransmit_prob, node_count, speed, radio_range };

std::string varied_name(Varied varied);

struct SweepSpec {
    Varied varied{};
    std::vector<double> values;
    ScenarioConfig base;
};

struct ConfigError : std::runtime_error {
    ConfigError(int line, const std::string& key, const std::string& message);
    int line;
    std::string key;
};

// Validates ranges and cross-field constraints; throws ConfigError (line 0).
void validate(const ScenarioConfig& config);

// Applies one value of the varied parameter to a copy of the base config.
ScenarioConfig apply_varied(const ScenarioConfig& base, Varied varied, double value);

// Flat `key = value` grammar, `#` comments, comma-separated lists.
// Keys: n, area_w, area_h, R, u, p_r, p_c_list, t_sim, seed, sources,
// n_intv (optional), varied, values.
SweepSpec parse_config(std::istream& in);
SweepSpec parse_config_file(const std::string& path);

}  // namespace floodsim
