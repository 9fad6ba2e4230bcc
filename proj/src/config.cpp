#include "floodsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace floodsim {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, ',')) parts.push_back(trim(item));
    return parts;
}

struct RawEntry {
    std::string value;
    int line;
};

double parse_double(const RawEntry& entry, const std::string& key) {
    try {
        std::size_t used = 0;
        const double v = std::stod(entry.value, &used);
        if (used != entry.value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(entry.line, key, "expected a number, got '" + entry.value + "'");
    }
}

}  // namespace

ConfigError::ConfigError(int line_no, const std::string& key_name, const std::string& message)
    : std::runtime_error(key_name.empty()
                             ? "config error (line " + std::to_string(line_no) + "): " + message
                             : "config error (line " + std::to_string(line_no) + ", key '" +
                                   key_name + "'): " + message),
      line(line_no),
      key(key_name) {}

std::string varied_name(Varied varied) {
    switch (varied) {
        case Varied::retransmit_prob: return "p_r";
        case Varied::node_count: return "n";
        case Varied::speed: return "u";
        case Varied::radio_range: return "R";
    }
    return "?";
}

void validate(const ScenarioConfig& config) {
    auto fail = [](const std::string& key, const std::string& msg) {
        throw ConfigError(0, key, msg);
    };
    if (config.n < 2) fail("n", "node count must be >= 2");
    if (!(config.area.width > 0.0) || !(config.area.height > 0.0))
        fail("area_w/area_h", "area dimensions must be > 0");
    if (!(config.radio_range > 0.0)) fail("R", "radio range must be > 0");
    if (config.speed < 0.0) fail("u", "speed must be >= 0");
    if (!(config.retransmit_prob >= 0.0 && config.retransmit_prob <= 1.0))
        fail("p_r", "probability must be in [0,1]");
    if (config.reception_probs.empty()) fail("p_c_list", "at least one p_c value required");
    for (double p : config.reception_probs) {
        if (!(p >= 0.0 && p <= 1.0)) fail("p_c_list", "probability must be in [0,1]");
    }
    if (!std::is_sorted(config.reception_probs.begin(), config.reception_probs.end()))
        fail("p_c_list", "p_c list must be sorted ascending");
    if (!(config.sim_time > 0.0)) fail("t_sim", "simulation time must be > 0");
    if (config.sources < 0) fail("sources", "source sample size must be positive or 'all'");
    if (config.snapshot_override < 0) fail("n_intv", "snapshot count must be positive");
    if (config.speed == 0.0 && config.snapshot_override == 0)
        fail("n_intv", "u = 0 leaves the pause time undefined; set n_intv explicitly");
}

ScenarioConfig apply_varied(const ScenarioConfig& base, Varied varied, double value) {
    ScenarioConfig config = base;
    switch (varied) {
        case Varied::retransmit_prob: config.retransmit_prob = value; break;
        case Varied::node_count: config.n = static_cast<int>(value); break;
        case Varied::speed: config.speed = value; break;
        case Varied::radio_range: config.radio_range = value; break;
    }
    return config;
}

SweepSpec parse_config(std::istream& in) {
    std::map<std::string, RawEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line_no, "", "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError(line_no, key, "empty key or value");
        if (entries.count(key)) throw ConfigError(line_no, key, "duplicate key");
        entries[key] = {value, line_no};
    }

    auto require = [&](const std::string& key) -> const RawEntry& {
        auto it = entries.find(key);
        if (it == entries.end()) throw ConfigError(0, key, "missing required key");
        return it->second;
    };

    SweepSpec spec;
    spec.base.n = static_cast<int>(parse_double(require("n"), "n"));
    spec.base.area = {parse_double(require("area_w"), "area_w"),
                      parse_double(require("area_h"), "area_h")};
    spec.base.radio_range = parse_double(require("R"), "R");
    spec.base.speed = parse_double(require("u"), "u");
    spec.base.retransmit_prob = parse_double(require("p_r"), "p_r");
    if (!(spec.base.retransmit_prob >= 0.0 && spec.base.retransmit_prob <= 1.0))
        throw ConfigError(require("p_r").line, "p_r", "probability must be in [0,1]");
    spec.base.sim_time = parse_double(require("t_sim"), "t_sim");

    const RawEntry& p_c_entry = require("p_c_list");
    for (const std::string& item : split_list(p_c_entry.value)) {
        const double p = parse_double({item, p_c_entry.line}, "p_c_list");
        if (!(p >= 0.0 && p <= 1.0))
            throw ConfigError(p_c_entry.line, "p_c_list", "probability must be in [0,1]");
        spec.base.reception_probs.push_back(p);
    }

    if (entries.count("seed")) {
        const RawEntry& entry = entries.at("seed");
        std::uint64_t seed = 0;
        const auto [ptr, ec] =
            std::from_chars(entry.value.data(), entry.value.data() + entry.value.size(), seed);
        if (ec != std::errc{} || ptr != entry.value.data() + entry.value.size())
            throw ConfigError(entry.line, "seed", "expected an unsigned 64-bit integer");
        spec.base.seed = seed;
    }

    if (entries.count("sources")) {
        const RawEntry& entry = entries.at("sources");
        if (entry.value == "all") {
            spec.base.sources = 0;
        } else {
            const double v = parse_double(entry, "sources");
            if (v < 1) throw ConfigError(entry.line, "sources", "must be 'all' or a positive count");
            spec.base.sources = static_cast<int>(v);
        }
    }

    if (entries.count("n_intv")) {
        const RawEntry& entry = entries.at("n_intv");
        const double v = parse_double(entry, "n_intv");
        if (v < 1) throw ConfigError(entry.line, "n_intv", "must be a positive count");
        spec.base.snapshot_override = static_cast<int>(v);
    }

    const RawEntry& varied_entry = require("varied");
    if (varied_entry.value == "p_r") spec.varied = Varied::retransmit_prob;
    else if (varied_entry.value == "n") spec.varied = Varied::node_count;
    else if (varied_entry.value == "u") spec.varied = Varied::speed;
    else if (varied_entry.value == "R") spec.varied = Varied::radio_range;
    else throw ConfigError(varied_entry.line, "varied", "must be one of p_r, n, u, R");

    const RawEntry& values_entry = require("values");
    for (const std::string& item : split_list(values_entry.value)) {
        spec.values.push_back(parse_double({item, values_entry.line}, "values"));
    }
    if (spec.values.empty()) throw ConfigError(values_entry.line, "values", "list must be non-empty");

    // Every varied value must produce a valid scenario.
    for (double value : spec.values) validate(apply_varied(spec.base, spec.varied, value));
    return spec;
}

SweepSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

}  // namespace floodsim
