#include "floodsim/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "floodsim/flood.hpp"
#include "floodsim/metrics.hpp"
#include "floodsim/mobility.hpp"

namespace floodsim {

namespace {

// Substream phase tags; each (seed, value, phase, ...) tuple is its own stream.
constexpr std::int64_t kPhaseInit = 0;
constexpr std::int64_t kPhaseStep = 1;
constexpr std::int64_t kPhaseFlood = 2;

std::string format_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, ptr);
}

}  // namespace

const char* const kCsvHeader =
    "varied_name,varied_value,p_c,rch,rch_stderr,ret,ret_stderr,s_rch,s_ret,samples";

ResultTable run_scenario(const SweepSpec& spec, std::uint64_t seed, int parallelism) {
    if (parallelism < 1) throw std::invalid_argument("run_scenario: parallelism must be >= 1");

    ResultTable table;
    table.varied = varied_name(spec.varied);

    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        const ScenarioConfig config = apply_varied(spec.base, spec.varied, spec.values[vi]);
        validate(config);

        const double tau = config.speed > 0.0 ? pause_time(config.radio_range, config.speed) : 0.0;
        const int intervals = config.snapshot_override > 0
                                  ? config.snapshot_override
                                  : snapshot_count(config.sim_time, tau);
        const int n = config.n;
        const int source_count = config.sources == 0 ? n : std::min(config.sources, n);
        const std::span<const double> grid(config.reception_probs);

        RngStream init_rng =
            derive_substream(seed, {static_cast<std::int64_t>(vi), kPhaseInit});
        MobilityState state = init_positions(init_rng, n, config.area);

        // Per-run (rch, ret) samples per grid point, appended in fixed
        // (snapshot, source) order regardless of thread count.
        std::vector<std::vector<std::pair<double, double>>> samples(grid.size());
        for (auto& cell : samples) cell.reserve(static_cast<std::size_t>(intervals) * source_count);

        for (int snap = 0; snap < intervals; ++snap) {
            if (config.speed > 0.0) {
                RngStream step_rng = derive_substream(
                    seed, {static_cast<std::int64_t>(vi), kPhaseStep, snap});
                state = step(state, step_rng, config.speed, tau, config.area);
            }
            const Topology topology = build_topology(state.positions, config.radio_range);

            std::vector<std::vector<FloodOutcome>> per_source(source_count);
            auto run_sources = [&](int begin, int end) {
                for (int src = begin; src < end; ++src) {
                    RngStream rng = derive_substream(
                        seed, {static_cast<std::int64_t>(vi), kPhaseFlood, snap, src});
                    per_source[src] =
                        flood_coupled(topology, src, config.retransmit_prob, grid, rng);
                }
            };

            const int workers = std::min(parallelism, source_count);
            if (workers <= 1) {
                run_sources(0, source_count);
            } else {
                std::vector<std::thread> pool;
                pool.reserve(workers);
                const int chunk = (source_count + workers - 1) / workers;
                for (int w = 0; w < workers; ++w) {
                    const int begin = w * chunk;
                    const int end = std::min(begin + chunk, source_count);
                    if (begin < end) pool.emplace_back(run_sources, begin, end);
                }
                for (std::thread& t : pool) t.join();
            }

            for (int src = 0; src < source_count; ++src) {
                for (std::size_t pi = 0; pi < grid.size(); ++pi) {
                    const FloodOutcome& outcome = per_source[src][pi];
                    samples[pi].emplace_back(rch_of(outcome, n), ret_of(outcome, n));
                }
            }
        }

        std::vector<MetricPoint> points(grid.size());
        for (std::size_t pi = 0; pi < grid.size(); ++pi) points[pi] = aggregate(samples[pi]);

        // S_V baseline is this group's own p_c = 1 cell, if present.
        const auto baseline_it = std::find(grid.begin(), grid.end(), 1.0);
        const MetricPoint* baseline =
            baseline_it == grid.end() ? nullptr : &points[baseline_it - grid.begin()];

        for (std::size_t pi = 0; pi < grid.size(); ++pi) {
            ResultRow row;
            row.varied_value = spec.values[vi];
            row.p_c = grid[pi];
            row.rch = points[pi].rch;
            row.rch_stderr = points[pi].rch_stderr;
            row.ret = points[pi].ret;
            row.ret_stderr = points[pi].ret_stderr;
            row.samples = points[pi].sample_count;
            row.s_rch = baseline && baseline->rch > 0.0
                            ? relative_change(baseline->rch, points[pi].rch)
                            : std::numeric_limits<double>::quiet_NaN();
            row.s_ret = baseline && baseline->ret > 0.0
                            ? relative_change(baseline->ret, points[pi].ret)
                            : std::numeric_limits<double>::quiet_NaN();
            table.rows.push_back(row);
        }
    }
    return table;
}

std::string to_csv(const ResultTable& table) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const ResultRow& row : table.rows) {
        out += table.varied;
        out += ',';
        out += format_number(row.varied_value);
        out += ',';
        out += format_number(row.p_c);
        out += ',';
        out += format_number(row.rch);
        out += ',';
        out += format_number(row.rch_stderr);
        out += ',';
        out += format_number(row.ret);
        out += ',';
        out += format_number(row.ret_stderr);
        out += ',';
        out += format_number(row.s_rch);
        out += ',';
        out += format_number(row.s_ret);
        out += ',';
        out += std::to_string(row.samples);
        out += '\n';
    }
    return out;
}

ResultTable read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw std::runtime_error("read_csv: unexpected header: " + line);

    ResultTable table;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::stringstream stream(line);
        std::string field;
        while (std::getline(stream, field, ',')) fields.push_back(field);
        if (fields.size() != 10)
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                                     ": expected 10 fields");

        if (table.varied.empty()) {
            table.varied = fields[0];
        } else if (table.varied != fields[0]) {
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                                     ": mixed varied_name values");
        }

        ResultRow row;
        try {
            row.varied_value = std::stod(fields[1]);
            row.p_c = std::stod(fields[2]);
            row.rch = std::stod(fields[3]);
            row.rch_stderr = std::stod(fields[4]);
            row.ret = std::stod(fields[5]);
            row.ret_stderr = std::stod(fields[6]);
            row.s_rch = std::stod(fields[7]);
            row.s_ret = std::stod(fields[8]);
            row.samples = std::stoul(fields[9]);
        } catch (const std::exception&) {
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) +
                                     ": malformed numeric field");
        }
        table.rows.push_back(row);
    }
    if (table.rows.empty()) throw std::runtime_error("read_csv: no data rows");
    return table;
}

}  // namespace floodsim
