#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "floodsim/config.hpp"
#include "floodsim/fixtures.hpp"
#include "floodsim/report.hpp"
#include "floodsim/runner.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitOracle = 3;

std::string join_args(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
        if (i) cmd += ' ';
        cmd += argv[i];
    }
    return cmd;
}

int cmd_run(const std::string& config_path, std::uint64_t seed, bool seed_given,
            const std::string& out_dir, int parallelism, const std::string& command_line) {
    floodsim::SweepSpec spec;
    try {
        spec = floodsim::parse_config_file(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    if (!seed_given) seed = spec.base.seed;

    const auto start = std::chrono::steady_clock::now();
    floodsim::ResultTable table;
    try {
        table = floodsim::run_scenario(spec, seed, parallelism);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    try {
        fs::create_directories(out_dir);
        const fs::path csv_path = fs::path(out_dir) / "results.csv";
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
        csv << floodsim::to_csv(table);
        csv.close();

        nlohmann::json manifest{{"config", config_path},
                                {"seed", seed},
                                {"output", out_dir},
                                {"command", command_line},
                                {"tool_version", kVersion},
                                {"parallelism", parallelism},
                                {"duration_seconds", elapsed}};
        std::ofstream mf(fs::path(out_dir) / "manifest.json", std::ios::binary);
        if (!mf) throw std::runtime_error("cannot write manifest.json in " + out_dir);
        mf << manifest.dump(2) << "\n";

        std::cout << "wrote " << table.rows.size() << " rows to " << csv_path.string() << " in "
                  << elapsed << " s\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_table(const std::string& csv_path) {
    try {
        std::ifstream in(csv_path);
        if (!in) throw std::runtime_error("cannot open " + csv_path);
        const floodsim::ResultTable table = floodsim::read_csv(in);
        std::cout << floodsim::format_sv_table(table);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_plot_data(const std::string& csv_path, const std::string& figure,
                  const std::string& out_dir) {
    try {
        std::ifstream in(csv_path);
        if (!in) throw std::runtime_error("cannot open " + csv_path);
        const floodsim::ResultTable table = floodsim::read_csv(in);
        const auto series = floodsim::plot_series(table, figure);

        fs::create_directories(out_dir);
        for (const floodsim::PlotSeries& s : series) {
            std::string name = s.name;
            for (char& c : name) {
                if (c == '=' ) c = '_';
            }
            const fs::path path = fs::path(out_dir) / (figure + "_" + name + ".dat");
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + path.string());
            out << floodsim::format_series(s);
            std::cout << path.string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_oracle_check(int runs, std::uint64_t seed) {
    floodsim::OracleCheckReport report;
    try {
        report = floodsim::run_oracle_check(runs, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    for (const floodsim::OracleCheckRow& row : report.rows) {
        std::printf("%s  p_r=%.2f p_c=%.2f  rch mc=%.5f exact=%.5f (se %.5f)  "
                    "ret mc=%.5f exact=%.5f (se %.5f)  %s\n",
                    row.fixture.c_str(), row.p_r, row.p_c, row.mc_rch, row.oracle_rch,
                    row.rch_stderr, row.mc_ret, row.oracle_ret, row.ret_stderr,
                    row.ok ? "ok" : "FAIL");
    }
    std::printf("oracle-check: %s (%zu grid points, %d runs each)\n",
                report.all_ok ? "PASS" : "FAIL", report.rows.size(), runs);
    return report.all_ok ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo simulator of probabilistic route-request flooding in lossy MANETs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path, csv_path, out_dir = "out", figure = "rch";
    std::uint64_t seed = 0;
    int parallelism = 1;
    int runs = 100000;

    CLI::App* run = app.add_subcommand("run", "Run a sweep from a scenario config");
    run->add_option("config", config_path, "scenario config file")->required();
    CLI::Option* seed_opt = run->add_option("--seed", seed, "master seed (overrides config)");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--parallelism", parallelism, "worker threads per snapshot")
        ->check(CLI::PositiveNumber);

    CLI::App* tab = app.add_subcommand("table", "Print the S_V summary of a results.csv");
    tab->add_option("csv", csv_path, "results.csv from 'run'")->required();

    CLI::App* plot = app.add_subcommand("plot-data", "Emit per-series plot data files");
    plot->add_option("csv", csv_path, "results.csv from 'run'")->required();
    plot->add_option("--figure", figure, "rch or ret");
    plot->add_option("--out", out_dir, "output directory");

    CLI::App* oracle = app.add_subcommand("oracle-check",
                                          "Cross-check the engine against exact enumeration");
    oracle->add_option("--runs", runs, "Monte Carlo runs per grid point")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitValidation : kExitOk;
    }

    if (run->parsed())
        return cmd_run(config_path, seed, seed_opt->count() > 0, out_dir, parallelism,
                       join_args(argc, argv));
    if (tab->parsed()) return cmd_table(csv_path);
    if (plot->parsed()) return cmd_plot_data(csv_path, figure, out_dir);
    if (oracle->parsed()) return cmd_oracle_check(runs, seed);
    return kExitValidation;
}
