#include "floodsim/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace floodsim {

namespace {

std::string short_number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string one_decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

// Groups rows by varied value preserving first-appearance order.
std::vector<double> group_values(const ResultTable& table) {
    std::vector<double> values;
    for (const ResultRow& row : table.rows) {
        if (values.empty() || values.back() != row.varied_value) {
            bool seen = false;
            for (double v : values) seen = seen || v == row.varied_value;
            if (!seen) values.push_back(row.varied_value);
        }
    }
    return values;
}

const ResultRow* find_row(const ResultTable& table, double value, double p_c) {
    for (const ResultRow& row : table.rows) {
        if (row.varied_value == value && row.p_c == p_c) return &row;
    }
    return nullptr;
}

}  // namespace

std::string format_sv_table(const ResultTable& table) {
    const std::vector<double> values = group_values(table);

    for (double value : values) {
        if (!find_row(table, value, 1.0))
            throw std::runtime_error("format_sv_table: missing p_c = 1 baseline for " +
                                     table.varied + " = " + short_number(value));
        for (double p_c : {0.5, 0.6}) {
            const ResultRow* row = find_row(table, value, p_c);
            if (!row || std::isnan(row->s_rch))
                throw std::runtime_error("format_sv_table: missing p_c = " + short_number(p_c) +
                                         " column for " + table.varied + " = " +
                                         short_number(value));
        }
    }

    std::string out;
    out += table.varied +
           "\tS_RCH(%) p_c=0.5\tS_RCH(%) p_c=0.6\tS_RET(%) p_c=0.5\tS_RET(%) p_c=0.6\n";
    for (double value : values) {
        const ResultRow* at05 = find_row(table, value, 0.5);
        const ResultRow* at06 = find_row(table, value, 0.6);
        out += short_number(value);
        out += '\t' + one_decimal(at05->s_rch);
        out += '\t' + one_decimal(at06->s_rch);
        out += '\t' + one_decimal(at05->s_ret);
        out += '\t' + one_decimal(at06->s_ret);
        out += '\n';
    }
    return out;
}

std::vector<PlotSeries> plot_series(const ResultTable& table, const std::string& figure) {
    if (figure != "rch" && figure != "ret")
        throw std::runtime_error("plot_series: unknown figure kind '" + figure + "'");

    std::vector<PlotSeries> result;
    for (double value : group_values(table)) {
        PlotSeries series;
        series.name = table.varied + "=" + short_number(value);
        for (const ResultRow& row : table.rows) {
            if (row.varied_value != value) continue;
            series.points.emplace_back(row.p_c, figure == "rch" ? row.rch : row.ret);
        }
        result.push_back(std::move(series));
    }
    return result;
}

std::string format_series(const PlotSeries& series) {
    std::string out = "# " + series.name + "\n";
    for (const auto& [p_c, value] : series.points) {
        out += short_number(p_c) + " " + short_number(value) + "\n";
    }
    return out;
}

}  // namespace floodsim
