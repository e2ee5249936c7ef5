#include "swarmconn/commands.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swarmconn/errors.hpp"
#include "swarmconn/scenario.hpp"
#include "swarmconn/simulator.hpp"

namespace swarmconn {

namespace {

std::optional<std::uint64_t> env_seed(std::ostream& out) {
    const char* v = std::getenv("SWARMCONN_SEED");
    if (!v || !*v) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (*end != '\0' || errno == ERANGE || v[0] == '-') {
        out << "warning: ignoring malformed SWARMCONN_SEED '" << v << "'\n";
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(x);
}

std::string fmt6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

int cmd_check(const std::string& scenario_path, bool dump_normalized, std::ostream& out) {
    try {
        const ScenarioConfig cfg = load_scenario(scenario_path);
        const ValidationReport report = validate_config(cfg.sim);
        out << report.to_text();
        if (dump_normalized) out << "\n" << normalize_scenario(cfg);
        return report.all_pass() ? 0 : 1;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_simulate(const std::string& scenario_path, const std::string& output_override, std::ostream& out) {
    try {
        ScenarioConfig cfg = load_scenario(scenario_path);
        if (const auto s = env_seed(out)) cfg.sim.seed = *s;

        const ValidationReport report = validate_config(cfg.sim);
        if (!report.all_pass()) {
            out << report.to_text();
            out << "warning: parameter constraints failed; running anyway\n";
        }

        const SimTrace trace = run(cfg.sim);

        const std::string dest = !output_override.empty() ? output_override
                                 : !cfg.output_path.empty() ? cfg.output_path
                                                            : std::string("trace.csv");
        std::ofstream csv(dest);
        if (!csv) {
            out << "error: cannot write " << dest << "\n";
            return 2;
        }
        trace.write_csv(csv);

        double peak_edge = 0.0;
        double peak_depth = 0.0;
        for (const TraceRow& row : trace.rows) {
            peak_edge = std::max(peak_edge, row.max_edge);
            peak_depth = std::max(peak_depth, row.max_layer_depth);
        }
        out << "wrote " << dest << " (" << trace.rows.size() << " rows)\n";
        out << "final energy = " << fmt6(trace.rows.back().energy) << "\n";
        out << "max edge distance = " << fmt6(peak_edge) << "\n";
        if (cfg.sim.domain) out << "max layer depth = " << fmt6(peak_depth) << "\n";
        if (trace.violation) {
            out << "violation: " << trace.violation_kind << " at t = " << fmt6(trace.rows.back().t) << "\n";
            return 1;
        }
        out << "violation: none\n";
        return 0;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const VerifyOptions& opts_in, const std::string& csv_path, std::ostream& out) {
    VerifyOptions opts = opts_in;
    if (const auto s = env_seed(out)) opts.seed = *s;
    if (opts.budget < 0) {
        out << "error: budget must be nonnegative\n";
        return 2;
    }
    if (opts.budget == 0) out << "warning: budget 0 makes every check vacuous\n";

    const std::vector<FactReport> reports = run_fact_checks(opts);
    bool all = true;
    for (const FactReport& r : reports) {
        out << r.to_text() << "\n";
        all = all && r.pass;
    }
    out << "overall: " << (all ? "PASS" : "FAIL") << "\n";

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) {
            out << "error: cannot write " << csv_path << "\n";
            return 2;
        }
        csv << "fact,samples,worst_margin,pass\n";
        for (const FactReport& r : reports) csv << r.csv_row() << "\n";
        out << "wrote " << csv_path << "\n";
    }
    return all ? 0 : 1;
}

int cmd_ratio(int m_max, const std::string& csv_path, std::ostream& out) {
    if (m_max < 1) {
        out << "error: edge count must be at least 1\n";
        return 2;
    }
    const auto table = spread_ratio_table(m_max);

    std::ofstream file;
    std::ostream* dest = &out;
    if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) {
            out << "error: cannot write " << csv_path << "\n";
            return 2;
        }
        dest = &file;
    }
    *dest << "M,ratio\n";
    for (const auto& [m, ratio] : table) *dest << m << "," << fmt17(ratio) << "\n";
    if (!csv_path.empty()) out << "wrote " << csv_path << " (" << table.size() << " rows)\n";

    const bool unit_at_one = table.front().second == 1.0;
    bool decreasing = true;
    for (std::size_t i = 1; i < table.size(); ++i)
        decreasing = decreasing && table[i].second < table[i - 1].second;
    out << "ratio(1) = 1: " << (unit_at_one ? "yes" : "no") << "\n";
    out << "strictly decreasing: " << (decreasing ? "yes" : "no") << "\n";
    return unit_at_one && decreasing ? 0 : 1;
}

}  // namespace swarmconn
