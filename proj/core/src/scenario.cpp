#include "swarmconn/scenario.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swarmconn/controller.hpp"
#include "swarmconn/errors.hpp"

namespace swarmconn {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_whitespace(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& raw, int line, const std::string& key) {
    const std::string v = trim(raw);
    if (v.empty()) fail(line, "empty value for '" + key + "'");
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x))
        fail(line, "'" + key + "' is not a finite number: '" + v + "'");
    return x;
}

long parse_long(const std::string& raw, int line, const std::string& key) {
    const std::string v = trim(raw);
    if (v.empty()) fail(line, "empty value for '" + key + "'");
    errno = 0;
    char* end = nullptr;
    const long x = std::strtol(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE) fail(line, "'" + key + "' is not an integer: '" + v + "'");
    return x;
}

std::uint64_t parse_seed(const std::string& raw, int line) {
    const std::string v = trim(raw);
    if (v.empty() || v[0] == '-') fail(line, "'seed' must be a nonnegative integer: '" + v + "'");
    errno = 0;
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE) fail(line, "'seed' is not an integer: '" + v + "'");
    return static_cast<std::uint64_t>(x);
}

bool is_auto(const std::string& v) { return trim(v) == "auto"; }

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

struct RawSection {
    int line = 0;
    std::map<std::string, Entry> entries;
};

/// Typed access to one section; tracks which keys were consumed so finish()
/// can flag the rest as unknown.
class SectionView {
public:
    SectionView(std::string name, RawSection* raw) : name_(std::move(name)), raw_(raw) {}

    bool present() const { return raw_ != nullptr; }
    int line() const { return raw_ ? raw_->line : 1; }
    int last_line() const { return last_line_; }

    std::optional<std::string> get(const std::string& key) {
        if (!raw_) return std::nullopt;
        auto it = raw_->entries.find(key);
        if (it == raw_->entries.end()) return std::nullopt;
        it->second.used = true;
        last_line_ = it->second.line;
        return it->second.value;
    }

    std::string require(const std::string& key) {
        auto v = get(key);
        if (!v) fail(line(), "[" + name_ + "] is missing required key '" + key + "'");
        return *v;
    }

    void finish() {
        if (!raw_) return;
        for (const auto& [key, e] : raw_->entries)
            if (!e.used) fail(e.line, "unknown key '" + key + "' in [" + name_ + "]");
    }

private:
    std::string name_;
    RawSection* raw_;
    int last_line_ = 1;
};

const char* const kSectionNames[] = {"graph", "potential", "controller", "domain", "disturbance", "sim"};

std::map<std::string, RawSection> split_sections(const std::string& text) {
    std::map<std::string, RawSection> sections;
    std::istringstream in(text);
    std::string line;
    std::string current;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') fail(no, "malformed section header: '" + t + "'");
            const std::string name = trim(t.substr(1, t.size() - 2));
            bool known = false;
            for (const char* k : kSectionNames) known = known || name == k;
            if (!known) fail(no, "unknown section [" + name + "]");
            if (sections.count(name)) fail(no, "duplicate section [" + name + "]");
            sections[name].line = no;
            current = name;
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail(no, "expected 'key = value': '" + t + "'");
        if (current.empty()) fail(no, "key outside any section: '" + t + "'");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) fail(no, "empty key");
        auto& sec = sections[current];
        if (sec.entries.count(key)) fail(no, "duplicate key '" + key + "' in [" + current + "]");
        sec.entries[key] = Entry{trim(t.substr(eq + 1)), no, false};
    }
    return sections;
}

PotentialKind parse_potential_kind(const std::string& v, int line) {
    if (v == "linear") return PotentialKind::Linear;
    if (v == "piecewise_nl") return PotentialKind::PiecewiseNonlinear;
    if (v == "custom_table") return PotentialKind::CustomTable;
    fail(line, "unknown potential kind '" + v + "' (expected linear, piecewise_nl, or custom_table)");
}

DisturbanceKind parse_disturbance_kind(const std::string& v, int line) {
    if (v == "zero") return DisturbanceKind::Zero;
    if (v == "constant") return DisturbanceKind::Constant;
    if (v == "sinusoid") return DisturbanceKind::Sinusoid;
    if (v == "seeded_random") return DisturbanceKind::SeededRandom;
    if (v == "adversarial_ascent") return DisturbanceKind::AdversarialAscent;
    fail(line, "unknown disturbance kind '" + v +
                   "' (expected zero, constant, sinusoid, seeded_random, or adversarial_ascent)");
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* potential_kind_name(PotentialKind k) {
    switch (k) {
        case PotentialKind::Linear: return "linear";
        case PotentialKind::PiecewiseNonlinear: return "piecewise_nl";
        case PotentialKind::CustomTable: return "custom_table";
    }
    return "linear";
}

const char* disturbance_kind_name(DisturbanceKind k) {
    switch (k) {
        case DisturbanceKind::Zero: return "zero";
        case DisturbanceKind::Constant: return "constant";
        case DisturbanceKind::Sinusoid: return "sinusoid";
        case DisturbanceKind::SeededRandom: return "seeded_random";
        case DisturbanceKind::AdversarialAscent: return "adversarial_ascent";
    }
    return "zero";
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text, const std::filesystem::path& base_dir) {
    auto raw = split_sections(text);
    for (const char* name : {"graph", "potential", "controller", "sim"})
        if (!raw.count(name)) throw ConfigError(std::string("missing required section [") + name + "]");
    auto view = [&raw](const char* name) {
        auto it = raw.find(name);
        return SectionView(name, it == raw.end() ? nullptr : &it->second);
    };

    // [graph]
    SectionView graph = view("graph");
    const long agents_l = parse_long(graph.require("agents"), graph.last_line(), "agents");
    if (agents_l < 1 || agents_l > 100000) fail(graph.last_line(), "'agents' must be in 1..100000");
    const int agents = static_cast<int>(agents_l);
    std::vector<std::pair<int, int>> edge_pairs;
    const std::string edges_raw = graph.require("edges");
    const int edges_line = graph.last_line();
    if (!trim(edges_raw).empty()) {
        for (const std::string& tok0 : split(edges_raw, ',')) {
            const std::string tok = trim(tok0);
            const auto dash = tok.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
                fail(edges_line, "edge must look like 'a-b' with 1-based endpoints: '" + tok + "'");
            const long a = parse_long(tok.substr(0, dash), edges_line, "edges");
            const long b = parse_long(tok.substr(dash + 1), edges_line, "edges");
            if (a < 1 || a > agents || b < 1 || b > agents)
                fail(edges_line, "edge endpoint outside 1.." + std::to_string(agents) + ": '" + tok + "'");
            edge_pairs.emplace_back(static_cast<int>(a) - 1, static_cast<int>(b) - 1);
        }
    }
    graph.finish();
    std::optional<AgentNetwork> net;
    try {
        net.emplace(agents, edge_pairs);
    } catch (const std::exception& e) {
        fail(edges_line, e.what());
    }

    // [potential]; a tabulated profile loads now, the built-in kinds wait for
    // the resolved controller numbers.
    SectionView pot_sec = view("potential");
    const std::string kind_raw = pot_sec.require("kind");
    const int kind_line = pot_sec.last_line();
    const PotentialKind kind = parse_potential_kind(kind_raw, kind_line);
    std::optional<PotentialSpec> pot;
    std::string table_path;
    if (kind == PotentialKind::CustomTable) {
        const std::string given = pot_sec.require("table");
        const int table_line = pot_sec.last_line();
        std::filesystem::path p(given);
        if (p.is_relative()) p = base_dir / p;
        table_path = std::filesystem::absolute(p).lexically_normal().string();
        try {
            pot = PotentialSpec::custom_table_from_csv(table_path);
        } catch (const std::exception& e) {
            fail(table_line, e.what());
        }
    } else if (pot_sec.get("table")) {
        fail(pot_sec.last_line(), "'table' only applies to kind custom_table");
    }
    pot_sec.finish();

    // [controller]; auto values resolve in dependency order: spread limit,
    // then gain, then input bound.
    SectionView ctrl_sec = view("controller");
    const double comm_radius = parse_double(ctrl_sec.require("comm_radius"), ctrl_sec.last_line(), "comm_radius");
    if (!(comm_radius > 0.0)) fail(ctrl_sec.last_line(), "'comm_radius' must be positive");

    std::string sl_raw = "auto";
    int sl_line = ctrl_sec.line();
    if (auto v = ctrl_sec.get("spread_limit")) {
        sl_raw = *v;
        sl_line = ctrl_sec.last_line();
    }
    std::string gain_raw = "auto";
    int gain_line = ctrl_sec.line();
    if (auto v = ctrl_sec.get("gain")) {
        gain_raw = *v;
        gain_line = ctrl_sec.last_line();
    }
    std::string ib_raw = "auto";
    int ib_line = ctrl_sec.line();
    if (auto v = ctrl_sec.get("input_bound")) {
        ib_raw = *v;
        ib_line = ctrl_sec.last_line();
    }
    ctrl_sec.finish();

    const PotentialSpec* table_ptr = kind == PotentialKind::CustomTable ? &*pot : nullptr;
    double spread_limit = 0.0;
    if (is_auto(sl_raw)) {
        try {
            spread_limit = max_spread_limit(kind, comm_radius, net->n_edges(), table_ptr);
        } catch (const std::exception& e) {
            fail(sl_line, std::string("spread_limit = auto: ") + e.what());
        }
    } else {
        spread_limit = parse_double(sl_raw, sl_line, "spread_limit");
        if (!(spread_limit > 0.0)) fail(sl_line, "'spread_limit' must be positive");
    }

    double gain = 0.0;
    if (is_auto(gain_raw)) {
        try {
            gain = robustness_gain(*net);
        } catch (const std::exception& e) {
            fail(gain_line, std::string("gain = auto: ") + e.what());
        }
    } else {
        gain = parse_double(gain_raw, gain_line, "gain");
        if (!(gain > 0.0)) fail(gain_line, "'gain' must be positive");
    }

    double input_bound = 0.0;
    if (is_auto(ib_raw)) {
        try {
            input_bound = input_bound_for(kind, spread_limit, gain, table_ptr);
        } catch (const std::exception& e) {
            fail(ib_line, std::string("input_bound = auto: ") + e.what());
        }
    } else {
        input_bound = parse_double(ib_raw, ib_line, "input_bound");
        if (input_bound < 0.0) fail(ib_line, "'input_bound' must be nonnegative");
    }

    if (kind == PotentialKind::Linear) {
        pot = PotentialSpec::linear();
    } else if (kind == PotentialKind::PiecewiseNonlinear) {
        try {
            pot = PotentialSpec::piecewise_nonlinear(spread_limit, comm_radius);
        } catch (const std::exception& e) {
            fail(sl_line, e.what());
        }
    }

    // [domain] (optional)
    std::optional<DomainParams> domain;
    if (raw.count("domain")) {
        SectionView dom_sec = view("domain");
        DomainParams dp;
        dp.radius = parse_double(dom_sec.require("radius"), dom_sec.last_line(), "radius");
        if (!(dp.radius > 0.0)) fail(dom_sec.last_line(), "'radius' must be positive");
        dp.layer_width = parse_double(dom_sec.require("layer_width"), dom_sec.last_line(), "layer_width");
        if (!(dp.layer_width > 0.0)) fail(dom_sec.last_line(), "'layer_width' must be positive");
        if (auto v = dom_sec.get("field_gain")) dp.field_gain = parse_double(*v, dom_sec.last_line(), "field_gain");
        std::string shape = "identity";
        if (auto v = dom_sec.get("shape")) shape = trim(*v);
        if (shape == "identity") {
            dp.shape.kind = ShapeFn::Kind::Identity;
            if (dom_sec.get("shape_exponent"))
                fail(dom_sec.last_line(), "'shape_exponent' only applies to shape power");
        } else if (shape == "power") {
            dp.shape.kind = ShapeFn::Kind::Power;
            dp.shape.exponent = parse_double(dom_sec.require("shape_exponent"), dom_sec.last_line(), "shape_exponent");
            if (!(dp.shape.exponent >= 1.0)) fail(dom_sec.last_line(), "'shape_exponent' must be at least 1");
        } else {
            fail(dom_sec.last_line(), "unknown shape '" + shape + "' (expected identity or power)");
        }
        dom_sec.finish();
        domain = dp;
    }

    // [disturbance] (optional; defaults to zero)
    DisturbanceSpec dist;
    if (raw.count("disturbance")) {
        SectionView dist_sec = view("disturbance");
        dist.kind = parse_disturbance_kind(trim(dist_sec.require("kind")), dist_sec.last_line());
        std::string mag_raw = "auto";
        int mag_line = dist_sec.line();
        if (auto v = dist_sec.get("magnitude")) {
            mag_raw = *v;
            mag_line = dist_sec.last_line();
        }
        if (is_auto(mag_raw)) {
            dist.magnitude = dist.kind == DisturbanceKind::Zero ? 0.0 : input_bound;
        } else {
            dist.magnitude = parse_double(mag_raw, mag_line, "magnitude");
            if (dist.magnitude < 0.0) fail(mag_line, "'magnitude' must be nonnegative");
            if (dist.kind == DisturbanceKind::Zero && dist.magnitude != 0.0)
                fail(mag_line, "kind zero requires magnitude 0");
        }
        if (auto v = dist_sec.get("frequency")) {
            if (dist.kind != DisturbanceKind::Sinusoid)
                fail(dist_sec.last_line(), "'frequency' only applies to kind sinusoid");
            dist.frequency = parse_double(*v, dist_sec.last_line(), "frequency");
            if (!(dist.frequency > 0.0)) fail(dist_sec.last_line(), "'frequency' must be positive");
        }
        if (auto v = dist_sec.get("hold")) {
            if (dist.kind != DisturbanceKind::SeededRandom)
                fail(dist_sec.last_line(), "'hold' only applies to kind seeded_random");
            dist.hold = parse_double(*v, dist_sec.last_line(), "hold");
            if (!(dist.hold > 0.0)) fail(dist_sec.last_line(), "'hold' must be positive");
        }
        dist_sec.finish();
    }

    // [sim]
    SectionView sim_sec = view("sim");
    const double t_end = parse_double(sim_sec.require("t_end"), sim_sec.last_line(), "t_end");
    if (t_end < 0.0) fail(sim_sec.last_line(), "'t_end' must be nonnegative");
    std::uint64_t seed = 0;
    if (auto v = sim_sec.get("seed")) seed = parse_seed(*v, sim_sec.last_line());

    const std::string initial_raw = sim_sec.require("initial");
    const int initial_line = sim_sec.last_line();
    std::vector<std::vector<double>> rows;
    for (const std::string& row_raw : split(initial_raw, ';')) {
        const std::string row_s = trim(row_raw);
        if (row_s.empty()) fail(initial_line, "empty coordinate row in 'initial'");
        std::vector<double> row;
        for (const std::string& tok : split_whitespace(row_s)) row.push_back(parse_double(tok, initial_line, "initial"));
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) != agents)
        fail(initial_line, "'initial' has " + std::to_string(rows.size()) + " rows for " + std::to_string(agents) +
                               " agents");
    for (const auto& row : rows)
        if (row.size() != rows.front().size()) fail(initial_line, "'initial' rows have unequal dimension");

    std::string output_path;
    if (auto v = sim_sec.get("output")) output_path = trim(*v);

    std::string dt_raw = "auto";
    int dt_line = sim_sec.line();
    if (auto v = sim_sec.get("dt")) {
        dt_raw = *v;
        dt_line = sim_sec.last_line();
    }
    sim_sec.finish();

    SimConfig sc{std::move(*net),
                 std::move(*pot),
                 ControllerParams{comm_radius, spread_limit, gain, input_bound, kind},
                 domain,
                 dist,
                 SwarmState::from_rows(rows),
                 t_end,
                 0.0,
                 seed};
    if (is_auto(dt_raw)) {
        const double cap = max_stable_dt(sc);
        if (!std::isfinite(cap))
            fail(dt_line, "dt = auto is undefined here (zero speed bound); set dt explicitly");
        sc.dt = cap;
    } else {
        sc.dt = parse_double(dt_raw, dt_line, "dt");
        if (!(sc.dt > 0.0)) fail(dt_line, "'dt' must be positive");
    }

    return ScenarioConfig{std::move(sc), std::move(output_path), std::move(table_path)};
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), std::filesystem::path(path).parent_path());
}

std::string normalize_scenario(const ScenarioConfig& cfg) {
    const SimConfig& s = cfg.sim;
    std::ostringstream out;
    out << "[graph]\n";
    out << "agents = " << s.net.n_agents() << "\n";
    out << "edges =";
    bool first = true;
    for (const Edge& e : s.net.edges()) {
        out << (first ? " " : ", ") << e.tail + 1 << "-" << e.head + 1;
        first = false;
    }
    out << "\n";

    out << "\n[potential]\n";
    out << "kind = " << potential_kind_name(s.pot.kind()) << "\n";
    if (s.pot.kind() == PotentialKind::CustomTable) out << "table = " << cfg.table_path << "\n";

    out << "\n[controller]\n";
    out << "comm_radius = " << fmt(s.ctrl.comm_radius) << "\n";
    out << "spread_limit = " << fmt(s.ctrl.spread_limit) << "\n";
    out << "gain = " << fmt(s.ctrl.gain) << "\n";
    out << "input_bound = " << fmt(s.ctrl.input_bound) << "\n";

    if (s.domain) {
        out << "\n[domain]\n";
        out << "radius = " << fmt(s.domain->radius) << "\n";
        out << "layer_width = " << fmt(s.domain->layer_width) << "\n";
        out << "field_gain = " << fmt(s.domain->field_gain) << "\n";
        if (s.domain->shape.kind == ShapeFn::Kind::Identity) {
            out << "shape = identity\n";
        } else {
            out << "shape = power\n";
            out << "shape_exponent = " << fmt(s.domain->shape.exponent) << "\n";
        }
    }

    out << "\n[disturbance]\n";
    out << "kind = " << disturbance_kind_name(s.disturbance.kind) << "\n";
    out << "magnitude = " << fmt(s.disturbance.magnitude) << "\n";
    if (s.disturbance.kind == DisturbanceKind::Sinusoid) out << "frequency = " << fmt(s.disturbance.frequency) << "\n";
    if (s.disturbance.kind == DisturbanceKind::SeededRandom) out << "hold = " << fmt(s.disturbance.hold) << "\n";

    out << "\n[sim]\n";
    out << "t_end = " << fmt(s.t_end) << "\n";
    out << "dt = " << fmt(s.dt) << "\n";
    out << "seed = " << s.seed << "\n";
    out << "initial = ";
    for (int i = 0; i < s.initial.n_agents; ++i) {
        if (i) out << "; ";
        for (int l = 0; l < s.initial.dim; ++l) {
            if (l) out << " ";
            out << fmt(s.initial.coords[static_cast<std::size_t>(i) * s.initial.dim + l]);
        }
    }
    out << "\n";
    if (!cfg.output_path.empty()) out << "output = " << cfg.output_path << "\n";
    return out.str();
}

}  // namespace swarmconn
