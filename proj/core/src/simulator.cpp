#include "swarmconn/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "swarmconn/energy.hpp"
#include "swarmconn/errors.hpp"

namespace swarmconn {

double speed_bound(const SimConfig& cfg) {
    const double r_cap = std::min(cfg.ctrl.comm_radius, cfg.pot.domain_max());
    const double r_max = cfg.pot.weight(r_cap);
    double s = cfg.net.max_degree() * r_max * cfg.ctrl.comm_radius + cfg.disturbance.magnitude;
    if (cfg.domain) s += cfg.domain->field_gain * cfg.ctrl.input_bound;
    return s;
}

double max_stable_dt(const SimConfig& cfg) {
    const double s = speed_bound(cfg);
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    return 0.01 * cfg.ctrl.comm_radius / s;
}

ValidationReport validate_config(const SimConfig& cfg) {
    ValidationReport rep = validate_params(cfg.net, cfg.pot, cfg.ctrl);

    {
        ConstraintCheck c;
        c.name = "graph-connected";
        c.bound = 0.0;
        c.actual = cfg.net.connected() ? 1.0 : 0.0;
        c.margin = c.actual > 0.0 ? 1.0 : -1.0;
        c.pass = c.actual > 0.0;
        rep.checks.push_back(c);
    }

    {
        ConstraintCheck c;
        c.name = "initial-spread";
        c.bound = cfg.ctrl.spread_limit;
        c.actual = max_edge_distance(cfg.initial, cfg.net);
        c.margin = c.bound - c.actual;
        c.pass = c.margin >= -1e-12 * std::max(1.0, c.bound);
        rep.checks.push_back(c);
    }

    {
        ConstraintCheck c;
        c.name = "disturbance-cap";
        c.bound = cfg.ctrl.input_bound;
        c.actual = cfg.disturbance.magnitude;
        c.margin = c.bound - c.actual;
        c.pass = c.actual >= 0.0 && c.margin >= -1e-12 * std::max(1.0, c.bound);
        rep.checks.push_back(c);
    }

    {
        ConstraintCheck c;
        c.name = "step-size";
        c.bound = max_stable_dt(cfg);
        c.actual = cfg.dt;
        c.margin = c.bound - c.actual;
        c.pass = cfg.dt > 0.0 && (std::isinf(c.bound) || c.margin >= -1e-12 * std::max(1.0, c.bound));
        rep.checks.push_back(c);
    }

    if (cfg.domain) {
        const DomainParams& dom = *cfg.domain;
        {
            ConstraintCheck c;
            c.name = "layer-width";
            c.bound = dom.radius;
            c.actual = dom.layer_width;
            c.margin = std::min(dom.layer_width, dom.radius - dom.layer_width);
            c.pass = dom.layer_width > 0.0 && dom.layer_width < dom.radius;
            rep.checks.push_back(c);
        }
        {
            ConstraintCheck c;
            c.name = "field-gain";
            c.bound = 1.0;  // strict lower bound
            c.actual = dom.field_gain;
            c.margin = dom.field_gain - 1.0;
            c.pass = c.margin > 0.0;
            rep.checks.push_back(c);
        }
        {
            ConstraintCheck c;
            c.name = "initial-domain";
            c.bound = dom.radius - dom.layer_width;
            double worst = 0.0;
            for (int i = 0; i < cfg.initial.n_agents; ++i) worst = std::max(worst, norm(cfg.initial.agent(i)));
            c.actual = worst;
            c.margin = c.bound - c.actual;
            c.pass = c.margin >= -1e-12 * std::max(1.0, c.bound);
            rep.checks.push_back(c);
        }
    }

    return rep;
}

namespace {

constexpr double kBlowupLimit = 1e12;

/// Boundary field extended continuously past the ball boundary at saturated
/// strength. Only integrator stage states may live out there; rows landing
/// outside are flagged as violations before the next step is taken.
void clamped_field(const DomainParams& dom, double input_bound, std::span<const double> position,
                   std::span<double> out) {
    const double r = norm(position);
    const double depth = dom.layer_width + r - dom.radius;
    if (depth <= 0.0 || r == 0.0) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    const double level = std::min(1.0, depth / dom.layer_width);
    const double mag = dom.field_gain * input_bound * dom.shape.eval(level);
    for (std::size_t l = 0; l < position.size(); ++l) out[l] = -mag * position[l] / r;
}

class Engine {
public:
    explicit Engine(const SimConfig& cfg)
        : cfg_(cfg), model_(cfg.disturbance, cfg.net, cfg.pot, cfg.initial.dim, cfg.seed) {}

    // Closed-loop velocities, stacked agent-major.
    void rhs(double t, const SwarmState& x, std::vector<double>& out) const {
        out = energy_gradient_stack(cfg_.pot, x, cfg_.net);
        for (double& c : out) c = -c;
        if (cfg_.domain) {
            std::vector<double> g(x.dim);
            for (int i = 0; i < x.n_agents; ++i) {
                clamped_field(*cfg_.domain, cfg_.ctrl.input_bound, x.agent(i), g);
                for (int l = 0; l < x.dim; ++l) out[static_cast<std::size_t>(i) * x.dim + l] += g[l];
            }
        }
        model_.eval(t, x, noise_);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += noise_[k];
    }

    SwarmState rk4(const SwarmState& x, double t, double dt) const {
        const std::size_t m = x.coords.size();
        rhs(t, x, k1_);
        SwarmState stage = x;
        for (std::size_t k = 0; k < m; ++k) stage.coords[k] = x.coords[k] + 0.5 * dt * k1_[k];
        rhs(t + 0.5 * dt, stage, k2_);
        for (std::size_t k = 0; k < m; ++k) stage.coords[k] = x.coords[k] + 0.5 * dt * k2_[k];
        rhs(t + 0.5 * dt, stage, k3_);
        for (std::size_t k = 0; k < m; ++k) stage.coords[k] = x.coords[k] + dt * k3_[k];
        rhs(t + dt, stage, k4_);
        SwarmState next = x;
        for (std::size_t k = 0; k < m; ++k)
            next.coords[k] = x.coords[k] + dt / 6.0 * (k1_[k] + 2.0 * k2_[k] + 2.0 * k3_[k] + k4_[k]);
        for (double c : next.coords)
            if (!std::isfinite(c) || std::abs(c) > kBlowupLimit)
                throw NumericalBlowupError("integration diverged: coordinate beyond 1e12");
        return next;
    }

private:
    const SimConfig& cfg_;
    DisturbanceModel model_;
    mutable std::vector<double> noise_, k1_, k2_, k3_, k4_;
};

TraceRow make_row(const SimConfig& cfg, const SwarmState& x, double t) {
    TraceRow row;
    row.t = t;
    row.coords = x.coords;
    row.energy = total_energy(cfg.pot, x, cfg.net);
    row.max_edge = max_edge_distance(x, cfg.net);
    row.connected = row.max_edge <= cfg.ctrl.comm_radius;
    row.layer_depths.assign(x.n_agents, 0.0);
    if (cfg.domain) {
        const DomainParams& dom = *cfg.domain;
        for (int i = 0; i < x.n_agents; ++i) {
            const double r = norm(x.agent(i));
            row.layer_depths[i] = std::max(0.0, dom.layer_width + r - dom.radius);
            row.max_layer_depth = std::max(row.max_layer_depth, row.layer_depths[i]);
            if (r >= dom.radius) row.inside = false;
        }
    }
    return row;
}

}  // namespace

SwarmState step(const SimConfig& cfg, const SwarmState& x, double t, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    if (cfg.domain)
        for (int i = 0; i < x.n_agents; ++i)
            if (!(norm(x.agent(i)) < cfg.domain->radius))
                throw OutsideDomainError("step: agent at or beyond the ball boundary");
    Engine engine(cfg);
    return engine.rk4(x, t, dt);
}

SimTrace run(const SimConfig& cfg) {
    if (!(cfg.t_end >= 0.0)) throw ConfigInvalidError("run: t_end must be nonnegative");
    if (!(cfg.dt > 0.0)) throw ConfigInvalidError("run: dt must be positive");
    const double dt_cap = max_stable_dt(cfg);
    if (!std::isinf(dt_cap) && cfg.dt > dt_cap * (1.0 + 1e-9))
        throw ConfigInvalidError("run: dt exceeds the speed-bound rule");
    const double spread = max_edge_distance(cfg.initial, cfg.net);
    if (spread > cfg.ctrl.spread_limit * (1.0 + 1e-12))
        throw ConfigInvalidError("run: initial spread exceeds the admissible limit");
    // A magnitude above the input bound is a soft failure (validate_config
    // flags it); negative-control runs rely on executing anyway.
    if (!(cfg.disturbance.magnitude >= 0.0) || !std::isfinite(cfg.disturbance.magnitude))
        throw ConfigInvalidError("run: disturbance magnitude must be finite and nonnegative");
    if (cfg.domain) {
        const double rim = cfg.domain->radius - cfg.domain->layer_width;
        for (int i = 0; i < cfg.initial.n_agents; ++i)
            if (norm(cfg.initial.agent(i)) > rim * (1.0 + 1e-12))
                throw ConfigInvalidError("run: initial position outside the shrunken ball");
    }
    for (double c : cfg.initial.coords)
        if (!std::isfinite(c)) throw ConfigInvalidError("run: non-finite initial position");

    SimTrace trace;
    trace.n_agents = cfg.initial.n_agents;
    trace.dim = cfg.initial.dim;

    Engine engine(cfg);
    // The formula floor(t_end/dt)+1 is meant over the reals; the tiny nudge
    // keeps exact multiples (50/0.1) from flooring one row short.
    const long n_steps = static_cast<long>(std::floor(cfg.t_end / cfg.dt + 1e-9));
    trace.rows.reserve(static_cast<std::size_t>(n_steps) + 1);

    SwarmState x = cfg.initial;
    for (long k = 0;; ++k) {
        const double t = k * cfg.dt;
        trace.rows.push_back(make_row(cfg, x, t));
        const TraceRow& row = trace.rows.back();
        if (!row.connected) {
            trace.violation = true;
            trace.violation_kind = "connectivity";
            break;
        }
        if (!row.inside) {
            trace.violation = true;
            trace.violation_kind = "invariance";
            break;
        }
        if (k >= n_steps) break;
        x = engine.rk4(x, t, cfg.dt);
    }
    return trace;
}

void SimTrace::write_csv(std::ostream& out) const {
    out << 't';
    for (int i = 1; i <= n_agents; ++i)
        for (int l = 1; l <= dim; ++l) out << ",x_" << i << '_' << l;
    out << ",V,dx_inf";
    for (int i = 1; i <= n_agents; ++i) out << ",m_" << i;
    out << ",m,connected,invariant\n";

    char buf[32];
    const auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << ',' << buf;
    };
    for (const TraceRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.17g", row.t);
        out << buf;
        for (double c : row.coords) put(c);
        put(row.energy);
        put(row.max_edge);
        for (double d : row.layer_depths) put(d);
        put(row.max_layer_depth);
        out << ',' << (row.connected ? 1 : 0) << ',' << (row.inside ? 1 : 0) << '\n';
    }
}

}  // namespace swarmconn
