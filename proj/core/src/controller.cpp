#include "swarmconn/controller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "swarmconn/errors.hpp"

namespace swarmconn {

double ShapeFn::eval(double s) const {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("ShapeFn: argument outside [0, 1]");
    switch (kind) {
        case Kind::Identity:
            return s;
        case Kind::Power:
            return std::pow(s, exponent);
    }
    return s;  // unreachable
}

double ShapeFn::inverse(double y) const {
    if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("ShapeFn: inverse argument outside [0, 1]");
    if (kind == Kind::Identity) return y;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (eval(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ShapeFn::lipschitz() const {
    switch (kind) {
        case Kind::Identity:
            return 1.0;
        case Kind::Power:
            return exponent;  // max slope on [0, 1] for exponent >= 1
    }
    return 1.0;  // unreachable
}

double DomainParams::containment_factor() const {
    if (!(field_gain > 1.0)) throw std::invalid_argument("DomainParams: field gain must exceed 1");
    if (shape.kind == ShapeFn::Kind::Identity) return field_gain;
    return 1.0 / shape.inverse(1.0 / field_gain);
}

double robustness_gain(const AgentNetwork& net) {
    const SpectralSummary spec = spectral_summary(laplacian(net));
    if (spec.lambda2 <= kConnectivityTol)
        throw DisconnectedError("robustness_gain: graph is not connected");
    const double n = static_cast<double>(net.n_agents());
    return 2.0 * std::sqrt(n * (n - 1.0)) * spec.incidence_norm / (spec.lambda2 * spec.lambda2);
}

double max_spread_limit(PotentialKind kind, double comm_radius, int n_edges, const PotentialSpec* table) {
    if (!(comm_radius > 0.0)) throw std::invalid_argument("max_spread_limit: radius must be positive");
    if (n_edges < 1) throw std::invalid_argument("max_spread_limit: need at least one edge");
    const double m = static_cast<double>(n_edges);
    switch (kind) {
        case PotentialKind::Linear:
            return comm_radius / std::sqrt(m);
        case PotentialKind::PiecewiseNonlinear:
            return comm_radius * std::cbrt(2.0 / (3.0 * m - 1.0));
        case PotentialKind::CustomTable: {
            if (table == nullptr || table->kind() != PotentialKind::CustomTable)
                throw std::invalid_argument("max_spread_limit: table kind needs the table");
            // m * P(limit) grows monotonically from 0 to m * P(R) >= P(R),
            // so the budget equation has a single root in [0, R].
            const double budget = table->integral(comm_radius);
            double lo = 0.0, hi = comm_radius;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                (m * table->integral(mid) < budget ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
    }
    return 0.0;  // unreachable
}

double input_bound_for(PotentialKind kind, double spread_limit, double gain, const PotentialSpec* table) {
    if (!(spread_limit > 0.0)) throw std::invalid_argument("input_bound_for: spread limit must be positive");
    if (!(gain > 0.0)) throw std::invalid_argument("input_bound_for: gain must be positive");
    switch (kind) {
        case PotentialKind::Linear:
        case PotentialKind::PiecewiseNonlinear:
            // Both built-ins have r(0) = r(limit) = 1 and s/r(s) minimized at
            // the spread limit.
            return spread_limit / gain;
        case PotentialKind::CustomTable: {
            if (table == nullptr || table->kind() != PotentialKind::CustomTable)
                throw std::invalid_argument("input_bound_for: table kind needs the table");
            const double s_max = table->domain_max();
            if (!(spread_limit <= s_max))
                throw OutOfDomainError("input_bound_for: spread limit beyond the tabulated range");
            double lowest = std::numeric_limits<double>::infinity();
            constexpr int kGrid = 10000;
            for (int k = 0; k < kGrid; ++k) {
                const double s = spread_limit + (s_max - spread_limit) * k / (kGrid - 1.0);
                lowest = std::min(lowest, s / table->weight(s));
            }
            const double r0 = table->weight_at_zero();
            return r0 * r0 * lowest / gain;
        }
    }
    return 0.0;  // unreachable
}

std::vector<double> connectivity_feedback(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot,
                                          int i) {
    std::vector<double> u = energy_gradient(pot, x, net, i);
    for (double& c : u) c = -c;
    return u;
}

std::vector<double> repulsive_field(const DomainParams& dom, double input_bound, std::span<const double> position) {
    const double r = norm(position);
    if (!(r < dom.radius)) throw OutsideDomainError("repulsive_field: position at or beyond the ball boundary");
    std::vector<double> g(position.size(), 0.0);
    const double depth = dom.layer_width + r - dom.radius;  // how far into the layer, in length units
    if (depth <= 0.0) return g;
    const double mag = dom.field_gain * input_bound * dom.shape.eval(depth / dom.layer_width);
    for (std::size_t l = 0; l < position.size(); ++l) g[l] = -mag * position[l] / r;
    return g;
}

std::vector<double> invariance_feedback(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot,
                                        const DomainParams& dom, double input_bound, int i) {
    std::vector<double> u = repulsive_field(dom, input_bound, x.agent(i));
    const std::vector<double> pull = connectivity_feedback(net, x, pot, i);
    for (int l = 0; l < x.dim; ++l) u[l] += pull[l];
    return u;
}

bool ValidationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ConstraintCheck& c) { return c.pass; });
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const ConstraintCheck& c : checks) {
        out << c.name;
        for (std::size_t pad = c.name.size(); pad < 22; ++pad) out << ' ';
        char buf[120];
        std::snprintf(buf, sizeof buf, "bound=%-14.6g actual=%-14.6g margin=%-14.6g %s", c.bound, c.actual,
                      c.margin, c.pass ? "PASS" : "FAIL");
        out << buf << '\n';
    }
    out << "overall: " << (all_pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

namespace {

// Rounding slack for the >=-type constraint checks, so a bound met with
// equality (the usual way parameters are chosen) is not failed over one ulp.
bool meets(double margin, double scale) { return margin >= -1e-12 * std::max(1.0, std::abs(scale)); }

}  // namespace

ValidationReport validate_params(const AgentNetwork& net, const PotentialSpec& pot, const ControllerParams& cp) {
    ValidationReport rep;

    {
        ConstraintCheck c;
        c.name = "radius-ordering";
        c.bound = cp.comm_radius;
        c.actual = cp.spread_limit;
        c.margin = std::min(cp.spread_limit, cp.comm_radius - cp.spread_limit);
        c.pass = cp.spread_limit > 0.0 && cp.spread_limit < cp.comm_radius;
        rep.checks.push_back(c);
    }

    {
        // Admissible input level: r(0)^2 / gain * min s/r(s), the minimum
        // taken over a 1e4-point grid from the spread limit to three radii
        // (the full table range for tabulated profiles). Beyond that point
        // s/r(s) is nondecreasing for the built-in kinds, so the grid minimum
        // is the true infimum.
        ConstraintCheck c;
        c.name = "input-bound";
        double lowest = std::numeric_limits<double>::infinity();
        if (cp.spread_limit > 0.0 && cp.gain > 0.0) {
            const double upper = pot.kind() == PotentialKind::CustomTable
                                     ? pot.domain_max()
                                     : 3.0 * cp.comm_radius;
            constexpr int kGrid = 10000;
            if (upper >= cp.spread_limit) {
                for (int k = 0; k < kGrid; ++k) {
                    const double s = cp.spread_limit + (upper - cp.spread_limit) * k / (kGrid - 1.0);
                    lowest = std::min(lowest, s / pot.weight(s));
                }
                const double r0 = pot.weight_at_zero();
                c.bound = r0 * r0 * lowest / cp.gain;
            }
        }
        c.actual = cp.input_bound;
        c.margin = c.bound - c.actual;
        c.pass = std::isfinite(c.bound) && meets(c.margin, c.bound);
        rep.checks.push_back(c);
    }

    {
        ConstraintCheck c;
        c.name = "energy-budget";
        if (cp.comm_radius <= pot.domain_max() && cp.spread_limit >= 0.0 && cp.spread_limit <= pot.domain_max()) {
            c.bound = pot.integral(cp.comm_radius);
            c.actual = static_cast<double>(net.n_edges()) * pot.integral(cp.spread_limit);
            c.margin = c.bound - c.actual;
            c.pass = meets(c.margin, c.bound);
        } else {
            // Tabulated profile does not even cover the radii involved.
            c.margin = -std::numeric_limits<double>::infinity();
            c.pass = false;
        }
        rep.checks.push_back(c);
    }

    if (pot.kind() == PotentialKind::PiecewiseNonlinear || cp.kind == PotentialKind::PiecewiseNonlinear) {
        // The saturating profile embeds the radii; a profile built with other
        // values would silently invalidate every check above.
        ConstraintCheck c;
        c.name = "potential-match";
        c.bound = 0.0;
        c.actual = pot.kind() == cp.kind
                       ? std::max(std::abs(pot.spread_limit() - cp.spread_limit),
                                  std::abs(pot.comm_radius() - cp.comm_radius))
                       : std::numeric_limits<double>::infinity();
        c.margin = -c.actual;
        c.pass = c.actual <= 1e-12 * std::max(1.0, cp.comm_radius);
        rep.checks.push_back(c);
    }

    return rep;
}

}  // namespace swarmconn
