#pragma once

#include <span>
#include <string>
#include <vector>

#include "swarmconn/energy.hpp"
#include "swarmconn/graph.hpp"
#include "swarmconn/potential.hpp"
#include "swarmconn/state.hpp"

namespace swarmconn {

/// Ramp profile on [0, 1] shaping how the boundary field switches on across
/// the layer: zero at the inner rim, full strength at the boundary.
struct ShapeFn {
    enum class Kind { Identity, Power };
    Kind kind = Kind::Identity;
    double exponent = 1.0;  // Power only; >= 1 keeps the profile Lipschitz

    double eval(double s) const;
    /// Inverse on [0, 1]; bisection to 1e-12 for non-identity profiles.
    double inverse(double y) const;
    double lipschitz() const;
};

/// Working ball of the invariance controller plus the boundary-layer field
/// parameters.
struct DomainParams {
    double radius = 0.0;       // agents must stay strictly inside this ball
    double layer_width = 0.0;  // width of the band where the field acts
    double field_gain = 2.0;   // boundary field strength, multiples of the input bound; > 1
    ShapeFn shape;

    /// Factor q with shape(1/q) = 1/field_gain; trajectories started inside
    /// the ball never penetrate the layer deeper than layer_width / q.
    double containment_factor() const;
};

struct ControllerParams {
    double comm_radius = 0.0;   // an edge is considered lost beyond this length
    double spread_limit = 0.0;  // admissible initial edge length
    double gain = 0.0;          // graph constant converting spread into an input bound
    double input_bound = 0.0;   // admissible disturbance magnitude per agent
    PotentialKind kind = PotentialKind::Linear;
};

/// Graph constant 2 sqrt(N(N-1)) |D^T| / lambda2^2.
/// Throws DisconnectedError when the graph's algebraic connectivity is not
/// safely positive.
double robustness_gain(const AgentNetwork& net);

/// Largest admissible spread limit for a potential kind, communication
/// radius, and edge count: the value at which the worst-case initial energy
/// M * P(limit) exactly exhausts the budget P(comm_radius). Closed forms for
/// the built-in kinds, bisection to 1e-10 for tables (which must then cover
/// [0, comm_radius]).
double max_spread_limit(PotentialKind kind, double comm_radius, int n_edges, const PotentialSpec* table = nullptr);

/// Admissible disturbance magnitude for the given spread limit and gain.
/// Built-in kinds reduce to spread_limit / gain; tables use the general
/// formula r(0)^2 / gain * min s/r(s), minimized over a 1e4-point grid on
/// [spread_limit, S_max].
double input_bound_for(PotentialKind kind, double spread_limit, double gain, const PotentialSpec* table = nullptr);

/// Nominal control term for agent i: minus the energy gradient.
std::vector<double> connectivity_feedback(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot,
                                          int i);

/// Inward radial field acting inside the boundary layer; zero deeper inside.
/// Throws OutsideDomainError when the position is at or beyond the ball
/// boundary.
std::vector<double> repulsive_field(const DomainParams& dom, double input_bound, std::span<const double> position);

/// Connectivity feedback plus the boundary field.
std::vector<double> invariance_feedback(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot,
                                        const DomainParams& dom, double input_bound, int i);

struct ConstraintCheck {
    std::string name;
    double bound = 0.0;
    double actual = 0.0;
    double margin = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<ConstraintCheck> checks;
    bool all_pass() const;
    std::string to_text() const;
};

/// Checks the three admissibility constraints tying the controller parameters
/// to the potential and the graph: radius ordering, the input bound against
/// the grid-evaluated admissible disturbance level, and the energy budget.
ValidationReport validate_params(const AgentNetwork& net, const PotentialSpec& pot, const ControllerParams& cp);

}  // namespace swarmconn
