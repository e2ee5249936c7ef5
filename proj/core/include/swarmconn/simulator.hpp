#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swarmconn/controller.hpp"
#include "swarmconn/disturbance.hpp"
#include "swarmconn/graph.hpp"
#include "swarmconn/potential.hpp"
#include "swarmconn/state.hpp"

namespace swarmconn {

/// Everything one closed-loop run needs. Hard load-time invariants (checked
/// by run and reported by validate_config): the initial spread respects the
/// controller's limit, initial positions sit inside the shrunken ball when a
/// domain is present, and dt respects the speed-bound rule.
struct SimConfig {
    AgentNetwork net;
    PotentialSpec pot;
    ControllerParams ctrl;
    std::optional<DomainParams> domain;
    DisturbanceSpec disturbance;
    SwarmState initial;
    double t_end = 0.0;
    double dt = 0.0;
    std::uint64_t seed = 0;
};

/// Conservative per-agent speed cap: worst feedback pull from max_degree
/// neighbors at saturated weight and full radius, plus the disturbance, plus
/// the boundary field when a domain is present.
double speed_bound(const SimConfig& cfg);

/// Largest admissible step: 0.01 * comm_radius / speed_bound
/// (+inf when the speed bound is zero).
double max_stable_dt(const SimConfig& cfg);

/// Full report on a config: controller parameter constraints plus the
/// structural run invariants (connectivity of the graph, initial spread,
/// domain containment, disturbance cap, step size).
ValidationReport validate_config(const SimConfig& cfg);

struct TraceRow {
    double t = 0.0;
    std::vector<double> coords;        // agent-major positions
    double energy = 0.0;               // total edge potential
    double max_edge = 0.0;             // largest edge length
    std::vector<double> layer_depths;  // per-agent penetration into the boundary layer
    double max_layer_depth = 0.0;
    bool connected = true;  // max edge length within the communication radius
    bool inside = true;     // every agent strictly inside the ball (vacuous without a domain)
};

struct SimTrace {
    int n_agents = 0;
    int dim = 0;
    std::vector<TraceRow> rows;
    bool violation = false;
    std::string violation_kind;  // "connectivity" or "invariance" when violation is set

    /// CSV with header t,x_i_l...,V,dx_inf,m_i...,m,connected,invariant and
    /// floats at 17 significant digits.
    void write_csv(std::ostream& out) const;
};

/// One classical RK4 step of the closed loop; disturbance sampled at stage
/// times. Throws NumericalBlowupError past 1e12 on any coordinate and
/// OutsideDomainError when a domain is present and an agent starts the step
/// at or beyond the boundary.
SwarmState step(const SimConfig& cfg, const SwarmState& x, double t, double dt);

/// Fixed-step rollout sampling a row every dt from 0 to t_end
/// (floor(t_end/dt)+1 rows), halting early with a flagged row on a
/// connectivity or invariance violation. Throws ConfigInvalidError when a
/// hard invariant fails at load.
SimTrace run(const SimConfig& cfg);

}  // namespace swarmconn
