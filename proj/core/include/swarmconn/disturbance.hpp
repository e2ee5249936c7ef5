#pragma once

#include <cstdint>
#include <vector>

#include "swarmconn/graph.hpp"
#include "swarmconn/potential.hpp"
#include "swarmconn/state.hpp"

namespace swarmconn {

enum class DisturbanceKind { Zero, Constant, Sinusoid, SeededRandom, AdversarialAscent };

/// Description of the per-agent disturbance signal. Magnitude is the per-agent
/// cap |v_i(t)|; a compliant scenario keeps it at or below the controller's
/// input bound.
struct DisturbanceSpec {
    DisturbanceKind kind = DisturbanceKind::Zero;
    double magnitude = 0.0;
    double frequency = 1.0;  // Sinusoid: cycles per time unit
    double hold = 0.1;       // SeededRandom: window length between redraws
};

/// Worst-case disturbance: each agent pushed along its own energy gradient at
/// full magnitude, zero where the gradient vanishes. Returned agent-major.
std::vector<double> adversarial_disturbance(const SwarmState& x, const AgentNetwork& net, const PotentialSpec& pot,
                                            double magnitude);

/// Realized disturbance signal. Every sample is a pure function of
/// (master seed, time, state), so integrator stage evaluations and repeated
/// runs see identical values.
class DisturbanceModel {
public:
    DisturbanceModel(const DisturbanceSpec& spec, const AgentNetwork& net, const PotentialSpec& pot, int dim,
                     std::uint64_t master_seed);

    /// Stacked agent-major signal at time t for the given state.
    void eval(double t, const SwarmState& x, std::vector<double>& out) const;
    std::vector<double> eval(double t, const SwarmState& x) const;

private:
    DisturbanceSpec spec_;
    const AgentNetwork* net_;
    const PotentialSpec* pot_;
    int dim_;
    std::uint64_t seed_;
    std::vector<std::vector<double>> directions_;  // Constant / Sinusoid
    std::vector<double> phases_;                   // Sinusoid
};

}  // namespace swarmconn
