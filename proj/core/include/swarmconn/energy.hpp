#pragma once

#include <span>
#include <vector>

#include "swarmconn/graph.hpp"
#include "swarmconn/potential.hpp"
#include "swarmconn/state.hpp"

namespace swarmconn {

/// Laplacian weighted by the edge profile evaluated at current edge lengths;
/// equal to D * diag(w) * D^T with w_l = r(|x_head - x_tail|) for edge l.
Matrix weighted_laplacian(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot);

/// Largest edge weight in the current state; zero for an edgeless graph.
double max_edge_weight(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot);

/// Potential P accumulated along the edge between agents i and j.
/// Throws NotNeighborsError when the pair shares no edge.
double edge_potential(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net, int i, int j);

/// Sum of edge potentials over the whole edge set.
double total_energy(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net);

/// Gradient of the total energy with respect to agent i's position:
/// sum over neighbors j of r(|x_i - x_j|) (x_i - x_j).
std::vector<double> energy_gradient(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net, int i);

/// Gradients of every agent, stacked agent-major like SwarmState::coords.
std::vector<double> energy_gradient_stack(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net);

/// Instantaneous time derivative of the total energy when the agents move
/// with the given stacked velocities.
double energy_rate(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net,
                   std::span<const double> velocities);

}  // namespace swarmconn
