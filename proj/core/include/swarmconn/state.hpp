#pragma once

#include <span>
#include <vector>

#include "swarmconn/graph.hpp"

namespace swarmconn {

/// Positions of N agents in R^n, stored agent-major: coords[i*dim + l] is
/// coordinate l of agent i. The flat layout doubles as the stacked vector
/// the algebra below operates on.
struct SwarmState {
    int n_agents = 0;
    int dim = 0;
    std::vector<double> coords;

    SwarmState() = default;
    SwarmState(int n_agents_, int dim_);
    static SwarmState from_rows(const std::vector<std::vector<double>>& rows);

    std::span<const double> agent(int i) const;
    std::span<double> agent(int i);
    double distance(int i, int j) const;
};

/// Coordinate l of every agent, as a vector of length N.
std::vector<double> component(const SwarmState& x, int l);

/// Coordinate-wise mean over agents, length dim.
std::vector<double> coordinate_mean(const SwarmState& x);

/// Every agent placed at the coordinate-wise mean.
SwarmState mean_projection(const SwarmState& x);

/// Deviation from the mean projection; orthogonal to the consensus directions.
SwarmState perp_component(const SwarmState& x);

/// Euclidean norm of the full stacked vector in R^(N*dim).
double stacked_norm(const SwarmState& x);

/// Per-edge difference vectors (head minus tail), stacked edge-major:
/// entry [l*dim + c] is coordinate c of the difference along edge l.
std::vector<double> edge_differences(const SwarmState& x, const AgentNetwork& net);

/// Largest per-edge Euclidean distance; zero for an edgeless graph.
double max_edge_distance(const SwarmState& x, const AgentNetwork& net);

}  // namespace swarmconn
