#pragma once

#include "swarmconn/graph.hpp"
#include "swarmconn/rng.hpp"
#include "swarmconn/state.hpp"

namespace swarmconn {

/// Connected graph on n_agents vertices: a uniformly relabeled random
/// attachment tree plus independent extra edges.
AgentNetwork random_connected_network(SplitMix& rng, int n_agents, double extra_edge_prob = 0.3);

/// Positions uniform in the cube [-half_width, half_width]^dim.
SwarmState random_state(SplitMix& rng, int n_agents, int dim, double half_width);

}  // namespace swarmconn
