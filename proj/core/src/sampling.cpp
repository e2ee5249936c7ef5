#include "swarmconn/sampling.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swarmconn {

AgentNetwork random_connected_network(SplitMix& rng, int n_agents, double extra_edge_prob) {
    if (n_agents <= 0) throw std::invalid_argument("random_connected_network: need at least one agent");
    if (n_agents == 1) return AgentNetwork(1, {});

    std::vector<int> label(n_agents);
    std::iota(label.begin(), label.end(), 0);
    for (int i = n_agents - 1; i > 0; --i) std::swap(label[i], label[rng.uniform_int(0, i)]);

    std::vector<std::pair<int, int>> edges;
    std::vector<char> present(static_cast<std::size_t>(n_agents) * n_agents, 0);
    const auto add = [&](int a, int b) {
        edges.emplace_back(a, b);
        present[static_cast<std::size_t>(a) * n_agents + b] = 1;
        present[static_cast<std::size_t>(b) * n_agents + a] = 1;
    };
    for (int v = 1; v < n_agents; ++v) add(label[rng.uniform_int(0, v - 1)], label[v]);
    for (int a = 0; a < n_agents; ++a)
        for (int b = a + 1; b < n_agents; ++b)
            if (!present[static_cast<std::size_t>(a) * n_agents + b] && rng.uniform() < extra_edge_prob) add(a, b);

    return AgentNetwork(n_agents, edges);
}

SwarmState random_state(SplitMix& rng, int n_agents, int dim, double half_width) {
    SwarmState x(n_agents, dim);
    for (double& c : x.coords) c = rng.uniform(-half_width, half_width);
    return x;
}

}  // namespace swarmconn
