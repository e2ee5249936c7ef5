#include "swarmconn/energy.hpp"

#include <algorithm>
#include <cmath>

#include "swarmconn/errors.hpp"

namespace swarmconn {

Matrix weighted_laplacian(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot) {
    if (net.n_agents() != x.n_agents) throw DimensionMismatchError("weighted_laplacian: agent counts differ");
    Matrix lw(net.n_agents(), net.n_agents());
    for (const Edge& e : net.edges()) {
        const double w = pot.weight(x.distance(e.tail, e.head));
        lw(e.tail, e.tail) += w;
        lw(e.head, e.head) += w;
        lw(e.tail, e.head) -= w;
        lw(e.head, e.tail) -= w;
    }
    return lw;
}

double max_edge_weight(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot) {
    double m = 0.0;
    for (const Edge& e : net.edges()) m = std::max(m, pot.weight(x.distance(e.tail, e.head)));
    return m;
}

double edge_potential(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net, int i, int j) {
    if (!net.contains_edge(i, j)) throw NotNeighborsError("edge_potential: agents do not share an edge");
    return pot.integral(x.distance(i, j));
}

double total_energy(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net) {
    if (net.n_agents() != x.n_agents) throw DimensionMismatchError("total_energy: agent counts differ");
    double v = 0.0;
    for (const Edge& e : net.edges()) v += pot.integral(x.distance(e.tail, e.head));
    return v;
}

std::vector<double> energy_gradient(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net, int i) {
    if (net.n_agents() != x.n_agents) throw DimensionMismatchError("energy_gradient: agent counts differ");
    if (i < 0 || i >= x.n_agents) throw std::invalid_argument("energy_gradient: agent index out of range");
    std::vector<double> g(x.dim, 0.0);
    const auto xi = x.agent(i);
    for (int j : net.neighbors(i)) {
        const double w = pot.weight(x.distance(i, j));
        const auto xj = x.agent(j);
        for (int l = 0; l < x.dim; ++l) g[l] += w * (xi[l] - xj[l]);
    }
    return g;
}

std::vector<double> energy_gradient_stack(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net) {
    if (net.n_agents() != x.n_agents) throw DimensionMismatchError("energy_gradient_stack: agent counts differ");
    std::vector<double> g(x.coords.size(), 0.0);
    for (const Edge& e : net.edges()) {
        const double w = pot.weight(x.distance(e.tail, e.head));
        for (int l = 0; l < x.dim; ++l) {
            const double d = x.coords[static_cast<std::size_t>(e.head) * x.dim + l] -
                             x.coords[static_cast<std::size_t>(e.tail) * x.dim + l];
            g[static_cast<std::size_t>(e.head) * x.dim + l] += w * d;
            g[static_cast<std::size_t>(e.tail) * x.dim + l] -= w * d;
        }
    }
    return g;
}

double energy_rate(const PotentialSpec& pot, const SwarmState& x, const AgentNetwork& net,
                   std::span<const double> velocities) {
    const std::vector<double> g = energy_gradient_stack(pot, x, net);
    return dot(g, velocities);
}

}  // namespace swarmconn
