#include "swarmconn/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swarmconn/errors.hpp"

namespace swarmconn {

SwarmState::SwarmState(int n_agents_, int dim_) : n_agents(n_agents_), dim(dim_) {
    if (n_agents <= 0 || dim <= 0) throw std::invalid_argument("SwarmState: agents and dim must be positive");
    coords.assign(static_cast<std::size_t>(n_agents) * dim, 0.0);
}

SwarmState SwarmState::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("SwarmState: no agents");
    SwarmState x(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < x.n_agents; ++i) {
        if (static_cast<int>(rows[i].size()) != x.dim)
            throw DimensionMismatchError("SwarmState: rows of unequal dimension");
        std::copy(rows[i].begin(), rows[i].end(), x.coords.begin() + static_cast<std::size_t>(i) * x.dim);
    }
    return x;
}

std::span<const double> SwarmState::agent(int i) const {
    return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
}

std::span<double> SwarmState::agent(int i) {
    return {coords.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
}

double SwarmState::distance(int i, int j) const {
    double s = 0.0;
    for (int l = 0; l < dim; ++l) {
        const double d = coords[static_cast<std::size_t>(i) * dim + l] - coords[static_cast<std::size_t>(j) * dim + l];
        s += d * d;
    }
    return std::sqrt(s);
}

std::vector<double> component(const SwarmState& x, int l) {
    if (l < 0 || l >= x.dim) throw DimensionMismatchError("component: coordinate index out of range");
    std::vector<double> c(x.n_agents);
    for (int i = 0; i < x.n_agents; ++i) c[i] = x.coords[static_cast<std::size_t>(i) * x.dim + l];
    return c;
}

std::vector<double> coordinate_mean(const SwarmState& x) {
    std::vector<double> m(x.dim, 0.0);
    for (int i = 0; i < x.n_agents; ++i)
        for (int l = 0; l < x.dim; ++l) m[l] += x.coords[static_cast<std::size_t>(i) * x.dim + l];
    for (int l = 0; l < x.dim; ++l) m[l] /= x.n_agents;
    return m;
}

SwarmState mean_projection(const SwarmState& x) {
    const std::vector<double> m = coordinate_mean(x);
    SwarmState p(x.n_agents, x.dim);
    for (int i = 0; i < x.n_agents; ++i)
        for (int l = 0; l < x.dim; ++l) p.coords[static_cast<std::size_t>(i) * x.dim + l] = m[l];
    return p;
}

SwarmState perp_component(const SwarmState& x) {
    const std::vector<double> m = coordinate_mean(x);
    SwarmState p = x;
    for (int i = 0; i < x.n_agents; ++i)
        for (int l = 0; l < x.dim; ++l) p.coords[static_cast<std::size_t>(i) * x.dim + l] -= m[l];
    return p;
}

double stacked_norm(const SwarmState& x) { return norm(x.coords); }

std::vector<double> edge_differences(const SwarmState& x, const AgentNetwork& net) {
    if (net.n_agents() != x.n_agents) throw DimensionMismatchError("edge_differences: agent counts differ");
    std::vector<double> d(static_cast<std::size_t>(net.n_edges()) * x.dim);
    const auto& edges = net.edges();
    for (int l = 0; l < net.n_edges(); ++l)
        for (int c = 0; c < x.dim; ++c)
            d[static_cast<std::size_t>(l) * x.dim + c] = x.coords[static_cast<std::size_t>(edges[l].head) * x.dim + c] -
                                                         x.coords[static_cast<std::size_t>(edges[l].tail) * x.dim + c];
    return d;
}

double max_edge_distance(const SwarmState& x, const AgentNetwork& net) {
    if (net.n_agents() != x.n_agents) throw DimensionMismatchError("max_edge_distance: agent counts differ");
    double m = 0.0;
    for (const Edge& e : net.edges()) m = std::max(m, x.distance(e.tail, e.head));
    return m;
}

}  // namespace swarmconn
