#include "swarmconn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "swarmconn/errors.hpp"

namespace swarmconn {

AgentNetwork::AgentNetwork(int n_agents, const std::vector<std::pair<int, int>>& edges) : n_(n_agents) {
    if (n_ <= 0) throw std::invalid_argument("AgentNetwork: need at least one agent");
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("AgentNetwork: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("AgentNetwork: self-loops are not allowed");
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
    });
    for (std::size_t l = 1; l < edges_.size(); ++l)
        if (edges_[l].tail == edges_[l - 1].tail && edges_[l].head == edges_[l - 1].head)
            throw std::invalid_argument("AgentNetwork: repeated edge");

    neighbors_.assign(n_, {});
    for (const Edge& e : edges_) {
        neighbors_[e.tail].push_back(e.head);
        neighbors_[e.head].push_back(e.tail);
    }
    for (auto& lst : neighbors_) std::sort(lst.begin(), lst.end());
}

int AgentNetwork::max_degree() const {
    int d = 0;
    for (const auto& lst : neighbors_) d = std::max(d, static_cast<int>(lst.size()));
    return d;
}

std::optional<int> AgentNetwork::edge_index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j) return std::nullopt;
    const Edge want{std::min(i, j), std::max(i, j)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), want, [](const Edge& x, const Edge& y) {
        return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
    });
    if (it == edges_.end() || it->tail != want.tail || it->head != want.head) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

bool AgentNetwork::connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : neighbors_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n_;
}

Matrix incidence_matrix(const AgentNetwork& net) {
    Matrix d(net.n_agents(), net.n_edges());
    const auto& edges = net.edges();
    for (int l = 0; l < net.n_edges(); ++l) {
        d(edges[l].head, l) = 1.0;
        d(edges[l].tail, l) = -1.0;
    }
    return d;
}

Matrix laplacian(const AgentNetwork& net) {
    const Matrix d = incidence_matrix(net);
    return d * transpose(d);
}

SpectralSummary spectral_summary(const Matrix& m) {
    if (m.rows() != m.cols()) throw NotSymmetricError("spectral_summary: matrix not square");
    if (!is_symmetric(m, 1e-10)) throw NotSymmetricError("spectral_summary: matrix not symmetric within 1e-10");

    SpectralSummary s;
    s.eigenvalues = symmetric_eigenvalues(m);
    const int n = static_cast<int>(s.eigenvalues.size());
    s.lambda2 = n >= 2 ? s.eigenvalues[1] : 0.0;
    s.incidence_norm = n >= 1 ? std::sqrt(std::max(0.0, s.eigenvalues[n - 1])) : 0.0;
    return s;
}

}  // namespace swarmconn
