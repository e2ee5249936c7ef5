#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swarmconn/matrix.hpp"

namespace swarmconn {

/// One undirected communication link. Stored with the fixed orientation
/// tail < head so incidence columns and edge difference vectors come out
/// identical from run to run.
struct Edge {
    int tail = 0;
    int head = 0;
};

/// Algebraic connectivity below this is treated as "disconnected" wherever a
/// spectral routine has to make the call.
inline constexpr double kConnectivityTol = 1e-8;

/// Fixed communication topology over agents 0..N-1. Edges are undirected,
/// deduplicated, and numbered lexicographically on the sorted endpoint pair,
/// so every derived object (incidence matrix, edge difference stack, trace
/// columns) has one canonical layout.
class AgentNetwork {
public:
    AgentNetwork(int n_agents, const std::vector<std::pair<int, int>>& edges);

    int n_agents() const { return n_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<std::vector<int>>& neighbor_lists() const { return neighbors_; }
    const std::vector<int>& neighbors(int i) const { return neighbors_.at(i); }
    int max_degree() const;

    bool contains_edge(int i, int j) const { return edge_index(i, j).has_value(); }
    std::optional<int> edge_index(int i, int j) const;

    /// Breadth-first reachability; exact, no spectral tolerance involved.
    bool connected() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;
};

struct SpectralSummary {
    std::vector<double> eigenvalues;  // ascending
    double lambda2 = 0.0;             // algebraic connectivity
    double incidence_norm = 0.0;      // operator norm of the transposed incidence matrix
};

/// N x M matrix with +1 at the head and -1 at the tail of each edge column.
Matrix incidence_matrix(const AgentNetwork& net);

/// Unweighted graph Laplacian, assembled as D * D^T.
Matrix laplacian(const AgentNetwork& net);

/// Eigen-decomposition summary of a symmetric (Laplacian-like) matrix.
/// Throws NotSymmetricError when the input is asymmetric beyond 1e-10.
SpectralSummary spectral_summary(const Matrix& m);

}  // namespace swarmconn
