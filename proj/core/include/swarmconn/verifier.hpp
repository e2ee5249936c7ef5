#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swarmconn/controller.hpp"
#include "swarmconn/graph.hpp"
#include "swarmconn/potential.hpp"
#include "swarmconn/state.hpp"

namespace swarmconn {

/// The numeric facts the energy-descent and invariance arguments lean on.
/// Each check returns a margin (left side minus right side of the claimed
/// inequality); nonnegative up to rounding means the fact holds on that
/// sample.
enum class FactId {
    LaplacianLowerBound,     // |L_w c_l(x_perp)| >= lambda2(L_w) |c_l(x_perp)|
    ComponentCauchySchwarz,  // sum_l |c_l(x)| |c_l(y)| <= |x| |y|
    PerpVsEdgeNorm,          // |x_perp| >= |edge diff stack| / sqrt(2(N-1))
    PerpVsMaxEdge,           // sqrt(2) |x_perp| >= max edge distance
    FieldPairAlignment,      // signed inner product of paired boundary fields
    LayerAlignment,          // <x_tilde - y, x> >= 0 across the boundary layer
    SpectralFloor,           // lambda2(L_w) >= lambda2(graph) * r(0)
    Parallelogram,           // 2(|w|^2 + |z|^2) >= |w - z|^2
    SpreadRatio,             // case ratio: 1 at M=1, strictly decreasing, < 1 after
};

std::string_view fact_label(FactId id);

struct FactReport {
    FactId fact = FactId::LaplacianLowerBound;
    long samples = 0;
    double worst_margin = 0.0;
    bool pass = false;  // worst_margin >= -1e-9

    std::string to_text() const;
    std::string csv_row() const;
};

inline constexpr double kFactTol = -1e-9;  // slack for eigensolver and rounding error

// Single-sample margins. Preconditions are enforced; violations raise
// PreconditionError (or DisconnectedError where connectivity is the premise).

double check_laplacian_lower_bound(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot);
double check_component_cauchy_schwarz(const SwarmState& x, const SwarmState& y);
double check_perp_vs_edge_norm(const AgentNetwork& net, const SwarmState& x);
double check_perp_vs_max_edge(const AgentNetwork& net, const SwarmState& x);

/// Inner product of mu_a*alpha - mu_b*beta with lambda_a*alpha + gamma -
/// lambda_b*beta, for unit alpha/beta, gamma in the half-spaces
/// <alpha,gamma> >= 0 >= <beta,gamma>, and ordered nonnegative scalars
/// lambda_a >= lambda_b, mu_a >= mu_b. The proof bounds it below by
/// (mu_a - mu_b)(lambda_a - lambda_b).
double check_field_pair_alignment(std::span<const double> alpha, std::span<const double> beta,
                                  std::span<const double> gamma, double lambda_a, double lambda_b, double mu_a,
                                  double mu_b);

/// <x_tilde - y, x> for x, x_tilde colinear same-direction points in the
/// boundary layer and y anywhere in the closed shrunken ball.
double check_layer_alignment(std::span<const double> x, std::span<const double> x_tilde, std::span<const double> y,
                             const DomainParams& dom);

double check_spectral_floor(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot);

/// Ratio of the admissible spread limits of the two built-in potential kinds
/// at the same radius and edge count M.
double spread_ratio(int m);
std::vector<std::pair<int, double>> spread_ratio_table(int m_max);

struct VerifyOptions {
    std::uint64_t seed = 42;
    long budget = 10000;       // accepted samples per fact
    double margin_offset = 0.0;  // test hook: added to every worst margin before the verdict
};

/// Monte-Carlo sweep over every fact with per-fact seed substreams.
/// Budget 0 yields vacuous passes (samples = 0).
std::vector<FactReport> run_fact_checks(const VerifyOptions& opts);

}  // namespace swarmconn
