#include "swarmconn/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "swarmconn/energy.hpp"
#include "swarmconn/errors.hpp"
#include "swarmconn/rng.hpp"
#include "swarmconn/sampling.hpp"

namespace swarmconn {

std::string_view fact_label(FactId id) {
    switch (id) {
        case FactId::LaplacianLowerBound: return "laplacian-lower-bound";
        case FactId::ComponentCauchySchwarz: return "component-cauchy-schwarz";
        case FactId::PerpVsEdgeNorm: return "perp-vs-edge-norm";
        case FactId::PerpVsMaxEdge: return "perp-vs-max-edge";
        case FactId::FieldPairAlignment: return "field-pair-alignment";
        case FactId::LayerAlignment: return "layer-alignment";
        case FactId::SpectralFloor: return "spectral-floor";
        case FactId::Parallelogram: return "parallelogram";
        case FactId::SpreadRatio: return "spread-ratio";
    }
    return "unknown";
}

std::string FactReport::to_text() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-26s samples=%-8ld worst_margin=% .6e %s",
                  std::string(fact_label(fact)).c_str(), samples, worst_margin, pass ? "PASS" : "FAIL");
    return buf;
}

std::string FactReport::csv_row() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%ld,%.17g,%d", std::string(fact_label(fact)).c_str(), samples, worst_margin,
                  pass ? 1 : 0);
    return buf;
}

double check_laplacian_lower_bound(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot) {
    if (!net.connected()) throw DisconnectedError("laplacian lower bound: graph must be connected");
    const Matrix lw = weighted_laplacian(net, x, pot);
    const double lambda2 = spectral_summary(lw).lambda2;
    const SwarmState perp = perp_component(x);
    double worst = std::numeric_limits<double>::infinity();
    for (int l = 0; l < x.dim; ++l) {
        const std::vector<double> cl = component(perp, l);
        const std::vector<double> image = lw * cl;
        worst = std::min(worst, norm(image) - lambda2 * norm(cl));
    }
    return worst;
}

double check_component_cauchy_schwarz(const SwarmState& x, const SwarmState& y) {
    if (x.n_agents != y.n_agents || x.dim != y.dim)
        throw DimensionMismatchError("component Cauchy-Schwarz: states of different shape");
    double lhs = 0.0;
    for (int l = 0; l < x.dim; ++l) lhs += norm(component(x, l)) * norm(component(y, l));
    return stacked_norm(x) * stacked_norm(y) - lhs;
}

double check_perp_vs_edge_norm(const AgentNetwork& net, const SwarmState& x) {
    if (net.n_agents() < 2) throw PreconditionError("perp vs edge norm: need at least two agents");
    const double perp = stacked_norm(perp_component(x));
    const double diff = norm(edge_differences(x, net));
    return perp - diff / std::sqrt(2.0 * (net.n_agents() - 1.0));
}

double check_perp_vs_max_edge(const AgentNetwork& net, const SwarmState& x) {
    if (net.n_agents() < 2) throw PreconditionError("perp vs max edge: need at least two agents");
    return std::sqrt(2.0) * stacked_norm(perp_component(x)) - max_edge_distance(x, net);
}

double check_field_pair_alignment(std::span<const double> alpha, std::span<const double> beta,
                                  std::span<const double> gamma, double lambda_a, double lambda_b, double mu_a,
                                  double mu_b) {
    if (alpha.size() != beta.size() || alpha.size() != gamma.size())
        throw DimensionMismatchError("field pair alignment: vector lengths differ");
    if (std::abs(norm(alpha) - 1.0) > 1e-9) throw PreconditionError("field pair alignment: alpha is not unit");
    if (std::abs(norm(beta) - 1.0) > 1e-9) throw PreconditionError("field pair alignment: beta is not unit");
    if (dot(alpha, gamma) < 0.0) throw PreconditionError("field pair alignment: <alpha, gamma> must be >= 0");
    if (dot(beta, gamma) > 0.0) throw PreconditionError("field pair alignment: <beta, gamma> must be <= 0");
    if (!(lambda_a >= lambda_b && lambda_b >= 0.0))
        throw PreconditionError("field pair alignment: need lambda_a >= lambda_b >= 0");
    if (!(mu_a >= mu_b && mu_b >= 0.0))
        throw PreconditionError("field pair alignment: need mu_a >= mu_b >= 0");

    double acc = 0.0;
    for (std::size_t l = 0; l < alpha.size(); ++l) {
        const double left = mu_a * alpha[l] - mu_b * beta[l];
        const double right = lambda_a * alpha[l] + gamma[l] - lambda_b * beta[l];
        acc += left * right;
    }
    return acc;
}

double check_layer_alignment(std::span<const double> x, std::span<const double> x_tilde, std::span<const double> y,
                             const DomainParams& dom) {
    if (x.size() != x_tilde.size() || x.size() != y.size())
        throw DimensionMismatchError("layer alignment: vector lengths differ");
    const double rim = dom.radius - dom.layer_width;
    const double nx = norm(x);
    const double nxt = norm(x_tilde);
    if (!(nx >= rim - 1e-12 && nx < dom.radius))
        throw PreconditionError("layer alignment: x is not in the boundary layer");
    if (!(nxt >= rim - 1e-12 && nxt < dom.radius))
        throw PreconditionError("layer alignment: x_tilde is not in the boundary layer");
    if (norm(y) > rim * (1.0 + 1e-12))
        throw PreconditionError("layer alignment: y is not in the closed shrunken ball");
    // same-direction colinearity: x == (|x|/|x_tilde|) x_tilde
    const double scale = nx / nxt;
    double dev = 0.0;
    for (std::size_t l = 0; l < x.size(); ++l) {
        const double d = x[l] - scale * x_tilde[l];
        dev += d * d;
    }
    if (std::sqrt(dev) > 1e-9 * std::max(1.0, nx))
        throw PreconditionError("layer alignment: x and x_tilde are not colinear same-direction");

    double acc = 0.0;
    for (std::size_t l = 0; l < x.size(); ++l) acc += (x_tilde[l] - y[l]) * x[l];
    return acc;
}

double check_spectral_floor(const AgentNetwork& net, const SwarmState& x, const PotentialSpec& pot) {
    if (!net.connected()) throw DisconnectedError("spectral floor: graph must be connected");
    const double lw2 = spectral_summary(weighted_laplacian(net, x, pot)).lambda2;
    const double l2 = spectral_summary(laplacian(net)).lambda2;
    return lw2 - l2 * pot.weight_at_zero();
}

double spread_ratio(int m) {
    if (m < 1) throw std::invalid_argument("spread_ratio: edge count must be >= 1");
    const double md = static_cast<double>(m);
    return (1.0 / std::sqrt(md)) / std::cbrt(2.0 / (3.0 * md - 1.0));
}

std::vector<std::pair<int, double>> spread_ratio_table(int m_max) {
    if (m_max < 1) throw std::invalid_argument("spread_ratio_table: need m_max >= 1");
    std::vector<std::pair<int, double>> t;
    t.reserve(m_max);
    for (int m = 1; m <= m_max; ++m) t.emplace_back(m, spread_ratio(m));
    return t;
}

namespace {

PotentialSpec random_potential(SplitMix& rng) {
    if (rng.uniform() < 0.5) return PotentialSpec::linear();
    const double limit = rng.uniform(0.5, 2.0);
    return PotentialSpec::piecewise_nonlinear(limit, limit * rng.uniform(1.5, 4.0));
}

}  // namespace

std::vector<FactReport> run_fact_checks(const VerifyOptions& opts) {
    std::vector<FactReport> reports;
    const auto finish = [&](FactId id, long samples, double worst) {
        FactReport rep;
        rep.fact = id;
        rep.samples = samples;
        rep.worst_margin = worst + opts.margin_offset;
        rep.pass = rep.worst_margin >= kFactTol;
        reports.push_back(rep);
    };
    const auto stream = [&](FactId id) {
        return SplitMix(mix_seed({opts.seed, static_cast<std::uint64_t>(id) + 1}));
    };
    const long budget = std::max<long>(0, opts.budget);
    constexpr double kInf = std::numeric_limits<double>::infinity();

    {
        SplitMix rng = stream(FactId::LaplacianLowerBound);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            const AgentNetwork net = random_connected_network(rng, rng.uniform_int(2, 8));
            const SwarmState x = random_state(rng, net.n_agents(), rng.uniform_int(1, 3), 5.0);
            worst = std::min(worst, check_laplacian_lower_bound(net, x, random_potential(rng)));
        }
        finish(FactId::LaplacianLowerBound, budget, worst);
    }
    {
        SplitMix rng = stream(FactId::ComponentCauchySchwarz);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            const int n = rng.uniform_int(1, 8);
            const int dim = rng.uniform_int(1, 3);
            worst = std::min(worst, check_component_cauchy_schwarz(random_state(rng, n, dim, 5.0),
                                                                   random_state(rng, n, dim, 5.0)));
        }
        finish(FactId::ComponentCauchySchwarz, budget, worst);
    }
    {
        SplitMix rng = stream(FactId::PerpVsEdgeNorm);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            const AgentNetwork net = random_connected_network(rng, rng.uniform_int(2, 8));
            worst = std::min(worst,
                             check_perp_vs_edge_norm(net, random_state(rng, net.n_agents(), rng.uniform_int(1, 3), 5.0)));
        }
        finish(FactId::PerpVsEdgeNorm, budget, worst);
    }
    {
        SplitMix rng = stream(FactId::PerpVsMaxEdge);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            const AgentNetwork net = random_connected_network(rng, rng.uniform_int(2, 8));
            worst = std::min(worst,
                             check_perp_vs_max_edge(net, random_state(rng, net.n_agents(), rng.uniform_int(1, 3), 5.0)));
        }
        finish(FactId::PerpVsMaxEdge, budget, worst);
    }
    {
        // Half-space constraints on gamma are met by rejection; roughly one
        // draw in four is accepted, so the attempt cap never binds.
        SplitMix rng = stream(FactId::FieldPairAlignment);
        double worst = kInf;
        long accepted = 0;
        long attempts_left = budget * 1000 + 1000;
        while (accepted < budget && attempts_left-- > 0) {
            const int dim = rng.uniform_int(2, 5);
            const std::vector<double> alpha = random_unit_vector(rng, dim);
            const std::vector<double> beta = random_unit_vector(rng, dim);
            std::vector<double> gamma(dim);
            for (double& c : gamma) c = 3.0 * rng.normal();
            if (dot(alpha, gamma) < 0.0 || dot(beta, gamma) > 0.0) continue;
            double la = std::abs(rng.normal()) * 2.0, lb = std::abs(rng.normal()) * 2.0;
            if (la < lb) std::swap(la, lb);
            double ma = std::abs(rng.normal()) * 2.0, mb = std::abs(rng.normal()) * 2.0;
            if (ma < mb) std::swap(ma, mb);
            // Margin against the proof's lower bound, not just against zero.
            const double bound = (ma - mb) * (la - lb);
            worst = std::min(worst, check_field_pair_alignment(alpha, beta, gamma, la, lb, ma, mb) - bound);
            ++accepted;
        }
        finish(FactId::FieldPairAlignment, accepted, worst);
    }
    {
        SplitMix rng = stream(FactId::LayerAlignment);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            DomainParams dom;
            dom.radius = rng.uniform(5.0, 15.0);
            dom.layer_width = rng.uniform(0.05, 0.45) * dom.radius;
            const int dim = rng.uniform_int(1, 3);
            const double rim = dom.radius - dom.layer_width;
            const std::vector<double> dir = random_unit_vector(rng, dim);
            std::vector<double> x(dim), xt(dim), y(dim);
            const double rx = rng.uniform(rim, dom.radius * (1.0 - 1e-9));
            const double rxt = rng.uniform(rim, dom.radius * (1.0 - 1e-9));
            for (int l = 0; l < dim; ++l) {
                x[l] = rx * dir[l];
                xt[l] = rxt * dir[l];
            }
            const std::vector<double> ydir = random_unit_vector(rng, dim);
            const double ry = rim * std::cbrt(rng.uniform());  // denser near the rim where it is tight
            for (int l = 0; l < dim; ++l) y[l] = ry * ydir[l];
            worst = std::min(worst, check_layer_alignment(x, xt, y, dom));
        }
        finish(FactId::LayerAlignment, budget, worst);
    }
    {
        SplitMix rng = stream(FactId::SpectralFloor);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            const AgentNetwork net = random_connected_network(rng, rng.uniform_int(2, 8));
            const SwarmState x = random_state(rng, net.n_agents(), rng.uniform_int(1, 3), 5.0);
            worst = std::min(worst, check_spectral_floor(net, x, random_potential(rng)));
        }
        finish(FactId::SpectralFloor, budget, worst);
    }
    {
        SplitMix rng = stream(FactId::Parallelogram);
        double worst = kInf;
        for (long k = 0; k < budget; ++k) {
            const int dim = rng.uniform_int(1, 6);
            std::vector<double> w(dim), z(dim);
            for (double& c : w) c = 5.0 * rng.normal();
            for (double& c : z) c = 5.0 * rng.normal();
            const double lhs = 2.0 * (dot(w, w) + dot(z, z));
            double d2 = 0.0;
            for (int l = 0; l < dim; ++l) d2 += (w[l] - z[l]) * (w[l] - z[l]);
            worst = std::min(worst, lhs - d2);
        }
        finish(FactId::Parallelogram, budget, worst);
    }
    {
        // Deterministic table check, independent of the budget.
        constexpr int kMax = 150;
        double worst = kInf;
        if (spread_ratio(1) != 1.0) worst = -std::abs(spread_ratio(1) - 1.0);
        for (int m = 2; m <= kMax; ++m) {
            worst = std::min(worst, spread_ratio(m - 1) - spread_ratio(m));
            worst = std::min(worst, 1.0 - spread_ratio(m));
        }
        finish(FactId::SpreadRatio, kMax, worst);
    }

    return reports;
}

}  // namespace swarmconn
