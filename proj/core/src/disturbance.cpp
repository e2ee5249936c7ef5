#include "swarmconn/disturbance.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "swarmconn/energy.hpp"
#include "swarmconn/errors.hpp"
#include "swarmconn/rng.hpp"

namespace swarmconn {

namespace {

constexpr std::uint64_t kDirectionStream = 0x0d15717bu;
constexpr std::uint64_t kWindowStream = 0x5eedULL;

}  // namespace

std::vector<double> adversarial_disturbance(const SwarmState& x, const AgentNetwork& net, const PotentialSpec& pot,
                                            double magnitude) {
    if (magnitude < 0.0) throw std::invalid_argument("adversarial_disturbance: negative magnitude");
    std::vector<double> v = energy_gradient_stack(pot, x, net);
    for (int i = 0; i < x.n_agents; ++i) {
        double n = 0.0;
        for (int l = 0; l < x.dim; ++l) {
            const double c = v[static_cast<std::size_t>(i) * x.dim + l];
            n += c * c;
        }
        n = std::sqrt(n);
        const double scale = n > 0.0 ? magnitude / n : 0.0;
        for (int l = 0; l < x.dim; ++l) v[static_cast<std::size_t>(i) * x.dim + l] *= scale;
    }
    return v;
}

DisturbanceModel::DisturbanceModel(const DisturbanceSpec& spec, const AgentNetwork& net, const PotentialSpec& pot,
                                   int dim, std::uint64_t master_seed)
    : spec_(spec), net_(&net), pot_(&pot), dim_(dim), seed_(master_seed) {
    if (spec_.magnitude < 0.0) throw std::invalid_argument("DisturbanceModel: negative magnitude");
    if (spec_.kind == DisturbanceKind::SeededRandom && !(spec_.hold > 0.0))
        throw std::invalid_argument("DisturbanceModel: hold window must be positive");
    const int n = net.n_agents();
    if (spec_.kind == DisturbanceKind::Constant || spec_.kind == DisturbanceKind::Sinusoid) {
        SplitMix rng(mix_seed({seed_, kDirectionStream}));
        directions_.reserve(n);
        for (int i = 0; i < n; ++i) directions_.push_back(random_unit_vector(rng, dim_));
    }
    if (spec_.kind == DisturbanceKind::Sinusoid) {
        phases_.resize(n);
        for (int i = 0; i < n; ++i) phases_[i] = 2.0 * std::numbers::pi * i / n;
    }
}

void DisturbanceModel::eval(double t, const SwarmState& x, std::vector<double>& out) const {
    const int n = net_->n_agents();
    out.assign(static_cast<std::size_t>(n) * dim_, 0.0);
    switch (spec_.kind) {
        case DisturbanceKind::Zero:
            return;
        case DisturbanceKind::Constant:
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < dim_; ++l)
                    out[static_cast<std::size_t>(i) * dim_ + l] = spec_.magnitude * directions_[i][l];
            return;
        case DisturbanceKind::Sinusoid:
            for (int i = 0; i < n; ++i) {
                const double a =
                    spec_.magnitude * std::sin(2.0 * std::numbers::pi * spec_.frequency * t + phases_[i]);
                for (int l = 0; l < dim_; ++l) out[static_cast<std::size_t>(i) * dim_ + l] = a * directions_[i][l];
            }
            return;
        case DisturbanceKind::SeededRandom: {
            // Piecewise constant over hold windows; the draw is keyed by
            // (seed, window, agent) so any stage time inside a window sees
            // the same vector regardless of evaluation order.
            const std::uint64_t window = static_cast<std::uint64_t>(std::floor(t / spec_.hold + 1e-9));
            for (int i = 0; i < n; ++i) {
                SplitMix rng(mix_seed({seed_, kWindowStream, window, static_cast<std::uint64_t>(i)}));
                const std::vector<double> dir = random_unit_vector(rng, dim_);
                for (int l = 0; l < dim_; ++l)
                    out[static_cast<std::size_t>(i) * dim_ + l] = spec_.magnitude * dir[l];
            }
            return;
        }
        case DisturbanceKind::AdversarialAscent:
            out = adversarial_disturbance(x, *net_, *pot_, spec_.magnitude);
            return;
    }
}

std::vector<double> DisturbanceModel::eval(double t, const SwarmState& x) const {
    std::vector<double> out;
    eval(t, x, out);
    return out;
}

}  // namespace swarmconn
