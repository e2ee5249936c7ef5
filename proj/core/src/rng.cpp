#include "swarmconn/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swarmconn {

std::uint64_t SplitMix::next() {
    s_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix::uniform() {
    // 53 mantissa bits -> exact dyadic rational in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int SplitMix::uniform_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(next() % span);
}

double SplitMix::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t acc = 0x243f6a8885a308d3ULL;  // arbitrary non-zero start
    for (std::uint64_t p : parts) {
        SplitMix m(acc ^ (p + 0x9e3779b97f4a7c15ULL));
        acc = m.next();
    }
    return acc;
}

std::vector<double> random_unit_vector(SplitMix& rng, int dim) {
    if (dim <= 0) throw std::invalid_argument("random_unit_vector: dim must be positive");
    std::vector<double> v(dim);
    double n = 0.0;
    do {
        n = 0.0;
        for (int l = 0; l < dim; ++l) {
            v[l] = rng.normal();
            n += v[l] * v[l];
        }
        n = std::sqrt(n);
    } while (n < 1e-12);
    for (int l = 0; l < dim; ++l) v[l] /= n;
    return v;
}

}  // namespace swarmconn
