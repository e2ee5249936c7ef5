#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace swarmconn {

/// Tiny deterministic generator (splitmix64) used for all sampling in the
/// library. Unlike the standard distributions, every draw is fully specified
/// by the seed, which is what makes traces reproducible bit for bit and lets
/// stateless signals be re-derived from (seed, window, agent) keys.
class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next();

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    /// Standard normal via Box-Muller.
    double normal();

private:
    std::uint64_t s_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Folds the parts into one well-mixed seed; used to derive independent
/// subststreams (per fact check, per disturbance window, per agent).
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

/// Uniformly distributed direction on the unit sphere in R^dim.
std::vector<double> random_unit_vector(SplitMix& rng, int dim);

}  // namespace swarmconn
