#include <benchmark/benchmark.h>

#include "swarmconn/controller.hpp"
#include "swarmconn/energy.hpp"
#include "swarmconn/graph.hpp"
#include "swarmconn/potential.hpp"
#include "swarmconn/rng.hpp"
#include "swarmconn/sampling.hpp"
#include "swarmconn/simulator.hpp"

using namespace swarmconn;

namespace {

void BM_fiedler_value(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix rng(5);
    const AgentNetwork net = random_connected_network(rng, n);
    const Matrix lap = laplacian(net);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_summary(lap).lambda2);
}
BENCHMARK(BM_fiedler_value)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_gradient_stack(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix rng(6);
    const AgentNetwork net = random_connected_network(rng, n);
    const SwarmState x = random_state(rng, n, 3, 2.0);
    const PotentialSpec pot = PotentialSpec::piecewise_nonlinear(4.0, 10.0);
    for (auto _ : state) benchmark::DoNotOptimize(energy_gradient_stack(pot, x, net));
}
BENCHMARK(BM_gradient_stack)->Arg(8)->Arg(64)->Arg(256);

void BM_integrator_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix rng(7);
    const AgentNetwork net = random_connected_network(rng, n);
    const double comm_radius = 10.0;
    const double spread_limit = max_spread_limit(PotentialKind::PiecewiseNonlinear, comm_radius, net.n_edges());
    SwarmState x = random_state(rng, n, 3, 1.0);
    const double spread = max_edge_distance(x, net);
    for (double& c : x.coords) c *= 0.9 * spread_limit / spread;

    DisturbanceSpec dist;
    dist.kind = DisturbanceKind::Sinusoid;
    dist.magnitude = 0.1;
    SimConfig cfg{net,
                  PotentialSpec::piecewise_nonlinear(spread_limit, comm_radius),
                  ControllerParams{comm_radius, spread_limit, robustness_gain(net), 0.1,
                                   PotentialKind::PiecewiseNonlinear},
                  std::nullopt,
                  dist,
                  x,
                  1.0,
                  1e-3,
                  11};
    for (auto _ : state) benchmark::DoNotOptimize(step(cfg, cfg.initial, 0.0, cfg.dt));
}
BENCHMARK(BM_integrator_step)->Arg(8)->Arg(64);

void BM_table_potential_integral(benchmark::State& state) {
    const PotentialSpec pot = PotentialSpec::custom_table({0.0, 1.0, 4.0, 12.0}, {1.0, 1.0, 4.0, 4.0});
    for (auto _ : state) benchmark::DoNotOptimize(pot.integral(11.0));
}
BENCHMARK(BM_table_potential_integral);

}  // namespace

BENCHMARK_MAIN();
