#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <sstream>
#include <vector>

#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "swarmconn/controller.hpp"
#include "swarmconn/disturbance.hpp"
#include "swarmconn/errors.hpp"
#include "swarmconn/simulator.hpp"

using namespace swarmconn;

namespace {

// Two agents on a line, uniform profile, no disturbance. The coordinate
// difference obeys e' = -2e exactly, which makes the closed loop solvable by
// hand.
SimConfig pair_decay(double comm_radius, double dt, double t_end) {
    const AgentNetwork net(2, {{0, 1}});
    const double gain = robustness_gain(net);
    return SimConfig{net,
                     PotentialSpec::linear(),
                     ControllerParams{comm_radius, comm_radius * 0.9, gain, comm_radius * 0.9 / gain,
                                      PotentialKind::Linear},
                     std::nullopt,
                     DisturbanceSpec{},
                     SwarmState::from_rows({{0.5}, {-0.5}}),
                     t_end,
                     dt,
                     1};
}

}  // namespace

TEST_CASE("disturbance signals are reproducible, capped, and kind-faithful") {
    const AgentNetwork net(3, {{0, 1}, {1, 2}});
    const PotentialSpec pot = PotentialSpec::linear();
    const SwarmState x = SwarmState::from_rows({{0, 0}, {1, 0}, {1, 1}});
    const double mag = 0.25;

    for (const auto kind : {DisturbanceKind::Zero, DisturbanceKind::Constant, DisturbanceKind::Sinusoid,
                            DisturbanceKind::SeededRandom, DisturbanceKind::AdversarialAscent}) {
        DisturbanceSpec spec;
        spec.kind = kind;
        spec.magnitude = mag;
        const DisturbanceModel a(spec, net, pot, 2, 77);
        const DisturbanceModel b(spec, net, pot, 2, 77);
        const DisturbanceModel c(spec, net, pot, 2, 78);

        bool differs_from_c = false;
        for (const double t : {0.0, 0.05, 0.1, 1.0, 9.87}) {
            const auto va = a.eval(t, x);
            const auto vb = b.eval(t, x);
            const auto vc = c.eval(t, x);
            CHECK(va == vb);  // bitwise reproducible
            differs_from_c = differs_from_c || va != vc;
            for (int i = 0; i < 3; ++i) {
                double n2 = 0.0;
                for (int l = 0; l < 2; ++l) n2 += va[2 * i + l] * va[2 * i + l];
                CHECK(std::sqrt(n2) <= mag * (1.0 + 1e-12));
                if (kind == DisturbanceKind::Zero) CHECK(n2 == 0.0);
            }
        }
        if (kind != DisturbanceKind::Zero && kind != DisturbanceKind::AdversarialAscent) CHECK(differs_from_c);
    }
}

TEST_CASE("held random disturbance is constant within a window") {
    DisturbanceSpec spec;
    spec.kind = DisturbanceKind::SeededRandom;
    spec.magnitude = 1.0;
    spec.hold = 0.1;
    const AgentNetwork net(2, {{0, 1}});
    const PotentialSpec pot = PotentialSpec::linear();
    const SwarmState x = SwarmState::from_rows({{0, 0}, {1, 0}});
    const DisturbanceModel m(spec, net, pot, 2, 5);

    CHECK(m.eval(0.301, x) == m.eval(0.399, x));
    CHECK(m.eval(0.301, x) != m.eval(0.401, x));
}

TEST_CASE("sinusoid repeats with its period") {
    DisturbanceSpec spec;
    spec.kind = DisturbanceKind::Sinusoid;
    spec.magnitude = 0.5;
    spec.frequency = 2.0;
    const AgentNetwork net(2, {{0, 1}});
    const PotentialSpec pot = PotentialSpec::linear();
    const SwarmState x = SwarmState::from_rows({{0, 0}, {1, 0}});
    const DisturbanceModel m(spec, net, pot, 2, 5);

    const auto v0 = m.eval(0.35, x);
    const auto v1 = m.eval(0.85, x);  // one period of 1/frequency later
    for (std::size_t k = 0; k < v0.size(); ++k) CHECK_CLOSE(v0[k], v1[k], 1e-9);
}

TEST_CASE("ascent disturbance pushes along the energy gradient") {
    DisturbanceSpec spec;
    spec.kind = DisturbanceKind::AdversarialAscent;
    spec.magnitude = 2.0;
    const AgentNetwork net(2, {{0, 1}});
    const PotentialSpec pot = PotentialSpec::linear();
    const SwarmState x = SwarmState::from_rows({{0.0, 0.0}, {3.0, 0.0}});
    const DisturbanceModel m(spec, net, pot, 2, 5);

    // Agent 0's gradient is x0 - x1 = (-3, 0); full-magnitude ascent.
    const auto v = m.eval(1.23, x);
    CHECK_CLOSE(v[0], -2.0, 1e-12);
    CHECK_CLOSE(v[1], 0.0, 1e-12);
    CHECK_CLOSE(v[2], 2.0, 1e-12);
}

TEST_CASE("speed bound and step rule on a frozen pair") {
    const SimConfig cfg = pair_decay(1.0, 0.005, 1.0);
    // One neighbor, unit weight, unit radius, no disturbance, no domain.
    CHECK(speed_bound(cfg) == 1.0);
    CHECK(max_stable_dt(cfg) == 0.01);
}

TEST_CASE("one integrator step reproduces the hand-expanded polynomial") {
    // The difference between the two agents contracts by the degree-four
    // stability polynomial at z = -2 dt. With dt = 0.1 that is
    // 1 - 0.2 + 0.02 - 4/3000 + 2/30000 = 0.81873333...; the mean stays put,
    // so agent 0 lands exactly on half of it.
    const SimConfig cfg = pair_decay(10.0, 0.1, 1.0);
    const SwarmState next = step(cfg, cfg.initial, 0.0, 0.1);

    const double contraction = oracles::rk4_linear_step(1.0, -2.0, 0.1);
    CHECK_CLOSE(contraction, 0.8187333333333333, 1e-15);
    CHECK_CLOSE(next.coords[0], 0.5 * contraction, 1e-14);
    CHECK_CLOSE(next.coords[1], -0.5 * contraction, 1e-14);

    // Distance to the true exponential is pure truncation error, about
    // 2.58e-6 at this step size.
    CHECK_CLOSE(next.coords[0], 0.5 * std::exp(-0.2), 3e-6);
    CHECK(std::abs(next.coords[0] - 0.5 * std::exp(-0.2)) > 1e-6);
}

TEST_CASE("halving the step shrinks the one-step defect sixteenfold") {
    // Local error order five per step, order four over the pair of halves.
    const SimConfig cfg = pair_decay(10.0, 0.1, 1.0);

    const auto defect = [&](double dt) {
        SwarmState x = cfg.initial;
        const int n = static_cast<int>(std::lround(0.4 / dt));
        for (int k = 0; k < n; ++k) x = step(cfg, x, k * dt, dt);
        return std::abs(x.coords[0] - 0.5 * std::exp(-2.0 * 0.4));
    };
    const double ratio = defect(0.05) / defect(0.025);
    CHECK(ratio >= 8.0);
    CHECK(ratio <= 32.0);
}

TEST_CASE("rollout samples a row every step and is reproducible") {
    const SimConfig cfg = pair_decay(10.0, 0.01, 0.1);
    const SimTrace trace = run(cfg);

    REQUIRE(trace.rows.size() == 11);
    CHECK(trace.rows.front().t == 0.0);
    CHECK_CLOSE(trace.rows.back().t, 0.1, 1e-12);
    CHECK(!trace.violation);
    for (const TraceRow& row : trace.rows) {
        CHECK(row.connected);
        CHECK(row.inside);
        CHECK(std::isfinite(row.energy));
        CHECK(row.max_edge <= 1.0);
    }
    // Energy only decays in this configuration.
    for (std::size_t k = 1; k < trace.rows.size(); ++k) CHECK(trace.rows[k].energy <= trace.rows[k - 1].energy);

    const SimTrace again = run(cfg);
    REQUIRE(again.rows.size() == trace.rows.size());
    for (std::size_t k = 0; k < trace.rows.size(); ++k) CHECK(again.rows[k].coords == trace.rows[k].coords);
}

TEST_CASE("seeded runs differ across seeds and repeat within one") {
    SimConfig cfg = pair_decay(10.0, 0.005, 0.5);
    cfg.disturbance.kind = DisturbanceKind::SeededRandom;
    cfg.disturbance.magnitude = cfg.ctrl.input_bound;

    const SimTrace a = run(cfg);
    const SimTrace b = run(cfg);
    cfg.seed = 2;
    const SimTrace c = run(cfg);

    CHECK(a.rows.back().coords == b.rows.back().coords);
    CHECK(a.rows.back().coords != c.rows.back().coords);
}

TEST_CASE("an overwhelming ascent disturbance severs the pair") {
    SimConfig cfg = pair_decay(2.0, 0.0001, 5.0);
    cfg.ctrl.spread_limit = 1.9;
    cfg.initial = SwarmState::from_rows({{0.95}, {-0.95}});
    cfg.disturbance.kind = DisturbanceKind::AdversarialAscent;
    cfg.disturbance.magnitude = 100.0 * cfg.ctrl.input_bound;

    const SimTrace trace = run(cfg);
    CHECK(trace.violation);
    CHECK(trace.violation_kind == "connectivity");
    CHECK(trace.rows.back().max_edge > 2.0);
    CHECK(!trace.rows.back().connected);
    CHECK(trace.rows.size() < 1 + static_cast<std::size_t>(std::floor(5.0 / 0.0001 + 1e-9)));
}

TEST_CASE("hard invariants are enforced at load") {
    {
        SimConfig cfg = pair_decay(1.0, 0.02, 1.0);  // step rule allows 0.01
        CHECK_THROWS_AS(run(cfg), ConfigInvalidError);
    }
    {
        SimConfig cfg = pair_decay(1.0, 0.005, 1.0);
        cfg.initial = SwarmState::from_rows({{0.0}, {0.95}});  // spread beyond limit 0.9
        CHECK_THROWS_AS(run(cfg), ConfigInvalidError);
    }
    {
        SimConfig cfg = pair_decay(1.0, 0.005, 1.0);
        cfg.t_end = -1.0;
        CHECK_THROWS_AS(run(cfg), ConfigInvalidError);
    }
    {
        SimConfig cfg = pair_decay(1.0, 0.005, 1.0);
        cfg.disturbance.magnitude = -0.1;
        CHECK_THROWS_AS(run(cfg), ConfigInvalidError);
    }
    {
        SimConfig cfg = pair_decay(1.0, 0.005, 1.0);
        DomainParams dom;
        dom.radius = 1.0;
        dom.layer_width = 0.2;
        cfg.domain = dom;  // initial positions sit outside the shrunken ball
        CHECK_THROWS_AS(run(cfg), ConfigInvalidError);
    }
}

TEST_CASE("a disturbance above the input bound runs anyway") {
    // dt must still respect the speed bound, which the large magnitude inflates.
    SimConfig cfg = pair_decay(10.0, 0.002, 0.2);
    cfg.disturbance.kind = DisturbanceKind::Constant;
    cfg.disturbance.magnitude = cfg.ctrl.input_bound * 3.0;  // soft failure only
    const SimTrace trace = run(cfg);
    CHECK(trace.rows.size() == 101);
}

TEST_CASE("domain runs stay inside and report layer depths") {
    const AgentNetwork net(2, {{0, 1}});
    const double gain = robustness_gain(net);
    DomainParams dom;
    dom.radius = 10.0;
    dom.layer_width = 1.0;
    SimConfig cfg{net,
                  PotentialSpec::linear(),
                  ControllerParams{4.0, 2.0, gain, 2.0 / gain, PotentialKind::Linear},
                  dom,
                  DisturbanceSpec{DisturbanceKind::Constant, 2.0 / gain, 1.0, 0.1},
                  SwarmState::from_rows({{8.5, 0.0}, {8.0, 0.5}}),
                  10.0,
                  0.0,
                  3};
    cfg.dt = max_stable_dt(cfg);

    const SimTrace trace = run(cfg);
    CHECK(!trace.violation);
    for (const TraceRow& row : trace.rows) {
        CHECK(row.inside);
        REQUIRE(row.layer_depths.size() == 2);
        CHECK(row.max_layer_depth <= dom.layer_width / 2.0 + 1e-6);
        for (int i = 0; i < 2; ++i) {
            double n2 = 0.0;
            for (int l = 0; l < 2; ++l) n2 += row.coords[2 * i + l] * row.coords[2 * i + l];
            CHECK(std::sqrt(n2) < dom.radius);
            CHECK_CLOSE(row.layer_depths[i],
                        std::max(0.0, dom.layer_width + std::sqrt(n2) - dom.radius), 1e-12);
        }
    }
}

TEST_CASE("stepping from outside the ball is refused") {
    const AgentNetwork net(2, {{0, 1}});
    DomainParams dom;
    dom.radius = 1.0;
    dom.layer_width = 0.2;
    SimConfig cfg{net,
                  PotentialSpec::linear(),
                  ControllerParams{4.0, 2.0, 1.0, 1.0, PotentialKind::Linear},
                  dom,
                  DisturbanceSpec{},
                  SwarmState::from_rows({{0.0, 0.0}, {0.5, 0.0}}),
                  1.0,
                  0.001,
                  1};
    const SwarmState outside = SwarmState::from_rows({{0.0, 0.0}, {1.5, 0.0}});
    CHECK_THROWS_AS(step(cfg, outside, 0.0, 0.001), OutsideDomainError);
}

TEST_CASE("absurd steps blow up loudly instead of silently") {
    const SimConfig cfg = pair_decay(10.0, 0.005, 1.0);
    CHECK_THROWS_AS(step(cfg, cfg.initial, 0.0, 1e9), NumericalBlowupError);
}

TEST_CASE("trace serialization carries the documented header") {
    const SimConfig cfg = pair_decay(10.0, 0.005, 0.015);
    const SimTrace trace = run(cfg);
    std::ostringstream out;
    trace.write_csv(out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x_1_1,x_2_1,V,dx_inf,m_1,m_2,m,connected,invariant");

    int data_rows = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++data_rows;
    CHECK(data_rows == 4);

    // First data row is the initial condition at full precision.
    std::istringstream reparse(out.str());
    std::getline(reparse, line);
    std::getline(reparse, line);
    double t, x0, x1;
    char comma;
    std::istringstream row(line);
    row >> t >> comma >> x0 >> comma >> x1;
    CHECK(t == 0.0);
    CHECK(x0 == 0.5);
    CHECK(x1 == -0.5);
}
