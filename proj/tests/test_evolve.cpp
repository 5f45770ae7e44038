#include <doctest.h>

#include <cmath>

#include "floqlat/evolve.hpp"

using namespace floqlat;

namespace {

TimeDependentModel two_boson_hopping(double j_mhz, int dim) {
    auto sp = build_space({SubsystemSpec::boson_mode(dim), SubsystemSpec::boson_mode(dim)});
    const auto b1 = mode_operator(sp, 0, ModeOp::lower).matrix;
    const auto b2 = mode_operator(sp, 1, ModeOp::lower).matrix;
    TimeDependentModel m;
    m.space = sp;
    m.static_terms.push_back({sp, angular(j_mhz) * (b1.adjoint() * b2 + b2.adjoint() * b1)});
    return m;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

} // namespace

TEST_CASE("resonant hopping swaps a single phonon as sin^2(J t)") {
    const double j = 0.3;
    auto m = two_boson_hopping(j, 3);
    auto grid = linspace(0.0, 2.0, 101);
    std::vector<std::pair<std::string, Operator>> obs{
        {"P1", basis_projector(m.space, {1, 0})},
        {"P2", basis_projector(m.space, {0, 1})}};
    auto traj = evolve(m, basis_state(m.space, {1, 0}), grid, obs);
    for (size_t i = 0; i < grid.size(); ++i) {
        const double expect = std::pow(std::sin(angular(j) * grid[i]), 2);
        CHECK(std::abs(traj.series("P2")[i] - expect) < 1e-6);
        CHECK(traj.series("P2")[i] >= -1e-12);
        CHECK(traj.series("P2")[i] <= 1.0 + 1e-12);
    }
}

TEST_CASE("H = 0 leaves the state constant") {
    auto sp = build_space({SubsystemSpec::qubit()});
    TimeDependentModel m;
    m.space = sp;
    auto grid = linspace(0.0, 5.0, 11);
    auto traj = evolve(m, basis_state(sp, {1}), grid,
                       {{"Pe", basis_projector(sp, {1})}});
    for (double v : traj.series("Pe")) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    for (double v : traj.norms) CHECK(std::abs(v - 1.0) < 1e-14);
}

TEST_CASE("validation errors") {
    auto m = two_boson_hopping(0.2, 2);
    auto psi = basis_state(m.space, {1, 0});
    CHECK_THROWS_AS(evolve(m, 2.0 * psi, {0.0, 1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(evolve(m, psi, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(evolve(m, psi, {0.0, 1.0, 1.0}, {}), std::invalid_argument);

    TimeDependentModel bad = m;
    bad.static_terms[0].matrix(0, 1) += complexd(0.0, 1e-6); // breaks hermiticity
    CHECK_THROWS_AS(evolve(bad, psi, {0.0, 1.0}, {}), std::invalid_argument);

    EvolveOptions too_coarse;
    too_coarse.dt = 1.0; // far above 1/(50 * rate)
    CHECK_THROWS_AS(evolve(m, psi, {0.0, 1.0}, {}, too_coarse), std::invalid_argument);
}

TEST_CASE("norm and excitation stay conserved under a drive") {
    auto sp = build_space({SubsystemSpec::boson_mode(3), SubsystemSpec::qubit()});
    const auto b = mode_operator(sp, 0, ModeOp::lower).matrix;
    const auto sz = mode_operator(sp, 1, ModeOp::sigma_z).matrix;
    const auto spl = mode_operator(sp, 1, ModeOp::sigma_plus).matrix;
    TimeDependentModel m;
    m.space = sp;
    m.static_terms.push_back({sp, -0.5 * angular(80.0) * sz +
                                      angular(8.0) * (b.adjoint() * spl.adjoint() + b * spl)});
    DrivenTerm d;
    d.op = Operator{sp, sz};
    d.envelope = [](double t) { return -0.5 * angular(40.0) * std::cos(angular(11.0) * t); };
    d.amp_bound = 0.5 * angular(40.0);
    d.ang_freq = angular(11.0);
    m.driven_terms.push_back(std::move(d));

    auto grid = linspace(0.0, 1.0, 51);
    auto traj = evolve(m, basis_state(sp, {1, 0}), grid,
                       {{"N", total_excitation(sp)}});
    for (double v : traj.norms) CHECK(std::abs(v - 1.0) < 1e-8);
    for (double v : traj.series("N")) CHECK(std::abs(v - 1.0) < 1e-8);
}

TEST_CASE("halving the step cuts the end-state error by at least 8x") {
    auto sp = build_space({SubsystemSpec::qubit()});
    const auto sz = mode_operator(sp, 0, ModeOp::sigma_z).matrix;
    cxmat sx = cxmat::Zero(2, 2);
    sx(0, 1) = sx(1, 0) = 1.0;
    TimeDependentModel m;
    m.space = sp;
    m.static_terms.push_back({sp, angular(3.0) * sx});
    DrivenTerm d;
    d.op = Operator{sp, sz};
    d.envelope = [](double t) { return angular(2.0) * std::cos(angular(5.0) * t); };
    d.amp_bound = angular(2.0);
    d.ang_freq = angular(5.0);
    m.driven_terms.push_back(std::move(d));

    auto psi0 = basis_state(sp, {0});
    const double t1 = 1.0;
    const double dt = 1.0 / (8.0 * rate_scale(m)); // coarse on purpose
    const cxvec y_h = evolve_state(m, psi0, 0.0, t1, dt);
    const cxvec y_h2 = evolve_state(m, psi0, 0.0, t1, dt / 2);
    const cxvec y_h4 = evolve_state(m, psi0, 0.0, t1, dt / 4);
    const cxvec y_h8 = evolve_state(m, psi0, 0.0, t1, dt / 8);
    const cxvec ref = y_h8 + (y_h8 - y_h4) / 15.0; // Richardson, 4th order
    const double e1 = (y_h - ref).norm();
    const double e2 = (y_h2 - ref).norm();
    CHECK(e1 > 1e-12); // measurable
    CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("top-Fock-level leakage raises a warning only when the guard level is used") {
    // dim 2: the single phonon lives in the top level, so the monitor fires;
    // dim 3: one guard level, clean run.
    auto grid = linspace(0.0, 1.0, 21);
    auto m2 = two_boson_hopping(0.4, 2);
    auto t2 = evolve(m2, basis_state(m2.space, {1, 0}), grid, {});
    CHECK(!t2.warnings.empty());
    auto m3 = two_boson_hopping(0.4, 3);
    auto t3 = evolve(m3, basis_state(m3.space, {1, 0}), grid, {});
    CHECK(t3.warnings.empty());
}
