#include <doctest.h>

#include "floqlat/space.hpp"

using namespace floqlat;

TEST_CASE("build_space dimensions") {
    CHECK(build_space({SubsystemSpec::qubit(), SubsystemSpec::boson_mode(3)}).total_dim == 6);
    CHECK(build_space({SubsystemSpec::boson_mode(3), SubsystemSpec::boson_mode(3),
                       SubsystemSpec::boson_mode(3)}).total_dim == 27);
    CHECK(build_space({SubsystemSpec::qubit()}).total_dim == 2);
    CHECK_THROWS_AS(build_space({}), std::invalid_argument);
    CHECK_THROWS_AS(build_space({SubsystemSpec::boson_mode(1)}), std::invalid_argument);
}

TEST_CASE("basis ordering: first subsystem varies slowest") {
    auto sp = build_space({SubsystemSpec::boson_mode(3), SubsystemSpec::boson_mode(3),
                           SubsystemSpec::qubit()});
    CHECK(sp.basis_index({0, 0, 0}) == 0);
    CHECK(sp.basis_index({0, 0, 1}) == 1);
    CHECK(sp.basis_index({0, 1, 0}) == 2);
    CHECK(sp.basis_index({1, 0, 0}) == 6);
    CHECK_THROWS_AS(sp.basis_index({3, 0, 0}), std::invalid_argument);
}

TEST_CASE("lowering operator on a truncated boson") {
    auto sp = build_space({SubsystemSpec::boson_mode(3)});
    const auto b = mode_operator(sp, 0, ModeOp::lower).matrix;
    CHECK(b(0, 1) == complexd(1.0, 0.0));
    CHECK(std::abs(b(1, 2) - complexd(std::sqrt(2.0), 0.0)) < 1e-15);
    CHECK(b(0, 0) == complexd(0.0, 0.0));
    CHECK(b(2, 1) == complexd(0.0, 0.0));
    const auto n = mode_operator(sp, 0, ModeOp::number).matrix;
    CHECK(((b.adjoint() * b - n).cwiseAbs().maxCoeff()) < 1e-14);
}

TEST_CASE("operators on disjoint subsystems commute") {
    auto sp = build_space({SubsystemSpec::boson_mode(3), SubsystemSpec::boson_mode(4)});
    const auto n0 = mode_operator(sp, 0, ModeOp::number).matrix;
    const auto n1 = mode_operator(sp, 1, ModeOp::number).matrix;
    CHECK((n0 * n1 - n1 * n0).cwiseAbs().maxCoeff() == 0.0);
    const auto b0 = mode_operator(sp, 0, ModeOp::lower).matrix;
    const auto r1 = mode_operator(sp, 1, ModeOp::raise).matrix;
    CHECK((b0 * r1 - r1 * b0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sigma_z is +1 on |e>, -1 on |g>") {
    auto sp = build_space({SubsystemSpec::qubit()});
    const auto sz = mode_operator(sp, 0, ModeOp::sigma_z).matrix;
    CHECK(sz(0, 0) == complexd(-1.0, 0.0));
    CHECK(sz(1, 1) == complexd(1.0, 0.0));
    const auto plus = mode_operator(sp, 0, ModeOp::sigma_plus).matrix;
    CHECK(plus(1, 0) == complexd(1.0, 0.0)); // |e><g|
}

TEST_CASE("kind checks and index range") {
    auto sp = build_space({SubsystemSpec::boson_mode(3), SubsystemSpec::qubit()});
    CHECK_THROWS_AS(mode_operator(sp, 0, ModeOp::sigma_z), std::invalid_argument);
    CHECK_THROWS_AS(mode_operator(sp, 1, ModeOp::lower), std::invalid_argument);
    CHECK_THROWS_AS(mode_operator(sp, 1, ModeOp::number), std::invalid_argument);
    CHECK_THROWS_AS(mode_operator(sp, 2, ModeOp::lower), std::invalid_argument);
}

TEST_CASE("total excitation counts phonons and qubit flips") {
    auto sp = build_space({SubsystemSpec::boson_mode(3), SubsystemSpec::qubit()});
    const auto n = total_excitation(sp).matrix;
    const int i = sp.basis_index({2, 1});
    CHECK(std::abs(n(i, i) - complexd(3.0, 0.0)) < 1e-15);
    const int j = sp.basis_index({0, 0});
    CHECK(std::abs(n(j, j)) < 1e-15);
}

TEST_CASE("embedding acts as identity elsewhere") {
    auto sp = build_space({SubsystemSpec::boson_mode(2), SubsystemSpec::boson_mode(3)});
    const auto b1 = mode_operator(sp, 1, ModeOp::lower).matrix;
    // <0,0| b_1 |0,1> = 1 and <1,0| b_1 |1,1> = 1
    CHECK(b1(sp.basis_index({0, 0}), sp.basis_index({0, 1})) == complexd(1.0, 0.0));
    CHECK(b1(sp.basis_index({1, 0}), sp.basis_index({1, 1})) == complexd(1.0, 0.0));
    // no cross-subsystem matrix elements
    CHECK(b1(sp.basis_index({0, 0}), sp.basis_index({1, 1})) == complexd(0.0, 0.0));
}
