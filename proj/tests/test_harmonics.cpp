#include <doctest.h>

#include <cmath>

#include "floqlat/harmonics.hpp"

using namespace floqlat;

namespace {
DriveSpec drive(double lambda, double phi = 0.0, double omega_d = 15.0) {
    return DriveSpec{lambda, omega_d, phi};
}
} // namespace

TEST_CASE("small-lambda limit reproduces the first-order expansion") {
    for (double lam : {1e-4, 0.01, 0.05, 0.1}) {
        auto h = chi_harmonics(drive(lam), 2);
        CHECK(std::abs(h.coeffs[0].real() - 1.0) <= lam * lam);
        CHECK(std::abs(h.coeffs[1].real() + lam) <= lam * lam);
    }
    // at phi = 0.4 the first harmonic carries exactly that phase
    auto h = chi_harmonics(drive(1e-4), 2);
    auto hp = chi_harmonics(drive(1e-4, 0.4), 2);
    CHECK(std::arg(hp.coeffs[1] / h.coeffs[1]) == doctest::Approx(0.4).epsilon(1e-9));
}

TEST_CASE("lambda = 0.5 reference values") {
    auto q = chi_harmonics(drive(0.5), 8);
    auto c = chi_harmonics_closed_form(drive(0.5), 8);
    CHECK(q.coeffs[0].real() == doctest::Approx(1.154700538379).epsilon(1e-9));
    CHECK(q.coeffs[1].real() == doctest::Approx(-0.618802153517).epsilon(1e-9));
    CHECK(q.coeffs[2].real() == doctest::Approx(0.165807537310).epsilon(1e-9));
    for (int n = 0; n <= 8; ++n)
        CHECK(std::abs(q.coeffs[n] - c.coeffs[n]) < 1e-9);
    CHECK(std::abs(c.coeffs[2] / c.coeffs[1]) == doctest::Approx(0.267949192431).epsilon(1e-9));
    CHECK(chi_harmonics_closed_form(drive(0.8), 1).coeffs[0].real() ==
          doctest::Approx(5.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("phase shift property c_n(phi) = c_n(0) e^{i n phi}") {
    for (double lam : {0.3, 0.7}) {
        for (double phi : {0.3, -1.2}) {
            auto h0 = chi_harmonics(drive(lam, 0.0), 6);
            auto hp = chi_harmonics(drive(lam, phi), 6);
            for (int n = 1; n <= 6; ++n) {
                const complexd expect = h0.coeffs[n] * std::polar(1.0, n * phi);
                CHECK(std::abs(hp.coeffs[n] - expect) < 1e-9);
            }
        }
    }
}

TEST_CASE("harmonics decay geometrically with constant ratio r < 1") {
    for (double lam = 0.1; lam < 0.95; lam += 0.1) {
        auto h = chi_harmonics(drive(lam), 8);
        const double r = (1.0 - std::sqrt(1.0 - lam * lam)) / lam;
        CHECK(r < 1.0);
        for (int n = 1; n < 8; ++n) {
            // ratios of coefficients beneath the quadrature roundoff floor
            // (~1e-16 absolute) are not meaningful
            if (std::abs(h.coeffs[n + 1]) < 1e-8) break;
            const double ratio = std::abs(h.coeffs[n + 1]) / std::abs(h.coeffs[n]);
            CHECK(std::abs(ratio - r) < 1e-8);
        }
    }
}

TEST_CASE("drive validation") {
    CHECK_THROWS_AS(chi_harmonics(drive(1.0), 4), std::invalid_argument);
    CHECK_THROWS_AS(chi_harmonics(drive(-0.1), 4), std::invalid_argument);
    CHECK_THROWS_AS(chi_harmonics(DriveSpec{0.5, 0.0, 0.0}, 4), std::invalid_argument);
    CHECK_THROWS_AS(chi_harmonics(drive(0.5), 0), std::invalid_argument);
}

TEST_CASE("drive strengths K_n") {
    auto h = chi_harmonics_closed_form(drive(0.5), 4);
    auto k = drive_strengths(6.0, 15.0, h);
    CHECK(std::abs(k[0]) == doctest::Approx(0.247520861407).epsilon(1e-9));
    // K2/K1 = (xi2/xi1)/2 = r/2
    CHECK(std::abs(k[1] / k[0]) == doctest::Approx(0.267949192431 / 2.0).epsilon(1e-9));
    auto k0 = drive_strengths(6.0, 15.0, chi_harmonics_closed_form(drive(1e-9), 4));
    for (const auto& v : k0) CHECK(std::abs(v) < 1e-8);
    WarningList w;
    drive_strengths(6.0, 5.0, h, &w); // |K1| = 0.74
    CHECK(!w.empty());
    CHECK_THROWS_AS(drive_strengths(6.0, 0.0, h), std::invalid_argument);
}

TEST_CASE("dispersive shift") {
    CHECK(dispersive_shift(60.0, 600.0) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(dispersive_shift(0.0, 600.0) == 0.0);
    CHECK(dispersive_shift(60.0, -600.0) == doctest::Approx(-6.0).epsilon(1e-14));
    CHECK_THROWS_AS(dispersive_shift(60.0, 0.0), std::invalid_argument);
    WarningList w;
    dispersive_shift(60.0, 200.0, &w);
    CHECK(!w.empty());
}

TEST_CASE("Kerr-resonator dispersive shift") {
    CHECK(kerr_dispersive_shift(60.0, 600.0, 1e9) == doctest::Approx(6.0).epsilon(1e-5));
    CHECK(kerr_dispersive_shift(60.0, 600.0, 0.0) == 0.0);
    CHECK(kerr_dispersive_shift(60.0, 600.0, -300.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(kerr_dispersive_shift(60.0, 600.0, 600.0), std::invalid_argument);
}

TEST_CASE("qubit-mediated coupling") {
    auto mc = mediated_coupling(60.0, 60.0, 600.0, 600.0);
    CHECK(mc.g12 == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(mc.delta12_prime == 0.0);
    mc = mediated_coupling(60.0, 60.0, 600.0, 615.0);
    CHECK(mc.g12 == doctest::Approx(5.926829268293).epsilon(1e-12));
    CHECK(mc.delta12_prime == doctest::Approx(14.853658536585).epsilon(1e-12));
    mc = mediated_coupling(1e-8, 1e-8, 600.0, 615.0);
    CHECK(mc.g12 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mc.delta12_prime == doctest::Approx(15.0).epsilon(1e-12));
    CHECK_THROWS_AS(mediated_coupling(60.0, 60.0, 0.0, 615.0), std::invalid_argument);
    WarningList w;
    mediated_coupling(60.0, 60.0, 600.0, 800.0, &w); // detuning spread too large
    CHECK(!w.empty());
}

TEST_CASE("renormalized detuning") {
    CHECK(renormalized_detuning({0.0, 15.0}, 0.0, 1.1547) == doctest::Approx(15.0));
    const double expect = 15.0 + 2.0 / 15.0 + 6.0 * 1.1547;
    CHECK(renormalized_detuning({1.0, 15.0}, 6.0, 1.1547) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK(renormalized_detuning({1.0, -15.0}, 0.0, 1.0) ==
          doctest::Approx(-(15.0 + 2.0 / 15.0)).epsilon(1e-12));
    CHECK_THROWS_AS(renormalized_detuning({1.0, 0.0}, 6.0, 1.0), std::invalid_argument);
}

TEST_CASE("dressed dispersive branch reduces to chi0 * harmonics for weak coupling") {
    const double gp = 0.05, dp = 600.0;
    auto dressed = dressed_chi_harmonics(gp, dp, drive(0.5), 3);
    auto bare = chi_harmonics(drive(0.5), 3);
    const double chi0 = gp * gp / dp;
    CHECK(dressed.mean() / chi0 == doctest::Approx(bare.coeffs[0].real()).epsilon(1e-6));
    CHECK(dressed.coeffs[1].real() / chi0 ==
          doctest::Approx(bare.coeffs[1].real()).epsilon(1e-6));
    // odd in delta_p
    auto neg = dressed_chi_harmonics(gp, -dp, drive(0.5), 3);
    CHECK(neg.mean() == doctest::Approx(-dressed.mean()).epsilon(1e-10));
    // strong coupling pulls the mean below the perturbative value
    auto strong = dressed_chi_harmonics(60.0, 600.0, drive(0.5), 3);
    CHECK(strong.mean() < 6.0 * bare.coeffs[0].real());
    CHECK(strong.mean() > 6.5);
}
