#include "floqlat/harmonics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace floqlat {

namespace {

void check_drive(const DriveSpec& d) {
    if (d.lambda < 0.0)
        throw std::invalid_argument("drive: lambda must be >= 0");
    if (d.lambda >= 1.0)
        throw std::invalid_argument("drive: lambda must be < 1 (dispersive condition)");
    if (d.omega_d == 0.0)
        throw std::invalid_argument("drive: omega_d must be nonzero");
}

// Trapezoid Fourier analysis of a 2pi-periodic sample set.
Harmonics fourier_of(const std::function<double(double)>& f, const DriveSpec& drive,
                     int n_max, int samples) {
    Harmonics h;
    h.lambda = drive.lambda;
    h.phi = drive.phi;
    h.coeffs.assign(n_max + 1, complexd(0.0, 0.0));
    std::vector<double> vals(samples);
    for (int k = 0; k < samples; ++k) {
        const double theta = -M_PI + two_pi * k / samples;
        vals[k] = f(theta);
    }
    double mean = 0.0;
    for (double v : vals) mean += v;
    h.coeffs[0] = mean / samples;
    for (int n = 1; n <= n_max; ++n) {
        complexd acc(0.0, 0.0);
        for (int k = 0; k < samples; ++k) {
            const double theta = -M_PI + two_pi * k / samples;
            acc += vals[k] * std::polar(1.0, -n * theta);
        }
        h.coeffs[n] = 2.0 * acc / double(samples);
    }
    return h;
}

} // namespace

Harmonics chi_harmonics(const DriveSpec& drive, int n_max, int samples) {
    check_drive(drive);
    if (n_max < 1) throw std::invalid_argument("chi_harmonics: n_max must be >= 1");
    const double lam = drive.lambda, phi = drive.phi;
    return fourier_of([lam, phi](double theta) { return 1.0 / (1.0 + lam * std::cos(theta + phi)); },
                      drive, n_max, samples);
}

Harmonics chi_harmonics_closed_form(const DriveSpec& drive, int n_max) {
    check_drive(drive);
    if (n_max < 1) throw std::invalid_argument("chi_harmonics: n_max must be >= 1");
    Harmonics h;
    h.lambda = drive.lambda;
    h.phi = drive.phi;
    h.coeffs.assign(n_max + 1, complexd(0.0, 0.0));
    const double s = std::sqrt(1.0 - drive.lambda * drive.lambda);
    h.coeffs[0] = 1.0 / s;
    const double r = drive.lambda > 0.0 ? (1.0 - s) / drive.lambda : 0.0;
    double rn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        rn *= -r;
        h.coeffs[n] = (2.0 * rn / s) * std::polar(1.0, n * drive.phi);
    }
    return h;
}

std::vector<complexd> drive_strengths(double chi0, double omega_d, const Harmonics& h,
                                      WarningList* warnings) {
    if (omega_d == 0.0)
        throw std::invalid_argument("drive_strengths: omega_d must be nonzero");
    std::vector<complexd> k;
    for (int n = 1; n <= h.n_max(); ++n)
        k.push_back(chi0 * h.coeffs[n] / (n * omega_d));
    if (warnings && !k.empty() && std::abs(k[0]) >= 0.5)
        warnings->push_back("drive_strengths: |K_1| = " + std::to_string(std::abs(k[0])) +
                            " >= 0.5; sideband expansion unreliable");
    return k;
}

double dispersive_shift(double g_p, double delta_p, WarningList* warnings) {
    if (delta_p == 0.0)
        throw std::invalid_argument("dispersive_shift: delta_p must be nonzero");
    if (warnings && std::abs(delta_p) < 5.0 * std::abs(g_p))
        warnings->push_back("dispersive_shift: |delta_p| < 5 g_p, outside the dispersive regime");
    return g_p * g_p / delta_p;
}

double kerr_dispersive_shift(double g_p, double delta_p, double kerr, WarningList* warnings) {
    if (delta_p == 0.0)
        throw std::invalid_argument("kerr_dispersive_shift: delta_p must be nonzero");
    if (delta_p == kerr)
        throw std::invalid_argument("kerr_dispersive_shift: pole at delta_p == K");
    if (warnings && std::abs(delta_p) < 5.0 * std::abs(g_p))
        warnings->push_back("kerr_dispersive_shift: |delta_p| < 5 g_p, outside the dispersive regime");
    return -g_p * g_p * kerr / (delta_p * (delta_p - kerr));
}

MediatedCoupling mediated_coupling(double g1, double g2, double delta1, double delta2,
                                   WarningList* warnings) {
    if (delta1 == 0.0 || delta2 == 0.0)
        throw std::invalid_argument("mediated_coupling: detunings must be nonzero");
    if (warnings) {
        if (std::abs(delta1) < 5.0 * std::abs(g1) || std::abs(delta2) < 5.0 * std::abs(g2))
            warnings->push_back("mediated_coupling: |delta_i| < 5 g_i, outside the dispersive regime");
        const double minab = std::min(std::abs(delta1), std::abs(delta2));
        if (std::abs(delta2 - delta1) > 0.2 * minab)
            warnings->push_back("mediated_coupling: |delta2 - delta1| > 0.2 min|delta_i|; "
                                "equal-detuning expansion degrades");
    }
    MediatedCoupling mc;
    mc.g12 = 0.5 * g1 * g2 * (1.0 / delta1 + 1.0 / delta2);
    mc.delta12_prime = (delta2 - delta1) * (1.0 - g1 * g2 / (delta1 * delta2));
    return mc;
}

double renormalized_detuning(const MediatedCoupling& mc, double chi0, double c0) {
    if (mc.delta12_prime == 0.0)
        throw std::invalid_argument("renormalized_detuning: delta12' = 0; the Stark term is "
                                    "singular (resonant cavities need no Floquet bridge)");
    return mc.delta12_prime + 2.0 * mc.g12 * mc.g12 / mc.delta12_prime + chi0 * c0;
}

Harmonics dressed_chi_harmonics(double g_p, double delta_p, const DriveSpec& drive,
                                int n_max, int samples) {
    check_drive(drive);
    if (delta_p == 0.0)
        throw std::invalid_argument("dressed_chi_harmonics: delta_p must be nonzero");
    const double lam = drive.lambda, phi = drive.phi;
    // Eigenbranch adiabatically connected to the bare |g, n=1> state; the
    // denominator never crosses zero since lambda < 1 keeps sign(Delta_p(t)).
    auto branch = [g_p, delta_p, lam, phi](double theta) {
        const double d = delta_p * (1.0 + lam * std::cos(theta + phi));
        return 0.5 * (std::copysign(std::sqrt(d * d + 4.0 * g_p * g_p), d) - d);
    };
    return fourier_of(branch, drive, n_max, samples);
}

} // namespace floqlat
