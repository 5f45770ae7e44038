#pragma once

#include <vector>

#include "floqlat/types.hpp"

namespace floqlat {

// Longitudinal drive on a p-qubit: detuning modulation
// Delta_p(t) = Delta_p * (1 + lambda cos(omega_d t + phi)).
struct DriveSpec {
    double lambda = 0.0;  // Omega_p / Delta_p, 0 <= lambda < 1
    double omega_d = 0.0; // MHz, may be negative, nonzero
    double phi = 0.0;     // rad
};

// Fourier data of the modulated dispersive shift chi(t)/chi0:
//   chi(t)/chi0 = c0 + sum_{n>=1} Re[c_n e^{i n omega_d t}]
// with c_n = xi_n e^{i phi_n}. coeffs[0] is real (the mean), coeffs[n] the
// complex n-th harmonic.
struct Harmonics {
    double lambda = 0.0;
    double phi = 0.0;
    std::vector<complexd> coeffs;

    double mean() const { return coeffs.empty() ? 0.0 : coeffs[0].real(); }
    int n_max() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct DispersiveSpec {
    double g_p = 0.0;     // MHz
    double delta_p = 0.0; // MHz
    double chi0 = 0.0;    // g_p^2 / delta_p, MHz
};

struct MediatedCoupling {
    double g12 = 0.0;           // MHz
    double delta12_prime = 0.0; // MHz
};

using WarningList = std::vector<std::string>;

// Harmonics of 1/(1 + lambda cos(theta + phi)) by periodic trapezoid
// quadrature (spectrally accurate for this smooth integrand).
Harmonics chi_harmonics(const DriveSpec& drive, int n_max, int samples = 4096);

// Same coefficients from the geometric series
//   1/(1+lambda cos t) = (1 + 2 sum_n (-r)^n cos nt)/sqrt(1-lambda^2),
//   r = (1 - sqrt(1-lambda^2))/lambda.
// Kept as an independent oracle for the quadrature route.
Harmonics chi_harmonics_closed_form(const DriveSpec& drive, int n_max);

// K_n = chi0 c_n / (n omega_d), n = 1..n_max. Complex so the drive phase
// rides along; |K_1| >= 0.5 triggers an expansion-validity warning.
std::vector<complexd> drive_strengths(double chi0, double omega_d, const Harmonics& h,
                                      WarningList* warnings = nullptr);

// chi0 = g_p^2 / delta_p
double dispersive_shift(double g_p, double delta_p, WarningList* warnings = nullptr);

// chi0' = -g_p^2 K / (delta_p (delta_p - K)) for a Kerr resonator replacing
// the p-qubit; -> chi0 as |K| -> inf, -> 0 at K = 0.
double kerr_dispersive_shift(double g_p, double delta_p, double kerr,
                             WarningList* warnings = nullptr);

// g12 = (g1 g2 / 2)(1/D1 + 1/D2), delta12' = (D2 - D1)(1 - g1 g2/(D1 D2))
MediatedCoupling mediated_coupling(double g1, double g2, double delta1, double delta2,
                                   WarningList* warnings = nullptr);

// delta12 = delta12' + 2 g12^2/delta12' + chi0 c0
double renormalized_detuning(const MediatedCoupling& mc, double chi0, double c0);

// Fourier data (mean + harmonics) of the exact single-excitation dispersive
// branch chi_ex(t) = (sqrt(Delta_p(t)^2 + 4 g_p^2) - Delta_p(t))/2, in MHz.
// Reduces to chi0 * chi_harmonics(...) as g_p/Delta_p -> 0; used to wire the
// full models onto resonance where the leading-order shift is not accurate
// enough.
Harmonics dressed_chi_harmonics(double g_p, double delta_p, const DriveSpec& drive,
                                int n_max, int samples = 4096);

} // namespace floqlat
