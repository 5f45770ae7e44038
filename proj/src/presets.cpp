#include "floqlat/presets.hpp"

#include <cmath>

namespace floqlat {

FourierPreset preset_figure2() {
    FourierPreset p;
    p.drive.lambda = 0.5;
    p.drive.omega_d = 15.0;
    p.drive.phi = 0.0;
    p.n_max = 8;
    return p;
}

RabiPreset preset_figure3() {
    RabiPreset p;
    p.spec.g12 = 1.0;
    p.spec.g_p = 60.0;
    p.spec.delta_p = 600.0;
    p.spec.omega_p = 300.0; // lambda = 0.5
    p.spec.omega_d = 15.0;
    p.spec.delta12 = -15.0; // delta12 = -omega_d, encoded phase +phi
    p.spec.phi = 0.0;
    p.spec.boson_dim = 3;

    p.lambda = p.spec.lambda();
    p.chi0 = dispersive_shift(p.spec.g_p, p.spec.delta_p);
    DriveSpec d{p.lambda, p.spec.omega_d, 0.0};
    const auto k = drive_strengths(p.chi0, p.spec.omega_d, chi_harmonics_closed_form(d, 2));
    p.k1 = std::abs(k[0]);
    p.j12 = p.spec.g12 * p.k1 / 2.0;
    p.t_max = 2.0 / (4.0 * p.j12); // two swap windows at the leading-order J12
    p.notes.push_back("figure3 preset fixes lambda = 0.5, i.e. Omega_p = 300 MHz = lambda * Delta_p");
    return p;
}

CirculatorPreset preset_figure5() {
    CirculatorPreset p;
    p.spec.mode = ThreeSiteMode::qubit_eliminated;
    p.spec.g12 = 0.042;
    p.spec.g13 = 1.1;
    p.spec.g23 = 1.1;
    p.spec.omega_d = -20.0;
    for (int i = 0; i < 2; ++i) {
        p.spec.g_p[i] = 60.0;
        p.spec.delta_p[i] = 600.0;
        p.spec.omega_p[i] = 300.0; // lambda = 0.5
    }
    p.spec.boson_dim = 3;
    p.kappa = 0.2;
    p.flux = M_PI / 2.0;
    p.spec.phi[0] = -p.flux / 2.0;
    p.spec.phi[1] = p.flux / 2.0;

    const double chi0 = dispersive_shift(p.spec.g_p[0], p.spec.delta_p[0]);
    DriveSpec d{0.5, p.spec.omega_d, 0.0};
    const Harmonics h = chi_harmonics_closed_form(d, 2);
    p.k1 = chi0 * h.coeffs[1].real() / p.spec.omega_d;
    p.j12 = p.spec.g12 - p.spec.g13 * p.spec.g23 / p.spec.omega_d;
    p.j23 = p.spec.g23 * p.k1 / 2.0;
    p.phi_c = p.flux / 3.0;
    p.notes.push_back("figure5 preset fixes lambda = 0.5, i.e. Omega_p = 300 MHz = lambda * Delta_p");
    return p;
}

AbPreset preset_figure7() {
    AbPreset p;
    p.j = 0.1; // g K / 2 with g = 1 MHz, K = 0.2
    p.kappa = 0.2;
    p.kappa_p = 0.02;
    p.notes.push_back("figure7 preset: J = g K/2 = 0.1 MHz (g = 1 MHz, K = 0.2), kappa = 0.2 MHz");
    return p;
}

} // namespace floqlat
