#pragma once

#include <string>
#include <vector>

#include "floqlat/dynamics.hpp"
#include "floqlat/harmonics.hpp"

namespace floqlat {

// Built-in parameter sets behind the --figure2/3/5/7 CLI switches. Each
// preset fixes lambda = 0.5 directly; the corresponding drive amplitude is
// Omega_p = lambda * Delta_p and a provenance note records that choice.

struct FourierPreset {
    DriveSpec drive;
    int n_max = 8;
};
FourierPreset preset_figure2();

struct RabiPreset {
    TwoSiteFullSpec spec;
    double t_max = 0.0; // two swap windows
    // derived constants for the summary
    double lambda = 0.0, chi0 = 0.0, k1 = 0.0, j12 = 0.0;
    std::vector<std::string> notes;
};
RabiPreset preset_figure3();

struct CirculatorPreset {
    ThreeSiteFullSpec spec;
    double kappa = 0.0;
    double flux = 0.0; // default +pi/2
    // derived constants
    double k1 = 0.0, j12 = 0.0, j23 = 0.0, phi_c = 0.0;
    std::vector<std::string> notes;
};
CirculatorPreset preset_figure5();

struct AbPreset {
    double j = 0.0;      // gK/2, MHz
    double kappa = 0.0;  // port loss, MHz
    double kappa_p = 0.0;// path loss, MHz
    std::vector<std::string> notes;
};
AbPreset preset_figure7();

} // namespace floqlat
