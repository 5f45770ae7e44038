#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "floqlat/lattice.hpp"

namespace floqlat {

struct SolverNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScatteringResult {
    double delta_d = 0.0; // MHz
    cxmat s;              // n_sites x n_sites
    Eigen::MatrixXd transmissions() const; // T_ij = |S_ij|^2
};

struct SweepResult {
    std::string axis_label;
    std::vector<double> axis;
    std::vector<std::string> curve_labels;
    std::vector<std::vector<double>> curves;
};

// S = I - sqrt(K) (i(delta_d I + H) + K/2)^%1 sqrt(K), K = diag(kappa_i).
// Sites with kappa = 0 are internal modes: their rows/columns reduce to the
// identity. Reduces to the Cayley form (i(dI+H)-K/2)(i(dI+H)+K/2)^-1 for
// uniform kappa.
ScatteringResult scattering_matrix(const GaugeLattice& lat, double delta_d);

enum class Circulation { ccw, cw };

// Mean transmission along the target cyclic permutation of a 3-port S.
// ccw routes 1->2->3->1 (port outputs S21, S32, S13).
double circulator_fidelity(const ScatteringResult& s, Circulation direction);

// T_i(delta_d) curves for a fixed input port. Points are independent and
// evaluated in parallel.
SweepResult transmission_sweep(const GaugeLattice& lat, const std::vector<double>& deltas,
                               int input_port = 0);

struct ThreeSiteFullSpec; // dynamics.hpp

struct FloquetTransmission {
    double delta_d = 0.0;
    std::vector<double> transmission; // per port, period-averaged |c_out|^2
    bool converged = false;
    double periods = 0.0;
};

// Time-domain steady-state transmission of the qubit-eliminated modulated
// three-site model: integrate
//   dx/dt = -i H_hop(t) x - (i delta_d + kappa/2) x - sqrt(kappa) c_in
// in the frame rotating at each port's dressed frequency, then average
// |c_out|^2 = |sqrt(kappa) x + c_in|^2 over one modulation period once the
// period-to-period change drops below 1e-3 (relative).
FloquetTransmission floquet_transmission(const ThreeSiteFullSpec& spec, double kappa,
                                         int input_port, double delta_d);

SweepResult floquet_transmission_sweep(const ThreeSiteFullSpec& spec, double kappa,
                                       int input_port, const std::vector<double>& deltas);

// Interference plaquette T_41(Phi_B) with phi1 = phi4 = Phi_B/4, ports 1,4
// carrying kappa and path sites 2,3 carrying kappa_p.
SweepResult ab_interference(double j, double kappa, double kappa_p,
                            const std::vector<double>& flux_range);

} // namespace floqlat
