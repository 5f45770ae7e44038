#pragma once

#include <string>
#include <vector>

#include "floqlat/types.hpp"

namespace floqlat {

// Directed hopping convention: an entry (i, j, J, phi) contributes
// J e^{i phi} b_i^dag b_j (+ H.c.), i.e. the single-particle matrix gets
// H[i][j] = J e^{i phi}. Amplitudes are kept >= 0; a negative input folds
// a pi into the phase.
struct Hopping {
    int i = 0;
    int j = 0;
    double amplitude = 0.0; // MHz, >= 0
    double phase = 0.0;     // rad
};

struct GaugeLattice {
    int n_sites = 0;
    std::vector<Hopping> hoppings;
    std::vector<double> onsite; // MHz
    std::vector<double> loss;   // kappa_i, MHz, >= 0

    explicit GaugeLattice(int n = 0)
        : n_sites(n), onsite(n, 0.0), loss(n, 0.0) {}

    void add_hopping(int i, int j, double amplitude, double phase);
    // Phase for a directed step u -> v; throws if the edge is absent.
    double step_phase(int u, int v) const;
    bool has_edge(int u, int v) const;
};

struct FluxReport {
    std::vector<int> cycle;
    double flux = 0.0; // rad, wrapped to (-pi, pi]
};

double wrap_phase(double phi); // to (-pi, pi]

// Hermitian single-particle matrix (MHz): onsite on the diagonal plus the
// hopping phases. Losses are not included.
cxmat single_particle_matrix(const GaugeLattice& lat);

// Sum of directed phases along a closed walk c0 -> c1 -> ... -> c0.
FluxReport loop_flux(const GaugeLattice& lat, const std::vector<int>& cycle);

// phi_ij -> phi_ij + theta_i - theta_j; amplitudes, onsite, losses unchanged.
GaugeLattice gauge_transform(const GaugeLattice& lat, const std::vector<double>& site_phases);

// Fluxes of the fundamental cycles of a spanning tree (one per non-tree edge).
std::vector<FluxReport> fundamental_cycle_fluxes(const GaugeLattice& lat);

// True iff every independent cycle flux is 0 mod pi (tolerance 1e-9).
bool trs_invariant(const GaugeLattice& lat);

// Site phases that make every hopping phase 0 mod pi; only valid when
// trs_invariant holds (fundamental-cycle construction along a spanning tree).
std::vector<double> real_gauge_phases(const GaugeLattice& lat);

// Two detuned cavities bridged by one modulated qubit: J = g12 K1 / 2 at
// phase detuning_sign * phi (sign +1 for the delta12 = -omega_d branch).
GaugeLattice two_site_effective(double g12, double k1, double phi, int detuning_sign,
                                std::vector<std::string>* warnings = nullptr);

// Three-site loop: J12 = g12 - g13 g23/omega_d at phase 0,
// J23 = g23 K2/2 at phase phi2, J31 = g13 K1/2 at phase -phi1.
GaugeLattice three_site_effective(double g12, double g13, double g23, double omega_d,
                                  double k1, double k2, double phi1, double phi2);

// Four-site interference plaquette 1-2-4-3-1 (0-based edges (0,1,+p1),
// (1,3,+p4), (2,3,-p4), (0,2,-p1)); loop flux 2(phi1 + phi4).
GaugeLattice ab_effective(double j, double phi1, double phi4);

// Uniform triangle with phase phi_c on each directed edge 0->1->2->0.
GaugeLattice uniform_triangle(double j, double phi_c);

enum class Boundary { open, periodic };

struct LadderSpec {
    int n_rungs = 2;
    double t_prime = 0.0; // leg hopping, MHz
    double j_rung = 0.0;  // rung hopping, MHz
    double phi = 0.0;     // per-link leg phase; plaquette flux 2 phi
    Boundary boundary = Boundary::periodic;
};

// Sites 0..N-1 are leg a, N..2N-1 leg b. Leg a carries e^{+i phi} per link,
// leg b e^{-i phi}.
GaugeLattice ladder_lattice(const LadderSpec& spec);

cxmat ladder_hamiltonian(const LadderSpec& spec);

// Bands E_-(k) <= E_+(k) of the 2x2 Bloch matrix
// [[2t' cos(k - phi), J], [J, 2t' cos(k + phi)]].
std::pair<std::vector<double>, std::vector<double>>
ladder_bloch_spectrum(double t_prime, double j_rung, double phi,
                      const std::vector<double>& k_grid);

// Sorted eigenvalues of the single-particle matrix (MHz).
std::vector<double> lattice_spectrum(const GaugeLattice& lat);

std::string lattice_to_json(const GaugeLattice& lat);
GaugeLattice lattice_from_json(const std::string& text);

} // namespace floqlat
