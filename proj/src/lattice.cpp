#include "floqlat/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace floqlat {

double wrap_phase(double phi) {
    double w = std::remainder(phi, two_pi);
    if (w <= -M_PI) w += two_pi;
    return w;
}

void GaugeLattice::add_hopping(int i, int j, double amplitude, double phase) {
    if (i == j) throw std::invalid_argument("lattice: self-hopping not allowed");
    if (i < 0 || j < 0 || i >= n_sites || j >= n_sites)
        throw std::invalid_argument("lattice: hopping site index out of range");
    if (amplitude < 0.0) {
        amplitude = -amplitude;
        phase += M_PI;
    }
    hoppings.push_back({i, j, amplitude, wrap_phase(phase)});
}

bool GaugeLattice::has_edge(int u, int v) const {
    for (const auto& h : hoppings)
        if ((h.i == u && h.j == v) || (h.i == v && h.j == u)) return true;
    return false;
}

double GaugeLattice::step_phase(int u, int v) const {
    for (const auto& h : hoppings) {
        if (h.i == u && h.j == v) return h.phase;
        if (h.i == v && h.j == u) return -h.phase;
    }
    throw std::invalid_argument("lattice: no hopping between sites " + std::to_string(u) +
                                " and " + std::to_string(v));
}

cxmat single_particle_matrix(const GaugeLattice& lat) {
    cxmat m = cxmat::Zero(lat.n_sites, lat.n_sites);
    for (int i = 0; i < lat.n_sites; ++i) m(i, i) = lat.onsite[i];
    for (const auto& h : lat.hoppings) {
        const complexd v = std::polar(h.amplitude, h.phase);
        m(h.i, h.j) += v;
        m(h.j, h.i) += std::conj(v);
    }
    return m;
}

FluxReport loop_flux(const GaugeLattice& lat, const std::vector<int>& cycle) {
    if (cycle.size() < 2)
        throw std::invalid_argument("loop_flux: cycle needs at least two sites");
    FluxReport rep;
    rep.cycle = cycle;
    double sum = 0.0;
    for (size_t k = 0; k < cycle.size(); ++k) {
        const int u = cycle[k];
        const int v = cycle[(k + 1) % cycle.size()];
        sum += lat.step_phase(u, v);
    }
    rep.flux = wrap_phase(sum);
    return rep;
}

GaugeLattice gauge_transform(const GaugeLattice& lat, const std::vector<double>& site_phases) {
    if (static_cast<int>(site_phases.size()) != lat.n_sites)
        throw std::invalid_argument("gauge_transform: phase list length mismatch");
    GaugeLattice out = lat;
    for (auto& h : out.hoppings)
        h.phase = wrap_phase(h.phase + site_phases[h.i] - site_phases[h.j]);
    return out;
}

namespace {

struct SpanningTree {
    std::vector<int> parent;       // -1 at roots
    std::vector<double> accum;     // phase of the tree path root -> site
    std::vector<size_t> tree_edges;
    std::vector<size_t> chords;
};

SpanningTree build_tree(const GaugeLattice& lat) {
    SpanningTree t;
    t.parent.assign(lat.n_sites, -1);
    t.accum.assign(lat.n_sites, 0.0);
    std::vector<bool> seen(lat.n_sites, false);
    std::vector<bool> used(lat.hoppings.size(), false);

    for (int root = 0; root < lat.n_sites; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        // grow greedily until no frontier edge is left
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t e = 0; e < lat.hoppings.size(); ++e) {
                if (used[e]) continue;
                const auto& h = lat.hoppings[e];
                int from = -1, to = -1;
                if (seen[h.i] && !seen[h.j]) { from = h.i; to = h.j; }
                else if (seen[h.j] && !seen[h.i]) { from = h.j; to = h.i; }
                if (from < 0) continue;
                used[e] = true;
                seen[to] = true;
                t.parent[to] = from;
                // phase accumulated walking root -> ... -> from -> to
                t.accum[to] = t.accum[from] + lat.step_phase(from, to);
                t.tree_edges.push_back(e);
                grew = true;
            }
        }
    }
    for (size_t e = 0; e < lat.hoppings.size(); ++e) {
        bool is_tree = false;
        for (size_t te : t.tree_edges) is_tree = is_tree || te == e;
        if (!is_tree) t.chords.push_back(e);
    }
    return t;
}

std::vector<int> tree_path(const SpanningTree& t, int from, int to) {
    // path through the tree: climb both to the root set, then splice
    std::vector<int> up_from{from}, up_to{to};
    for (int v = from; t.parent[v] >= 0; v = t.parent[v]) up_from.push_back(t.parent[v]);
    for (int v = to; t.parent[v] >= 0; v = t.parent[v]) up_to.push_back(t.parent[v]);
    int common = -1;
    for (int a : up_from) {
        for (int b : up_to)
            if (a == b) { common = a; break; }
        if (common >= 0) break;
    }
    if (common < 0) throw std::logic_error("tree_path: disconnected sites");
    std::vector<int> path;
    for (int v : up_from) { path.push_back(v); if (v == common) break; }
    std::vector<int> tail;
    for (int v : up_to) { if (v == common) break; tail.push_back(v); }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) path.push_back(*it);
    return path;
}

} // namespace

std::vector<FluxReport> fundamental_cycle_fluxes(const GaugeLattice& lat) {
    SpanningTree t = build_tree(lat);
    std::vector<FluxReport> out;
    for (size_t e : t.chords) {
        const auto& h = lat.hoppings[e];
        std::vector<int> cycle = tree_path(t, h.j, h.i); // close with edge i<-j
        if (cycle.size() < 2) continue;                  // parallel edge to a tree edge
        FluxReport rep;
        rep.cycle = cycle;
        double sum = lat.step_phase(h.i, h.j); // step i -> j closes the loop
        std::vector<int> full = cycle;
        for (size_t k = 0; k + 1 < full.size(); ++k)
            sum += lat.step_phase(full[k], full[k + 1]);
        // walk order: j -> ... -> i, then i -> j
        rep.flux = wrap_phase(sum);
        out.push_back(rep);
    }
    return out;
}

bool trs_invariant(const GaugeLattice& lat) {
    constexpr double tol = 1e-9;
    for (const auto& rep : fundamental_cycle_fluxes(lat)) {
        const double dist = std::abs(std::remainder(rep.flux, M_PI));
        if (dist > tol) return false;
    }
    return true;
}

std::vector<double> real_gauge_phases(const GaugeLattice& lat) {
    SpanningTree t = build_tree(lat);
    // theta_v = accumulated tree-path phase root -> v zeroes every tree edge
    // (phi'_ij = phi_ij + theta_i - theta_j with theta_j = theta_i + phi_ij);
    // each chord then carries its fundamental-cycle flux, 0 mod pi under TRS.
    return t.accum;
}

GaugeLattice two_site_effective(double g12, double k1, double phi, int detuning_sign,
                                std::vector<std::string>* warnings) {
    if (std::abs(k1) >= 1.0)
        throw std::invalid_argument("two_site_effective: |K1| >= 1, sideband expansion invalid");
    if (warnings && std::abs(k1) >= 0.5)
        warnings->push_back("two_site_effective: |K1| >= 0.5, expansion unreliable");
    if (detuning_sign != 1 && detuning_sign != -1)
        throw std::invalid_argument("two_site_effective: detuning_sign must be +1 or -1");
    GaugeLattice lat(2);
    lat.add_hopping(0, 1, g12 * k1 / 2.0, detuning_sign * phi);
    return lat;
}

GaugeLattice three_site_effective(double g12, double g13, double g23, double omega_d,
                                  double k1, double k2, double phi1, double phi2) {
    if (omega_d == 0.0)
        throw std::invalid_argument("three_site_effective: omega_d must be nonzero");
    GaugeLattice lat(3);
    lat.add_hopping(0, 1, g12 - g13 * g23 / omega_d, 0.0);
    lat.add_hopping(1, 2, g23 * k2 / 2.0, phi2);
    lat.add_hopping(2, 0, g13 * k1 / 2.0, -phi1);
    return lat;
}

GaugeLattice ab_effective(double j, double phi1, double phi4) {
    if (j <= 0.0) throw std::invalid_argument("ab_effective: J must be positive");
    GaugeLattice lat(4);
    lat.add_hopping(0, 1, j, phi1);
    lat.add_hopping(1, 3, j, phi4);
    lat.add_hopping(2, 3, j, -phi4);
    lat.add_hopping(0, 2, j, -phi1);
    return lat;
}

GaugeLattice uniform_triangle(double j, double phi_c) {
    GaugeLattice lat(3);
    lat.add_hopping(0, 1, j, phi_c);
    lat.add_hopping(1, 2, j, phi_c);
    lat.add_hopping(2, 0, j, phi_c);
    return lat;
}

GaugeLattice ladder_lattice(const LadderSpec& spec) {
    if (spec.n_rungs < 2)
        throw std::invalid_argument("ladder: n_rungs must be >= 2");
    const int n = spec.n_rungs;
    GaugeLattice lat(2 * n);
    for (int i = 0; i + 1 < n; ++i) {
        lat.add_hopping(i + 1, i, spec.t_prime, spec.phi);          // leg a
        lat.add_hopping(n + i + 1, n + i, spec.t_prime, -spec.phi); // leg b
    }
    if (spec.boundary == Boundary::periodic) {
        lat.add_hopping(0, n - 1, spec.t_prime, spec.phi);
        lat.add_hopping(n, 2 * n - 1, spec.t_prime, -spec.phi);
    }
    for (int i = 0; i < n; ++i) lat.add_hopping(i, n + i, spec.j_rung, 0.0);
    return lat;
}

cxmat ladder_hamiltonian(const LadderSpec& spec) {
    return single_particle_matrix(ladder_lattice(spec));
}

std::pair<std::vector<double>, std::vector<double>>
ladder_bloch_spectrum(double t_prime, double j_rung, double phi,
                      const std::vector<double>& k_grid) {
    std::vector<double> lower, upper;
    lower.reserve(k_grid.size());
    upper.reserve(k_grid.size());
    for (double k : k_grid) {
        const double avg = 2.0 * t_prime * std::cos(k) * std::cos(phi);
        const double half = std::sqrt(j_rung * j_rung +
                                      4.0 * t_prime * t_prime * std::sin(k) * std::sin(k) *
                                          std::sin(phi) * std::sin(phi));
        lower.push_back(avg - half);
        upper.push_back(avg + half);
    }
    return {lower, upper};
}

std::vector<double> lattice_spectrum(const GaugeLattice& lat) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(single_particle_matrix(lat));
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + lat.n_sites);
    return ev;
}

std::string lattice_to_json(const GaugeLattice& lat) {
    nlohmann::json j;
    j["n_sites"] = lat.n_sites;
    j["edges"] = nlohmann::json::array();
    for (const auto& h : lat.hoppings)
        j["edges"].push_back({{"i", h.i}, {"j", h.j}, {"J_MHz", h.amplitude}, {"phi_rad", h.phase}});
    j["onsite_MHz"] = lat.onsite;
    j["kappa_MHz"] = lat.loss;
    return j.dump(2);
}

GaugeLattice lattice_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GaugeLattice lat(j.at("n_sites").get<int>());
    for (const auto& e : j.at("edges"))
        lat.add_hopping(e.at("i").get<int>(), e.at("j").get<int>(),
                        e.at("J_MHz").get<double>(), e.at("phi_rad").get<double>());
    if (j.contains("onsite_MHz")) lat.onsite = j.at("onsite_MHz").get<std::vector<double>>();
    if (j.contains("kappa_MHz")) lat.loss = j.at("kappa_MHz").get<std::vector<double>>();
    if (static_cast<int>(lat.onsite.size()) != lat.n_sites ||
        static_cast<int>(lat.loss.size()) != lat.n_sites)
        throw std::invalid_argument("lattice json: onsite/kappa length mismatch");
    return lat;
}

} // namespace floqlat
