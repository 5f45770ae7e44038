#include "floqlat/transport.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "floqlat/dynamics.hpp"
#include "floqlat/kernels.hpp"
#include "floqlat/harmonics.hpp"

namespace floqlat {

Eigen::MatrixXd ScatteringResult::transmissions() const {
    return s.cwiseAbs2();
}

ScatteringResult scattering_matrix(const GaugeLattice& lat, double delta_d) {
    const int n = lat.n_sites;
    bool any_loss = false;
    for (double k : lat.loss) {
        if (k < 0.0) throw std::invalid_argument("scattering_matrix: negative loss");
        any_loss = any_loss || k > 0.0;
    }
    if (!any_loss)
        throw std::invalid_argument("scattering_matrix: no port has kappa > 0");

    Eigen::MatrixXcd h = single_particle_matrix(lat);
    Eigen::MatrixXcd m = complexd(0.0, 1.0) * (delta_d * Eigen::MatrixXcd::Identity(n, n) + h);
    Eigen::VectorXd sqrt_k(n);
    for (int i = 0; i < n; ++i) {
        m(i, i) += lat.loss[i] / 2.0;
        sqrt_k[i] = std::sqrt(lat.loss[i]);
    }
    Eigen::MatrixXcd rhs = sqrt_k.asDiagonal().toDenseMatrix().cast<complexd>();
    Eigen::MatrixXcd x = m.partialPivLu().solve(rhs);
    ScatteringResult out;
    out.delta_d = delta_d;
    out.s = cxmat(Eigen::MatrixXcd::Identity(n, n) - sqrt_k.asDiagonal() * x);
    return out;
}

double circulator_fidelity(const ScatteringResult& res, Circulation direction) {
    if (res.s.rows() != 3 || res.s.cols() != 3)
        throw std::invalid_argument("circulator_fidelity: needs a 3-port scattering matrix");
    const auto t = res.transmissions();
    if (direction == Circulation::ccw)
        return (t(1, 0) + t(2, 1) + t(0, 2)) / 3.0;
    return (t(2, 0) + t(1, 2) + t(0, 1)) / 3.0;
}

SweepResult transmission_sweep(const GaugeLattice& lat, const std::vector<double>& deltas,
                               int input_port) {
    if (input_port < 0 || input_port >= lat.n_sites)
        throw std::invalid_argument("transmission_sweep: input port out of range");
    SweepResult res;
    res.axis_label = "delta_d_MHz";
    res.axis = deltas;
    res.curve_labels.resize(lat.n_sites);
    res.curves.assign(lat.n_sites, std::vector<double>(deltas.size(), 0.0));
    for (int i = 0; i < lat.n_sites; ++i)
        res.curve_labels[i] = "T" + std::to_string(i + 1);
#ifdef FLOQLAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(kernels::max_threads())
#endif
    for (long p = 0; p < static_cast<long>(deltas.size()); ++p) {
        const auto s = scattering_matrix(lat, deltas[p]);
        for (int i = 0; i < lat.n_sites; ++i)
            res.curves[i][p] = std::norm(s.s(i, input_port));
    }
    return res;
}

namespace {

struct EliminatedPortModel {
    double g12 = 0.0, g13 = 0.0, g23 = 0.0; // MHz
    double mod_amp[2] = {0.0, 0.0};         // chi0 * c1, MHz (signed)
    double frame[2] = {0.0, 0.0};           // static-frame detunings of sites 1,2 (MHz)
    double stark[3] = {0.0, 0.0, 0.0};      // dressed offsets per site (MHz)
    double omega_d = 0.0;
    double phi[2] = {0.0, 0.0};
};

EliminatedPortModel port_model(const ThreeSiteFullSpec& spec) {
    if (spec.mode != ThreeSiteMode::qubit_eliminated)
        throw std::invalid_argument("floquet_transmission: needs the qubit-eliminated model");
    EliminatedPortModel m;
    m.g12 = spec.g12;
    m.g13 = spec.g13;
    m.g23 = spec.g23;
    m.omega_d = spec.omega_d;
    const double target = -spec.omega_d;
    const double g3[2] = {spec.g13, spec.g23};
    double j0g2[2];
    for (int i = 0; i < 2; ++i) {
        m.phi[i] = spec.phi[i];
        const double chi0 = spec.g_p[i] * spec.g_p[i] / spec.delta_p[i];
        DriveSpec d;
        d.lambda = spec.lambda(i);
        d.omega_d = spec.omega_d;
        const Harmonics h = chi_harmonics(d, 1);
        m.mod_amp[i] = chi0 * h.coeffs[1].real();
        const double k = std::abs(m.mod_amp[i] / spec.omega_d);
        j0g2[i] = std::pow(g3[i] * std::cyl_bessel_j(0, k), 2);
    }
    const double total = j0g2[0] + j0g2[1];
    for (int i = 0; i < 2; ++i) {
        m.frame[i] = target - (j0g2[i] + total) / target;
        m.stark[i] = j0g2[i] / m.frame[i];
    }
    m.stark[2] = -(j0g2[0] / m.frame[0] + j0g2[1] / m.frame[1]);
    return m;
}

} // namespace

FloquetTransmission floquet_transmission(const ThreeSiteFullSpec& spec, double kappa,
                                         int input_port, double delta_d) {
    if (kappa <= 0.0)
        throw std::invalid_argument("floquet_transmission: kappa must be positive");
    if (input_port < 0 || input_port > 2)
        throw std::invalid_argument("floquet_transmission: input port out of range");
    const EliminatedPortModel m = port_model(spec);

    const double w = angular(m.omega_d);
    const double kh = angular(kappa);
    // Pump referenced to the dressed frequency of the input port.
    const double pump = angular(delta_d - m.stark[input_port]);
    const double f1 = angular(m.frame[0]);
    const double f2 = angular(m.frame[1]);
    const double a1 = angular(m.mod_amp[0]);
    const double a2 = angular(m.mod_amp[1]);
    const double g12 = angular(m.g12), g13 = angular(m.g13), g23 = angular(m.g23);
    const double sqk = std::sqrt(kh);

    Eigen::Vector3cd cin = Eigen::Vector3cd::Zero();
    cin[input_port] = 1.0;

    auto rhs = [&](double t, const Eigen::Vector3cd& x) -> Eigen::Vector3cd {
        const complexd ph1 = std::polar(1.0, f1 * t);
        const complexd ph2 = std::polar(1.0, f2 * t);
        Eigen::Vector3cd hx;
        hx[0] = (a1 * std::cos(w * t + m.phi[0])) * x[0] + g12 * x[1] + g13 * ph1 * x[2];
        hx[1] = g12 * x[0] + (a2 * std::cos(w * t + m.phi[1])) * x[1] + g23 * ph2 * x[2];
        hx[2] = g13 * std::conj(ph1) * x[0] + g23 * std::conj(ph2) * x[1];
        const complexd mi(0.0, -1.0);
        const complexd damp = complexd(kh / 2.0, pump);
        return mi * hx - damp * x - sqk * cin;
    };

    const double period = 1.0 / std::abs(m.omega_d);
    const double scale = std::abs(w) + angular(std::abs(m.frame[0]) + std::abs(m.frame[1]) +
                                               m.g12 + m.g13 + m.g23 +
                                               std::abs(m.mod_amp[0]) + std::abs(m.mod_amp[1]) +
                                               std::abs(delta_d) + kappa);
    const long steps = std::max(32L, static_cast<long>(std::ceil(period * scale * 100.0)));
    const double h = period / double(steps);

    const double t_settle = 20.0 / kh;
    const long max_periods = static_cast<long>(std::ceil(2.5 * t_settle / period)) + 10;

    Eigen::Vector3cd x = Eigen::Vector3cd::Zero();
    Eigen::Vector3d avg = Eigen::Vector3d::Zero(), prev = Eigen::Vector3d::Zero();
    double t = 0.0;
    FloquetTransmission out;
    out.delta_d = delta_d;
    double change = 1.0;
    long p = 0;
    for (; p < max_periods; ++p) {
        avg.setZero();
        for (long s = 0; s < steps; ++s) {
            const Eigen::Vector3cd k1 = rhs(t, x);
            const Eigen::Vector3cd k2 = rhs(t + h / 2, x + (h / 2) * k1);
            const Eigen::Vector3cd k3 = rhs(t + h / 2, x + (h / 2) * k2);
            const Eigen::Vector3cd k4 = rhs(t + h, x + h * k3);
            x += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
            const Eigen::Vector3cd cout = sqk * x + cin;
            avg += cout.cwiseAbs2();
        }
        avg /= double(steps);
        change = (avg - prev).cwiseAbs().maxCoeff() / std::max(1e-12, avg.maxCoeff());
        prev = avg;
        if (p > 0 && t >= t_settle && change < 1e-3) {
            out.converged = true;
            break;
        }
    }
    out.periods = double(std::min(p + 1, max_periods));
    out.transmission = {avg[0], avg[1], avg[2]};
    if (!out.converged && change > 1e-2)
        throw SolverNonConvergence("floquet_transmission: steady state not reached (period-to-period "
                                   "power drift " + std::to_string(change) + " after t_max)");
    return out;
}

SweepResult floquet_transmission_sweep(const ThreeSiteFullSpec& spec, double kappa,
                                       int input_port, const std::vector<double>& deltas) {
    SweepResult res;
    res.axis_label = "delta_d_MHz";
    res.axis = deltas;
    res.curve_labels = {"T1", "T2", "T3"};
    res.curves.assign(3, std::vector<double>(deltas.size(), 0.0));
    std::exception_ptr first_error = nullptr;
#ifdef FLOQLAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(kernels::max_threads())
#endif
    for (long pnt = 0; pnt < static_cast<long>(deltas.size()); ++pnt) {
        try {
            const auto ft = floquet_transmission(spec, kappa, input_port, deltas[pnt]);
            for (int i = 0; i < 3; ++i) res.curves[i][pnt] = ft.transmission[i];
        } catch (...) {
#ifdef FLOQLAT_HAVE_OPENMP
#pragma omp critical
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    return res;
}

SweepResult ab_interference(double j, double kappa, double kappa_p,
                            const std::vector<double>& flux_range) {
    if (kappa <= 0.0 && kappa_p <= 0.0)
        throw std::invalid_argument("ab_interference: all losses are zero");
    SweepResult res;
    res.axis_label = "PhiB_rad";
    res.axis = flux_range;
    res.curve_labels = {"T1", "T2", "T3", "T4"};
    res.curves.assign(4, std::vector<double>(flux_range.size(), 0.0));
#ifdef FLOQLAT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(kernels::max_threads())
#endif
    for (long p = 0; p < static_cast<long>(flux_range.size()); ++p) {
        const double phi = flux_range[p] / 4.0;
        GaugeLattice lat = ab_effective(j, phi, phi);
        lat.loss = {kappa, kappa_p, kappa_p, kappa};
        const auto s = scattering_matrix(lat, 0.0);
        for (int i = 0; i < 4; ++i) res.curves[i][p] = std::norm(s.s(i, 0));
    }
    return res;
}

} // namespace floqlat
