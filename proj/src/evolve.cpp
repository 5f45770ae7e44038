#include "floqlat/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "floqlat/kernels.hpp"

namespace floqlat {

const std::vector<double>& Trajectory::series(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return observables[i];
    throw std::out_of_range("trajectory has no observable '" + label + "'");
}

namespace {

constexpr double hermiticity_tol = 1e-12;

double inf_norm(const cxmat& m) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

struct Stepper {
    cxmat static_sum;
    std::vector<const cxmat*> driven;
    std::vector<const DrivenTerm*> terms;
    std::vector<double> coef;
    cxmat hwork;
    cxvec k1, k2, k3, k4, ytmp;

    explicit Stepper(const TimeDependentModel& model) {
        const int n = model.space.total_dim;
        static_sum = cxmat::Zero(n, n);
        for (const auto& t : model.static_terms) static_sum += t.matrix;
        // Center the static spectrum; shifts only a global phase.
        complexd tr = static_sum.trace();
        static_sum -= (tr / double(n)) * cxmat::Identity(n, n);
        for (const auto& d : model.driven_terms) {
            driven.push_back(&d.op.matrix);
            terms.push_back(&d);
        }
        coef.resize(driven.size());
        k1.resize(n); k2.resize(n); k3.resize(n); k4.resize(n); ytmp.resize(n);
    }

    void rhs(double t, const cxvec& y, cxvec& out) {
        if (driven.empty()) {
            kernels::matvec(static_sum, y, out);
        } else {
            for (size_t j = 0; j < driven.size(); ++j) coef[j] = terms[j]->envelope(t);
            kernels::accumulate(static_sum, driven.data(), coef.data(),
                                static_cast<int>(driven.size()), hwork);
            kernels::matvec(hwork, y, out);
        }
        const complexd mi(0.0, -1.0);
        for (Eigen::Index i = 0; i < out.size(); ++i) out[i] *= mi;
    }

    void step(double t, double h, cxvec& y) {
        rhs(t, y, k1);
        ytmp = y + (h / 2) * k1;
        rhs(t + h / 2, ytmp, k2);
        ytmp = y + (h / 2) * k2;
        rhs(t + h / 2, ytmp, k3);
        ytmp = y + h * k3;
        rhs(t + h, ytmp, k4);
        y += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
};

void validate_model(const TimeDependentModel& model) {
    const int n = model.space.total_dim;
    for (const auto& t : model.static_terms) {
        if (t.matrix.rows() != n || t.matrix.cols() != n)
            throw std::invalid_argument("evolve: static term dimension mismatch");
        if (t.hermiticity_defect() > hermiticity_tol)
            throw std::invalid_argument("evolve: non-Hermitian static term");
    }
    for (const auto& d : model.driven_terms) {
        if (d.op.matrix.rows() != n || d.op.matrix.cols() != n)
            throw std::invalid_argument("evolve: driven term dimension mismatch");
        if (d.op.hermiticity_defect() > hermiticity_tol)
            throw std::invalid_argument("evolve: non-Hermitian driven term");
        if (!d.envelope)
            throw std::invalid_argument("evolve: driven term without envelope");
    }
}

double pick_step(const TimeDependentModel& model, const EvolveOptions& opts) {
    const double scale = rate_scale(model);
    if (scale <= 0.0) return opts.dt > 0.0 ? opts.dt : 1.0;
    const double cap = 1.0 / (50.0 * scale);
    if (opts.dt > 0.0) {
        if (opts.dt > cap * (1.0 + 1e-12))
            throw std::invalid_argument("evolve: step size exceeds 1/(50 * fastest rate)");
        return opts.dt;
    }
    const double margin = std::max(opts.rate_margin, 50.0);
    return 1.0 / (margin * scale);
}

} // namespace

double rate_scale(const TimeDependentModel& model) {
    const int n = model.space.total_dim;
    cxmat s = cxmat::Zero(n, n);
    for (const auto& t : model.static_terms) s += t.matrix;
    double scale = inf_norm(s);
    for (const auto& d : model.driven_terms) {
        scale += std::abs(d.amp_bound) * inf_norm(d.op.matrix);
        scale = std::max(scale, std::abs(d.ang_freq));
    }
    return scale;
}

Trajectory evolve(const TimeDependentModel& model, const cxvec& initial,
                  const std::vector<double>& t_grid,
                  const std::vector<std::pair<std::string, Operator>>& observables,
                  const EvolveOptions& opts) {
    const int n = model.space.total_dim;
    if (initial.size() != n)
        throw std::invalid_argument("evolve: initial state dimension mismatch");
    if (std::abs(initial.norm() - 1.0) > 1e-6)
        throw std::invalid_argument("evolve: initial state is not normalized");
    if (t_grid.empty())
        throw std::invalid_argument("evolve: empty time grid");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("evolve: time grid must be strictly increasing");
    validate_model(model);
    for (const auto& [label, op] : observables)
        if (op.matrix.rows() != n)
            throw std::invalid_argument("evolve: observable dimension mismatch for '" + label + "'");

    const double dt = pick_step(model, opts);
    Stepper stepper(model);

    Trajectory traj;
    traj.times = t_grid;
    for (const auto& [label, op] : observables) {
        traj.labels.push_back(label);
        traj.observables.emplace_back();
        traj.observables.back().reserve(t_grid.size());
    }
    traj.norms.reserve(t_grid.size());

    // Top-Fock-level occupancy per boson mode, for the truncation warning.
    std::vector<double> leak_max(model.space.size(), 0.0);

    cxvec psi = initial;
    cxvec owork(n);
    auto sample = [&](const cxvec& y) {
        traj.norms.push_back(y.norm());
        for (size_t k = 0; k < observables.size(); ++k) {
            kernels::matvec(observables[k].second.matrix, y, owork);
            traj.observables[k].push_back(std::real(y.dot(owork)));
        }
        for (int k = 0; k < model.space.size(); ++k) {
            const auto& sub = model.space.subsystems[k];
            if (sub.kind != SubsystemKind::boson) continue;
            const int stride = model.space.strides[k];
            const int top = sub.dim - 1;
            double pop = 0.0;
            for (int i = 0; i < n; ++i)
                if ((i / stride) % sub.dim == top) pop += std::norm(y[i]);
            leak_max[k] = std::max(leak_max[k], pop);
        }
    };

    sample(psi);
    double t = t_grid[0];
    for (size_t g = 1; g < t_grid.size(); ++g) {
        const double span = t_grid[g] - t;
        const long m = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-12)));
        const double h = span / double(m);
        for (long s = 0; s < m; ++s) stepper.step(t + s * h, h, psi);
        t = t_grid[g];
        sample(psi);
    }

    for (int k = 0; k < model.space.size(); ++k) {
        if (leak_max[k] > 1e-6) {
            traj.warnings.push_back("truncation leakage: top Fock level of subsystem " +
                                    std::to_string(k) + " reached population " +
                                    std::to_string(leak_max[k]));
        }
    }
    return traj;
}

cxvec evolve_state(const TimeDependentModel& model, const cxvec& initial,
                   double t0, double t1, double dt) {
    validate_model(model);
    Stepper stepper(model);
    cxvec psi = initial;
    const double span = t1 - t0;
    const long m = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-12)));
    const double h = span / double(m);
    for (long s = 0; s < m; ++s) stepper.step(t0 + s * h, h, psi);
    return psi;
}

} // namespace floqlat
