// Timing comparison of the serial reference kernels against the OpenMP
// variants, on the two workloads that dominate runs: RK4 evolution of a
// dense time-dependent model and an analytic transmission sweep.

#include <cstdio>
#include <random>
#include <vector>

#ifdef FLOQLAT_HAVE_OPENMP
#include <omp.h>
#endif

#include "floqlat/dynamics.hpp"
#include "floqlat/evolve.hpp"
#include "floqlat/kernels.hpp"
#include "floqlat/presets.hpp"
#include "floqlat/transport.hpp"

using namespace floqlat;

namespace {

double now() {
#ifdef FLOQLAT_HAVE_OPENMP
    return omp_get_wtime();
#else
    return double(clock()) / CLOCKS_PER_SEC;
#endif
}

cxmat random_hermitian(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cxmat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = complexd(u(rng), u(rng));
    cxmat h = 0.5 * (m + cxmat(m.adjoint()));
    return h;
}

void bench_matvec(int n, int reps) {
    std::mt19937 rng(7);
    cxmat a = random_hermitian(n, rng);
    cxvec x = cxvec::Random(n), y(n);

    double t0 = now();
    for (int r = 0; r < reps; ++r) kernels::matvec_serial(a, x, y);
    double serial = now() - t0;

    t0 = now();
    for (int r = 0; r < reps; ++r) kernels::matvec_omp(a, x, y);
    double omp = now() - t0;

    std::printf("matvec n=%4d reps=%6d   serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
                n, reps, serial * 1e3, omp * 1e3, serial / omp);
}

void bench_evolution() {
    RabiPreset p = preset_figure3();
    p.spec.boson_dim = 6; // dim 72, representative of the larger models
    TimeDependentModel model = build_two_site_full(p.spec);
    const auto psi0 = basis_state(model.space, {1, 0, 0});
    const double dt = 1.0 / (100.0 * rate_scale(model));

    kernels::set_max_threads(1);
    double t0 = now();
    evolve_state(model, psi0, 0.0, 0.05, dt);
    double serial = now() - t0;

    kernels::set_max_threads(0);
    t0 = now();
    evolve_state(model, psi0, 0.0, 0.05, dt);
    double omp = now() - t0;

    std::printf("rk4 evolution dim=%d, 0.05 us  serial %8.3f ms   omp %8.3f ms   speedup %.2fx\n",
                model.space.total_dim, serial * 1e3, omp * 1e3, serial / omp);
}

void bench_sweep() {
    CirculatorPreset p = preset_figure5();
    GaugeLattice lat = three_site_effective_lattice(p.spec);
    lat.loss.assign(3, p.kappa);
    std::vector<double> deltas(2001);
    for (size_t i = 0; i < deltas.size(); ++i) deltas[i] = -1.0 + 2.0 * i / (deltas.size() - 1);

    kernels::set_max_threads(1);
#ifdef FLOQLAT_HAVE_OPENMP
    omp_set_num_threads(1);
#endif
    double t0 = now();
    auto r1 = transmission_sweep(lat, deltas, 0);
    double serial = now() - t0;

    kernels::set_max_threads(0);
#ifdef FLOQLAT_HAVE_OPENMP
    omp_set_num_threads(kernels::max_threads());
#endif
    t0 = now();
    auto r2 = transmission_sweep(lat, deltas, 0);
    double omp = now() - t0;

    double dmax = 0.0;
    for (size_t c = 0; c < r1.curves.size(); ++c)
        for (size_t i = 0; i < deltas.size(); ++i)
            dmax = std::max(dmax, std::abs(r1.curves[c][i] - r2.curves[c][i]));
    std::printf("transmission sweep 2001 pts     serial %8.3f ms   omp %8.3f ms   speedup %.2fx"
                "   max |serial-omp| = %.3g\n",
                serial * 1e3, omp * 1e3, serial / omp, dmax);
}

} // namespace

int main() {
    std::printf("threads: %d\n", kernels::max_threads());
    for (int n : {32, 64, 128, 256}) bench_matvec(n, 400000 / n);
    bench_evolution();
    bench_sweep();
    return 0;
}
