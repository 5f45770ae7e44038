#include "floqlat/kernels.hpp"

#include <cstdlib>
#include <string>

#ifdef FLOQLAT_HAVE_OPENMP
#include <omp.h>
#endif

namespace floqlat::kernels {

namespace {

int env_threads() {
#ifdef FLOQLAT_HAVE_OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    if (const char* s = std::getenv("FLOQLAT_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1 && n < hw) return n;
        if (n == 1) return 1;
    }
    return hw;
}

int g_threads_override = 0;

inline complexd row_dot(const complexd* row, const complexd* x, int n) {
    complexd acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) acc += row[k] * x[k];
    return acc;
}

inline void row_accumulate(const complexd* s_row, const cxmat* const* D,
                           const double* c, int n_terms, complexd* out,
                           int i, int n) {
    for (int k = 0; k < n; ++k) out[k] = s_row[k];
    for (int j = 0; j < n_terms; ++j) {
        const complexd* d_row = D[j]->data() + static_cast<ptrdiff_t>(i) * n;
        const double cj = c[j];
        for (int k = 0; k < n; ++k) out[k] += cj * d_row[k];
    }
}

} // namespace

int max_threads() {
    if (g_threads_override > 0) return g_threads_override;
    static const int n = env_threads();
    return n;
}

void set_max_threads(int n) { g_threads_override = n; }

void matvec_serial(const cxmat& A, const cxvec& x, cxvec& y) {
    const int n = static_cast<int>(A.rows());
    y.resize(n);
    const complexd* xp = x.data();
    for (int i = 0; i < n; ++i)
        y[i] = row_dot(A.data() + static_cast<ptrdiff_t>(i) * A.cols(), xp, static_cast<int>(A.cols()));
}

void matvec_omp(const cxmat& A, const cxvec& x, cxvec& y) {
    const int n = static_cast<int>(A.rows());
    const int m = static_cast<int>(A.cols());
    y.resize(n);
    const complexd* xp = x.data();
    complexd* yp = y.data();
#ifdef FLOQLAT_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
    for (int i = 0; i < n; ++i)
        yp[i] = row_dot(A.data() + static_cast<ptrdiff_t>(i) * m, xp, m);
}

void matvec(const cxmat& A, const cxvec& x, cxvec& y) {
    if (max_threads() > 1 && A.rows() >= parallel_cutoff)
        matvec_omp(A, x, y);
    else
        matvec_serial(A, x, y);
}

void accumulate_serial(const cxmat& S, const cxmat* const* D, const double* c,
                       int n_terms, cxmat& B) {
    const int n = static_cast<int>(S.rows());
    B.resize(n, n);
    for (int i = 0; i < n; ++i)
        row_accumulate(S.data() + static_cast<ptrdiff_t>(i) * n, D, c, n_terms,
                       B.data() + static_cast<ptrdiff_t>(i) * n, i, n);
}

void accumulate_omp(const cxmat& S, const cxmat* const* D, const double* c,
                    int n_terms, cxmat& B) {
    const int n = static_cast<int>(S.rows());
    B.resize(n, n);
#ifdef FLOQLAT_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(max_threads())
#endif
    for (int i = 0; i < n; ++i)
        row_accumulate(S.data() + static_cast<ptrdiff_t>(i) * n, D, c, n_terms,
                       B.data() + static_cast<ptrdiff_t>(i) * n, i, n);
}

void accumulate(const cxmat& S, const cxmat* const* D, const double* c,
                int n_terms, cxmat& B) {
    if (max_threads() > 1 && S.rows() >= parallel_cutoff)
        accumulate_omp(S, D, c, n_terms, B);
    else
        accumulate_serial(S, D, c, n_terms, B);
}

} // namespace floqlat::kernels
