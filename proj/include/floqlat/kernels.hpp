#pragma once

#include "floqlat/types.hpp"

// Dense complex kernels used in the evolution hot loop. Every kernel has a
// serial reference implementation and an OpenMP row-parallel variant that
// must produce identical results (rows are accumulated in the same order
// either way). The dispatching versions pick a variant from the thread
// configuration and the problem size.

namespace floqlat::kernels {

// y = A x
void matvec_serial(const cxmat& A, const cxvec& x, cxvec& y);
void matvec_omp(const cxmat& A, const cxvec& x, cxvec& y);
void matvec(const cxmat& A, const cxvec& x, cxvec& y);

// B = S + sum_j c[j] * D[j]
void accumulate_serial(const cxmat& S, const cxmat* const* D, const double* c,
                       int n_terms, cxmat& B);
void accumulate_omp(const cxmat& S, const cxmat* const* D, const double* c,
                    int n_terms, cxmat& B);
void accumulate(const cxmat& S, const cxmat* const* D, const double* c,
                int n_terms, cxmat& B);

// Number of worker threads: min(FLOQLAT_THREADS, omp_get_max_threads()),
// 1 when OpenMP is unavailable.
int max_threads();
void set_max_threads(int n); // 0 restores the environment default

// Rows below this count are not worth forking a team for.
inline constexpr int parallel_cutoff = 64;

} // namespace floqlat::kernels
