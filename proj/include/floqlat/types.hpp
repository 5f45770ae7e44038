#pragma once

#include <complex>
#include <Eigen/Dense>

namespace floqlat {

using complexd = std::complex<double>;

// Row-major storage so the hand-rolled row kernels touch contiguous memory.
using cxmat = Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using cxvec = Eigen::VectorXcd;
using realvec = Eigen::VectorXd;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Frequencies in configuration space are ordinary frequencies in MHz;
// the integrators work in angular units (rad/us).
inline double angular(double freq_mhz) { return two_pi * freq_mhz; }

} // namespace floqlat
