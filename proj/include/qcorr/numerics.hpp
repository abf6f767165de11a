#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "qcorr/types.hpp"

namespace qcorr {

// Closed interval [lo, hi], lo < hi.
struct Interval {
    double lo;
    double hi;
};

struct QuadratureResult {
    double value;
    double error_estimate;   // conservative absolute error bound
    std::int64_t evaluations;
};

// Adaptive Gauss-Kronrod (G7,K15) integration of f over iv.  Panels are split
// until the summed error estimate is below max(abs_tol, rel_tol*|value|).
// Throws NonConvergent if the tolerance is not met within 2^15 panels.
QuadratureResult integrate(const std::function<double(double)>& f, Interval iv,
                           double rel_tol = 1e-10, double abs_tol = 1e-12);

// Angular kernel g(f) = f/sqrt(1-f) * asinh(sqrt((1-f)/f)) on [0, 1], with the
// limit values g(0) = 0 and g(1) = 1 taken exactly.  Inputs within 1e-12
// outside [0, 1] are treated as the nearest endpoint; beyond that throws
// DomainError.  Monotone increasing on the domain.
double sigma_kernel(double f);

// E(s) = Integral_0^{pi/2} sqrt(1 - (2 - s^2) sin^2(phi)) dphi for s in
// [1, sqrt(3)].  E(1) = 1, E(sqrt(2)) = pi/2.  Tolerated slack at the domain
// ends is 1e-12; beyond that throws DomainError.
double e_integral(double s);

// Singular values of a real 3x3 matrix, descending.  Eigenvalues of M^T M via
// cyclic Jacobi sweeps, then square roots.
std::array<double, 3> svd3(const Mat3& m);

// Eigenvalues of a 4x4 Hermitian matrix, ascending.  Throws NotHermitian when
// the Hermiticity residual exceeds 1e-10.
std::array<double, 4> hermitian_eigen4(const Mat4c& h);

// Bisection root of f on iv; requires a sign change (throws NoSignChange
// otherwise).  Stops when the bracket width is at most tol.
double bisect(const std::function<double(double)>& f, Interval iv, double tol);

}  // namespace qcorr
