#pragma once

#include <array>

#include "qcorr/types.hpp"

namespace qcorr {

// Pauli expansion rho = (1/4)(I + r.sigma x I + I x s.sigma + sum T_ij sigma_i x sigma_j).
// All entries real; |r|, |s| <= 1 + 1e-9 and |T_ij| <= 1 + 1e-9 for physical states.
struct BlochForm {
    Vec3 r{};
    Vec3 s{};
    Mat3 T{};
};

// Singular values of the correlation matrix, sorted 0 <= gamma <= beta <= alpha.
struct CanonicalCorrelation {
    double alpha;
    double beta;
    double gamma;
};

// Validated two-qubit density matrix.  Trace and Hermiticity are always
// enforced (tolerance 1e-10); positivity only when requested, but the
// physical() flag always reports it (min eigenvalue >= -1e-9).
class DensityMatrix {
  public:
    // Throws NotDensityMatrix naming the failed check and its residual.
    static DensityMatrix from_matrix(const Mat4c& raw, bool require_physical = true);

    const Mat4c& matrix() const { return m_; }
    bool physical() const { return physical_; }
    double min_eigenvalue() const { return min_eig_; }

  private:
    DensityMatrix(const Mat4c& m, bool physical, double min_eig)
        : m_(m), physical_(physical), min_eig_(min_eig) {}

    Mat4c m_;
    bool physical_;
    double min_eig_;
};

// Pauli coefficients of rho; throws NotHermitian if any coefficient has an
// imaginary residue above 1e-10 (cannot happen for a validated input).
BlochForm bloch_decompose(const DensityMatrix& rho);

// Rebuilds the matrix from coefficients.  Never throws on unphysical input;
// the result carries physical() = false instead.
DensityMatrix bloch_compose(const BlochForm& b);

// Singular values of b.T, sorted descending.
CanonicalCorrelation canonical_correlation(const BlochForm& b);

}  // namespace qcorr
