#include "qcorr/qstate.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/numerics.hpp"

namespace qcorr {
namespace {

constexpr double kCheckTol = 1e-10;
constexpr double kPsdTol = 1e-9;

// sigma_i x sigma_j with index 0 meaning the identity.
Mat4c pauli_tensor(std::size_t i, std::size_t j) {
    const Mat2c left = (i == 0) ? pauli_i() : pauli(i);
    const Mat2c right = (j == 0) ? pauli_i() : pauli(j);
    return kron(left, right);
}

double real_coefficient(const Mat4c& rho, std::size_t i, std::size_t j) {
    const Mat4c op = pauli_tensor(i, j);
    // Tr[rho (sigma_i x sigma_j)]; Pauli tensors are Hermitian.
    Complex acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) acc += rho(r, c) * op(c, r);
    if (std::abs(acc.imag()) > kCheckTol)
        throw NotHermitian("bloch_decompose: imaginary residue " +
                           std::to_string(acc.imag()));
    return acc.real();
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const Mat4c& raw, bool require_physical) {
    for (const Complex& z : raw.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NotDensityMatrix("density matrix: non-finite entry");

    const double trace_residual = std::abs(trace(raw) - Complex{1.0, 0.0});
    if (trace_residual > kCheckTol)
        throw NotDensityMatrix("density matrix: trace residual " +
                               std::to_string(trace_residual));

    const double herm_residual = hermiticity_residual(raw);
    if (herm_residual > kCheckTol)
        throw NotDensityMatrix("density matrix: Hermiticity residual " +
                               std::to_string(herm_residual));

    const auto eig = hermitian_eigen4(raw);
    const bool physical = eig[0] >= -kPsdTol;
    if (require_physical && !physical)
        throw NotDensityMatrix("density matrix: negative eigenvalue " +
                               std::to_string(eig[0]));
    return DensityMatrix(raw, physical, eig[0]);
}

BlochForm bloch_decompose(const DensityMatrix& rho) {
    const Mat4c& m = rho.matrix();
    BlochForm b;
    for (std::size_t i = 1; i <= 3; ++i) {
        b.r[i - 1] = real_coefficient(m, i, 0);
        b.s[i - 1] = real_coefficient(m, 0, i);
        for (std::size_t j = 1; j <= 3; ++j)
            b.T[i - 1][j - 1] = real_coefficient(m, i, j);
    }
    return b;
}

DensityMatrix bloch_compose(const BlochForm& b) {
    Mat4c m = pauli_tensor(0, 0);
    for (std::size_t i = 1; i <= 3; ++i) {
        m = m + Complex{b.r[i - 1], 0.0} * pauli_tensor(i, 0);
        m = m + Complex{b.s[i - 1], 0.0} * pauli_tensor(0, i);
        for (std::size_t j = 1; j <= 3; ++j)
            m = m + Complex{b.T[i - 1][j - 1], 0.0} * pauli_tensor(i, j);
    }
    m = Complex{0.25, 0.0} * m;
    return DensityMatrix::from_matrix(m, /*require_physical=*/false);
}

CanonicalCorrelation canonical_correlation(const BlochForm& b) {
    const auto sv = svd3(b.T);
    return {sv[0], sv[1], sv[2]};
}

}  // namespace qcorr
