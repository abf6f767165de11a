#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qcorr {

using Complex = std::complex<double>;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Dense 4x4 complex matrix, row-major.  Two-qubit basis order |00>,|01>,|10>,|11>
// with the first qubit as the high bit.
struct Mat4c {
    std::array<Complex, 16> a{};

    Complex& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }
};

// Dense 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<Complex, 4> a{};

    Complex& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }
};

inline Mat4c operator+(const Mat4c& x, const Mat4c& y) {
    Mat4c z;
    for (std::size_t i = 0; i < 16; ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

inline Mat4c operator*(Complex s, const Mat4c& x) {
    Mat4c z;
    for (std::size_t i = 0; i < 16; ++i) z.a[i] = s * x.a[i];
    return z;
}

inline Mat4c matmul(const Mat4c& x, const Mat4c& y) {
    Mat4c z;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += x(r, k) * y(k, c);
            z(r, c) = acc;
        }
    return z;
}

inline Mat4c adjoint(const Mat4c& x) {
    Mat4c z;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) z(r, c) = std::conj(x(c, r));
    return z;
}

inline Complex trace(const Mat4c& x) {
    return x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3);
}

// Max absolute entry of x - x^dagger; zero iff Hermitian.
inline double hermiticity_residual(const Mat4c& x) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(x(r, c) - std::conj(x(c, r))));
    return worst;
}

// Kronecker product; (x ⊗ y)(2i+k, 2j+l) = x(i,j) y(k,l).
inline Mat4c kron(const Mat2c& x, const Mat2c& y) {
    Mat4c z;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    z(2 * i + k, 2 * j + l) = x(i, j) * y(k, l);
    return z;
}

inline Mat2c pauli_i() {
    Mat2c m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

inline Mat2c pauli_x() {
    Mat2c m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

inline Mat2c pauli_y() {
    Mat2c m;
    m(0, 1) = Complex{0, -1};
    m(1, 0) = Complex{0, 1};
    return m;
}

inline Mat2c pauli_z() {
    Mat2c m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

// sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
inline Mat2c pauli(std::size_t i) {
    switch (i) {
        case 1: return pauli_x();
        case 2: return pauli_y();
        default: return pauli_z();
    }
}

inline double dot(const Vec3& x, const Vec3& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

inline double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

// y = M x
inline Vec3 apply(const Mat3& m, const Vec3& x) {
    Vec3 y{};
    for (std::size_t r = 0; r < 3; ++r)
        y[r] = m[r][0] * x[0] + m[r][1] * x[1] + m[r][2] * x[2];
    return y;
}

// a^T M b
inline double bilinear(const Vec3& a, const Mat3& m, const Vec3& b) {
    return dot(a, apply(m, b));
}

}  // namespace qcorr
