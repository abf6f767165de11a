#include "qcorr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr {
namespace {

// 15-point Kronrod abscissae on [-1, 1] (non-negative half) and weights,
// with the embedded 7-point Gauss weights.
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

// One G7/K15 evaluation over [lo, hi].  Error estimate is |K15 - G7|, a
// deliberate overestimate of the K15 error.
Panel evaluate_panel(const std::function<double(double)>& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double kronrod = kKronrodW[7] * f(center);
    double gauss = kGaussW[3] * f(center);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodX[static_cast<std::size_t>(i)];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodW[static_cast<std::size_t>(i)] * pair;
        if (i % 2 == 1) gauss += kGaussW[static_cast<std::size_t>(i / 2)] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, Interval iv,
                           double rel_tol, double abs_tol) {
    if (!(iv.lo < iv.hi)) throw DomainError("integrate: interval must satisfy lo < hi");
    constexpr int kMaxPanels = 1 << 15;

    std::priority_queue<Panel> panels;
    panels.push(evaluate_panel(f, iv.lo, iv.hi));
    double total_value = panels.top().value;
    double total_error = panels.top().error;
    std::int64_t evaluations = 15;
    int panel_count = 1;

    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        if (panel_count >= kMaxPanels)
            throw NonConvergent("integrate: tolerance not reached within " +
                                std::to_string(kMaxPanels) + " panels");
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = evaluate_panel(f, worst.lo, mid);
        const Panel right = evaluate_panel(f, mid, worst.hi);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        evaluations += 30;
        ++panel_count;
    }
    return {total_value, total_error, evaluations};
}

double sigma_kernel(double f) {
    constexpr double kSlack = 1e-12;
    if (!(f >= -kSlack && f <= 1.0 + kSlack))
        throw DomainError("sigma_kernel: argument " + std::to_string(f) +
                          " outside [0, 1]");
    if (f <= 0.0) return 0.0;
    if (f >= 1.0) return 1.0;
    const double u = 1.0 - f;
    return f / std::sqrt(u) * std::asinh(std::sqrt(u / f));
}

double e_integral(double s) {
    constexpr double kSlack = 1e-12;
    const double hi = std::sqrt(3.0);
    if (!(s >= 1.0 - kSlack && s <= hi + kSlack))
        throw DomainError("e_integral: argument " + std::to_string(s) +
                          " outside [1, sqrt(3)]");
    const double sc = std::clamp(s, 1.0, hi);
    const double m = 2.0 - sc * sc;
    const auto integrand = [m](double phi) {
        const double sp = std::sin(phi);
        return std::sqrt(std::max(0.0, 1.0 - m * sp * sp));
    };
    return integrate(integrand, {0.0, M_PI_2}, 1e-12, 1e-14).value;
}

namespace {

// Cyclic Jacobi on a symmetric n x n matrix (n <= 8); returns eigenvalues
// ascending.  Rotations zero one off-diagonal pair at a time.
template <std::size_t N>
std::array<double, N> jacobi_symmetric_eigen(std::array<std::array<double, N>, N> a) {
    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += a[p][q] * a[p][q];
        if (off <= 1e-300) break;

        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = a[p][q];
                if (std::abs(apq) <=
                    1e-18 * (std::abs(a[p][p]) + std::abs(a[q][q]) + 1e-300))
                    continue;
                const double tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::array<double, N> eig;
    for (std::size_t i = 0; i < N; ++i) eig[i] = a[i][i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::array<double, 3> svd3(const Mat3& m) {
    std::array<std::array<double, 3>, 3> mtm{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 3; ++k) acc += m[k][i] * m[k][j];
            mtm[i][j] = acc;
        }
    const auto eig = jacobi_symmetric_eigen<3>(mtm);
    return {std::sqrt(std::max(0.0, eig[2])), std::sqrt(std::max(0.0, eig[1])),
            std::sqrt(std::max(0.0, eig[0]))};
}

std::array<double, 4> hermitian_eigen4(const Mat4c& h) {
    const double residual = hermiticity_residual(h);
    if (residual > 1e-10)
        throw NotHermitian("hermitian_eigen4: Hermiticity residual " +
                           std::to_string(residual));

    // Real symmetric embedding [[X, -Y], [Y, X]] of H = X + iY has the
    // eigenvalues of H, each doubled, so adjacent sorted pairs collapse.
    std::array<std::array<double, 8>, 8> e{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const Complex sym = 0.5 * (h(r, c) + std::conj(h(c, r)));
            e[r][c] = sym.real();
            e[r + 4][c + 4] = sym.real();
            e[r][c + 4] = -sym.imag();
            e[r + 4][c] = sym.imag();
        }
    const auto eig = jacobi_symmetric_eigen<8>(e);
    return {0.5 * (eig[0] + eig[1]), 0.5 * (eig[2] + eig[3]),
            0.5 * (eig[4] + eig[5]), 0.5 * (eig[6] + eig[7])};
}

double bisect(const std::function<double(double)>& f, Interval iv, double tol) {
    if (!(iv.lo < iv.hi)) throw DomainError("bisect: interval must satisfy lo < hi");
    if (!(tol > 0.0)) throw DomainError("bisect: tolerance must be positive");
    double lo = iv.lo;
    double hi = iv.hi;
    double flo = f(lo);
    double fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw NoSignChange("bisect: endpoint value not finite");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoSignChange("bisect: no sign change over the bracket");

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace qcorr
