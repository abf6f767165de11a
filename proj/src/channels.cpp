#include "qcorr/channels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qcorr/errors.hpp"
#include "qcorr/numerics.hpp"
#include "qcorr/steering.hpp"

namespace qcorr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Mat2c> kraus_ops(const ChannelSpec& spec, double p) {
    const double keep = std::sqrt(1.0 - 0.5 * p);
    const double flip = std::sqrt(0.5 * p);
    switch (spec.kind) {
        case ChannelKind::BitFlip:
        case ChannelKind::BitPhaseFlip:
        case ChannelKind::PhaseFlip: {
            const std::size_t axis =
                spec.kind == ChannelKind::BitFlip ? 1 :
                spec.kind == ChannelKind::BitPhaseFlip ? 2 : 3;
            Mat2c e0 = pauli_i();
            for (Complex& z : e0.a) z *= keep;
            Mat2c e1 = pauli(axis);
            for (Complex& z : e1.a) z *= flip;
            return {e0, e1};
        }
        case ChannelKind::AmplitudeDamping: {
            Mat2c e0{};
            e0(0, 0) = 1.0;
            e0(1, 1) = std::sqrt(1.0 - p);
            Mat2c e1{};
            e1(0, 1) = std::sqrt(p);
            return {e0, e1};
        }
    }
    throw BadSetting("channel: unknown kind");
}

CanonicalCorrelation canonical_of(const Vec3& c) {
    std::array<double, 3> v{std::abs(c[0]), std::abs(c[1]), std::abs(c[2])};
    std::sort(v.begin(), v.end());
    return {v[2], v[1], v[0]};
}

double quantity_value(const Vec3& c0, const ChannelSpec& spec, CrossQuantity q,
                      double t) {
    const Vec3 c = evolve_coeffs(c0, spec, damping_probability(spec, t));
    const CanonicalCorrelation cc = canonical_of(c);
    switch (q) {
        case CrossQuantity::S2: return degree_of_steerability(cc, 2);
        case CrossQuantity::S3: return degree_of_steerability(cc, 3);
        case CrossQuantity::Sigma: return average_correlation(cc).sigma;
    }
    throw BadSetting("threshold_crossing: unknown quantity");
}

}  // namespace

std::string to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::BitFlip: return "bitflip";
        case ChannelKind::BitPhaseFlip: return "bitphaseflip";
        case ChannelKind::PhaseFlip: return "phaseflip";
        case ChannelKind::AmplitudeDamping: return "gad";
    }
    return "unknown";
}

ChannelSpec ChannelSpec::unital(ChannelKind kind, double gamma_rate) {
    if (kind == ChannelKind::AmplitudeDamping)
        throw BadSetting("channel: amplitude damping needs amplitude_damping()");
    if (!(gamma_rate > 0.0)) throw ParamOutOfRange("channel: gamma_rate must be > 0");
    return {kind, gamma_rate, 0.0};
}

ChannelSpec ChannelSpec::amplitude_damping(double gamma_rate, double kappa) {
    if (!(gamma_rate > 0.0)) throw ParamOutOfRange("channel: gamma_rate must be > 0");
    if (!(2.0 * kappa * gamma_rate - gamma_rate * gamma_rate > 0.0))
        throw ParamOutOfRange("channel: amplitude damping needs kappa > gamma_rate/2");
    return {ChannelKind::AmplitudeDamping, gamma_rate, kappa};
}

double damping_probability(const ChannelSpec& spec, double t) {
    if (!(t >= 0.0)) throw DomainError("damping_probability: t must be >= 0");
    const double g = spec.gamma_rate;
    double p;
    if (spec.kind == ChannelKind::AmplitudeDamping) {
        const double d = std::sqrt(2.0 * spec.kappa * g - g * g);
        const double osc = std::cos(0.5 * d * t) + (g / d) * std::sin(0.5 * d * t);
        p = 1.0 - std::exp(-g * t) * osc * osc;
    } else {
        p = 1.0 - std::exp(-g * t);
    }
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
        throw DomainError("damping_probability: value escaped [0, 1]");
    return std::clamp(p, 0.0, 1.0);
}

DensityMatrix kraus_apply(const DensityMatrix& rho, const ChannelSpec& spec, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("kraus_apply: p must lie in [0, 1]");
    const auto ops = kraus_ops(spec, p);

    Mat2c completeness{};
    for (const Mat2c& e : ops)
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t k = 0; k < 2; ++k)
                    completeness(r, c) += std::conj(e(k, r)) * e(k, c);
    completeness(0, 0) -= 1.0;
    completeness(1, 1) -= 1.0;
    for (const Complex& z : completeness.a)
        if (std::abs(z) > 1e-12)
            throw std::logic_error("kraus_apply: completeness residual above 1e-12");

    Mat4c out{};
    for (const Mat2c& ei : ops)
        for (const Mat2c& ej : ops) {
            const Mat4c k2 = kron(ei, ej);
            out = out + matmul(matmul(k2, rho.matrix()), adjoint(k2));
        }
    return DensityMatrix::from_matrix(out, /*require_physical=*/false);
}

Vec3 evolve_coeffs(const Vec3& c, const ChannelSpec& spec, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("evolve_coeffs: p must lie in [0, 1]");
    const double q = 1.0 - p;
    switch (spec.kind) {
        case ChannelKind::BitFlip: return {c[0], c[1] * q * q, c[2] * q * q};
        case ChannelKind::BitPhaseFlip: return {c[0] * q * q, c[1], c[2] * q * q};
        case ChannelKind::PhaseFlip: return {c[0] * q * q, c[1] * q * q, c[2]};
        case ChannelKind::AmplitudeDamping:
            return {c[0] * q, c[1] * q, c[2] * q * q + p * p};
    }
    throw BadSetting("evolve_coeffs: unknown kind");
}

std::vector<TrajectoryRow> trajectory(const Vec3& c0, const ChannelSpec& spec,
                                      double t_max, int steps) {
    if (!(t_max > 0.0)) throw ParamOutOfRange("trajectory: t_max must be > 0");
    if (steps < 2) throw ParamOutOfRange("trajectory: need at least 2 steps");

    std::vector<TrajectoryRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        TrajectoryRow row;
        row.t = t_max * static_cast<double>(k) / static_cast<double>(steps - 1);
        row.p = damping_probability(spec, row.t);
        row.c = evolve_coeffs(c0, spec, row.p);
        row.canonical = canonical_of(row.c);
        row.sigma = average_correlation(row.canonical).sigma;
        row.s2 = degree_of_steerability(row.canonical, 2);
        row.s3 = degree_of_steerability(row.canonical, 3);
        row.violation2 = steering_violation(row.canonical, 2);
        row.violation3 = steering_violation(row.canonical, 3);
        BlochForm b;
        for (std::size_t i = 0; i < 3; ++i) b.T[i][i] = row.c[i];
        row.physical = bloch_compose(b).physical();
        rows.push_back(row);
    }
    return rows;
}

std::string trajectory_csv_header() {
    return "t,p,c1,c2,c3,alpha,beta,gamma,sigma,two_sigma,s2,s3,S2,S3,physical";
}

std::string trajectory_csv_row(const TrajectoryRow& r) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%.17g,%d",
                  r.t, r.p, r.c[0], r.c[1], r.c[2], r.canonical.alpha,
                  r.canonical.beta, r.canonical.gamma, r.sigma, 2.0 * r.sigma,
                  r.s2, r.s3, r.violation2, r.violation3, r.physical ? 1 : 0);
    return buf;
}

DeathTimes death_times_analytic(double c_abs, const ChannelSpec& spec) {
    if (spec.kind == ChannelKind::AmplitudeDamping)
        throw BadSetting("death_times_analytic: defined for unital channels");
    if (!(c_abs > 0.0 && c_abs <= 1.0))
        throw DomainError("death_times_analytic: |c| must lie in (0, 1]");
    const double g4 = 4.0 * spec.gamma_rate;
    const double c2 = c_abs * c_abs;

    DeathTimes dt{kInf, kInf, kInf, 0.0};
    if (std::sqrt(2.0) * c_abs > 1.0) dt.t_s2 = -std::log((1.0 - c2) / c2) / g4;
    if (std::sqrt(3.0) * c_abs > 1.0) dt.t_s3 = -std::log((1.0 - c2) / (2.0 * c2)) / g4;
    if (c_abs > 0.5 && c_abs < 1.0) {
        const double target = (1.0 - c_abs) / c_abs;
        const double root = bisect(
            [target](double a) { return sigma_kernel(a) - target; },
            {1e-12, 1.0 - 1e-12}, 1e-12);
        dt.A = root;
        dt.t_sigma = -std::log(root) / g4;
    }
    return dt;
}

double threshold_crossing(const Vec3& c0, const ChannelSpec& spec,
                          CrossQuantity quantity, CrossDirection direction,
                          double t_lo, double t_hi) {
    if (!(t_lo >= 0.0 && t_lo < t_hi))
        throw DomainError("threshold_crossing: need 0 <= t_lo < t_hi");
    const double threshold = (quantity == CrossQuantity::Sigma) ? 0.25 : 1.0;
    const auto excess = [&](double t) {
        return quantity_value(c0, spec, quantity, t) - threshold;
    };
    const double lo = excess(t_lo);
    const double hi = excess(t_hi);
    const bool decay_shape = lo > 0.0 && hi < 0.0;
    const bool revival_shape = lo < 0.0 && hi > 0.0;
    if (direction == CrossDirection::Decay && !decay_shape)
        throw NoSignChange("threshold_crossing: bracket is not a decay crossing");
    if (direction == CrossDirection::Revival && !revival_shape)
        throw NoSignChange("threshold_crossing: bracket is not a revival crossing");
    return bisect(excess, {t_lo, t_hi}, 1e-12 * std::max(1.0, t_hi));
}

}  // namespace qcorr
