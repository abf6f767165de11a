#include "qcorr/avgcorr.hpp"

#include <cmath>

#include "qcorr/errors.hpp"
#include "qcorr/numerics.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {
namespace {

constexpr double kIsotropicTol = 1e-12;

void check_canonical(const CanonicalCorrelation& cc) {
    if (!(cc.gamma >= -1e-12) || !(cc.beta >= cc.gamma - 1e-12) ||
        !(cc.alpha >= cc.beta - 1e-12))
        throw DomainError("average_correlation: singular values must satisfy "
                          "0 <= gamma <= beta <= alpha");
}

double closed_form_eval(const CanonicalCorrelation& cc) {
    const double f = 0.5 * (cc.beta + cc.gamma) / cc.alpha;
    return 0.25 * cc.alpha * (1.0 + sigma_kernel(f * f));
}

SigmaResult single_integral_eval(const CanonicalCorrelation& cc) {
    const double rb = cc.beta / cc.alpha;
    const double rc = cc.gamma / cc.alpha;
    const double fb = rb * rb;
    const double fc = rc * rc;
    const auto integrand = [fb, fc](double phi) {
        const double sp = std::sin(phi);
        const double cp = std::cos(phi);
        return sigma_kernel(fb * sp * sp + fc * cp * cp);
    };
    const QuadratureResult quad = integrate(integrand, {0.0, M_PI_2}, 1e-11, 1e-13);
    const double sigma = 0.25 * cc.alpha * (1.0 + (2.0 / M_PI) * quad.value);
    const double err = 0.25 * cc.alpha * (2.0 / M_PI) * quad.error_estimate;
    return {sigma, SigmaMethod::SingleIntegral, err};
}

}  // namespace

std::string to_string(SigmaMethod m) {
    switch (m) {
        case SigmaMethod::ClosedForm: return "closed_form";
        case SigmaMethod::SingleIntegral: return "single_integral";
        case SigmaMethod::DoubleIntegral: return "double_integral";
        case SigmaMethod::MonteCarlo: return "monte_carlo";
    }
    return "unknown";
}

SigmaResult average_correlation(const CanonicalCorrelation& cc) {
    check_canonical(cc);
    if (cc.alpha <= 0.0) return {0.0, SigmaMethod::ClosedForm, 0.0};

    if (std::abs(cc.beta - cc.gamma) <= kIsotropicTol * cc.alpha)
        return {closed_form_eval(cc), SigmaMethod::ClosedForm, 1e-15};
    return single_integral_eval(cc);
}

SigmaResult average_correlation_method(const CanonicalCorrelation& cc, SigmaMethod m) {
    check_canonical(cc);
    if (m == SigmaMethod::MonteCarlo)
        throw BadSetting("average_correlation_method: Monte Carlo needs the full "
                         "correlation matrix; use monte_carlo_sigma");
    if (cc.alpha <= 0.0) return {0.0, SigmaMethod::ClosedForm, 0.0};
    switch (m) {
        case SigmaMethod::ClosedForm:
            if (std::abs(cc.beta - cc.gamma) > kIsotropicTol * cc.alpha)
                throw DomainError("average_correlation_method: closed form requires "
                                  "beta = gamma");
            return {closed_form_eval(cc), SigmaMethod::ClosedForm, 1e-15};
        case SigmaMethod::SingleIntegral:
            return single_integral_eval(cc);
        case SigmaMethod::DoubleIntegral:
            return average_correlation_double(cc);
        default:
            break;
    }
    throw BadSetting("average_correlation_method: unsupported method");
}

SigmaResult average_correlation_double(const CanonicalCorrelation& cc) {
    check_canonical(cc);
    if (!(cc.alpha > 0.0))
        throw DomainError("average_correlation_double: alpha must be positive");

    const double fb = (cc.beta / cc.alpha) * (cc.beta / cc.alpha);
    const double fc = (cc.gamma / cc.alpha) * (cc.gamma / cc.alpha);
    double worst_inner_error = 0.0;

    const auto inner = [&](double phi) {
        const double sp = std::sin(phi);
        const double cp = std::cos(phi);
        const double f = fb * sp * sp + fc * cp * cp;
        const auto integrand = [f](double theta) {
            const double st = std::sin(theta);
            const double ct = std::cos(theta);
            return st * std::sqrt(f * st * st + ct * ct);
        };
        const QuadratureResult q = integrate(integrand, {0.0, M_PI}, 1e-11, 1e-13);
        worst_inner_error = std::max(worst_inner_error, q.error_estimate);
        return q.value;
    };
    const QuadratureResult outer = integrate(inner, {0.0, 2.0 * M_PI}, 1e-9, 1e-12);
    const double scale = cc.alpha / (8.0 * M_PI);
    const double sigma = scale * outer.value;
    const double err = scale * (outer.error_estimate + 2.0 * M_PI * worst_inner_error);
    return {sigma, SigmaMethod::DoubleIntegral, err};
}

double sigma_isotropic(double s3, double f) {
    if (!(s3 >= -1e-12 && s3 <= std::sqrt(3.0) + 1e-12))
        throw DomainError("sigma_isotropic: s3 outside [0, sqrt(3)]");
    const double g = sigma_kernel(f);  // validates f
    if (f >= 1.0) return s3 / (2.0 * std::sqrt(3.0));
    return s3 / (4.0 * std::sqrt(2.0 * f + 1.0)) * (1.0 + g);
}

double sigma_pure(double c) {
    if (!(c >= -1e-12 && c <= 1.0 + 1e-12))
        throw DomainError("sigma_pure: Schmidt coefficient outside [0, 1]");
    const double cs = std::clamp(c, 0.0, 1.0);
    const double f = 4.0 * cs * cs * (1.0 - cs * cs);
    return 0.25 * (1.0 + sigma_kernel(std::min(f, 1.0)));
}

SigmaResult monte_carlo_sigma(const BlochForm& b, std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("monte_carlo_sigma: sample count must be positive");
    // Welford accumulation keeps the variance stable over long runs.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        RandomStream rng(seed, static_cast<std::uint64_t>(i));
        const Vec3 a = rng.unit_vector();
        const Vec3 bb = rng.unit_vector();
        const double x = std::abs(bilinear(a, b.T, bb));
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double stderr_mean =
        (n > 1) ? std::sqrt(m2 / (static_cast<double>(n - 1) * static_cast<double>(n)))
                : 0.0;
    return {mean, SigmaMethod::MonteCarlo, stderr_mean};
}

}  // namespace qcorr
