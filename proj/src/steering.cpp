#include "qcorr/steering.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/numerics.hpp"

namespace qcorr {

MeasurementSettings::MeasurementSettings(std::vector<Vec3> a_in, std::vector<Vec3> b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
    if (a.size() != b.size() || (a.size() != 2 && a.size() != 3))
        throw BadSetting("measurement settings: need 2 or 3 direction pairs");
    for (const auto& side : {a, b})
        for (const Vec3& v : side)
            if (std::abs(norm(v) - 1.0) > 1e-10)
                throw BadSetting("measurement settings: directions must be unit norm");
}

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::No: return "no";
        case Tristate::Indeterminate: return "indeterminate";
        case Tristate::Yes: return "yes";
    }
    return "unknown";
}

double degree_of_steerability(const CanonicalCorrelation& cc, int n) {
    if (n != 2 && n != 3)
        throw BadSetting("degree_of_steerability: n must be 2 or 3");
    const double two = cc.alpha * cc.alpha + cc.beta * cc.beta;
    return std::sqrt(n == 2 ? two : two + cc.gamma * cc.gamma);
}

double steering_violation(const CanonicalCorrelation& cc, int n) {
    const double s = degree_of_steerability(cc, n);
    return std::max(0.0, (s - 1.0) / (std::sqrt(static_cast<double>(n)) - 1.0));
}

double steering_functional(const BlochForm& b, const MeasurementSettings& m) {
    double sum = 0.0;
    for (int i = 0; i < m.n(); ++i)
        sum += bilinear(m.a[static_cast<std::size_t>(i)], b.T,
                        m.b[static_cast<std::size_t>(i)]);
    return std::abs(sum) / std::sqrt(static_cast<double>(m.n()));
}

SigmaBounds sigma_bounds(double s_n, int n) {
    if (n != 2 && n != 3) throw BadSetting("sigma_bounds: n must be 2 or 3");
    const double cap = std::sqrt(static_cast<double>(n));
    if (!(s_n >= -1e-9 && s_n <= cap + 1e-9))
        throw DomainError("sigma_bounds: s_n " + std::to_string(s_n) +
                          " outside [0, sqrt(n)]");
    const double s = std::clamp(s_n, 0.0, cap);
    const double lower = (s < 1.0) ? s / 4.0 : e_integral(std::min(s, std::sqrt(3.0))) / 4.0;
    const double upper = s / (2.0 * cap);
    return {lower, upper};
}

Classification classify(double sigma, double s2, double s3) {
    Classification c;
    c.bell_nonlocal = s2 > 1.0;
    c.steerable3 = s3 > 1.0;
    if (sigma >= 1.0 / (2.0 * std::sqrt(2.0)))
        c.nonclassical = Tristate::Yes;
    else if (sigma < 0.25)
        c.nonclassical = Tristate::No;
    else
        c.nonclassical = Tristate::Indeterminate;
    return c;
}

SteeringReport steering_report(const CanonicalCorrelation& cc, double sigma) {
    SteeringReport rep;
    rep.canonical = cc;
    rep.s2 = degree_of_steerability(cc, 2);
    rep.s3 = degree_of_steerability(cc, 3);
    rep.violation2 = steering_violation(cc, 2);
    rep.violation3 = steering_violation(cc, 3);
    rep.chsh_max = 2.0 * rep.s2;
    rep.bounds3 = sigma_bounds(std::min(rep.s3, std::sqrt(3.0)), 3);
    rep.classification = classify(sigma, rep.s2, rep.s3);
    return rep;
}

}  // namespace qcorr
