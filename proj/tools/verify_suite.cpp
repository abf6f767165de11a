#include "verify_suite.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "parallel_util.hpp"
#include "qcorr/avgcorr.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/families.hpp"
#include "qcorr/numerics.hpp"
#include "qcorr/qstate.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/steering.hpp"

namespace {

using namespace qcorr;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Vec3 diag_coeffs(const DensityMatrix& rho) {
    const BlochForm b = bloch_decompose(rho);
    return {b.T[0][0], b.T[1][1], b.T[2][2]};
}

Vec3 gaussian_vec(RandomStream& rng) {
    return {rng.gaussian(), rng.gaussian(), rng.gaussian()};
}

Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    return {v[0] / n, v[1] / n, v[2] / n};
}

// Orthonormal n-tuple from Gram-Schmidt on Gaussian draws; redraws on
// near-degenerate residuals.
std::vector<Vec3> orthonormal_set(RandomStream& rng, int n) {
    std::vector<Vec3> out;
    while (static_cast<int>(out.size()) < n) {
        Vec3 v = gaussian_vec(rng);
        for (const Vec3& u : out) {
            const double d = dot(u, v);
            for (int k = 0; k < 3; ++k) v[k] -= d * u[k];
        }
        if (norm(v) < 1e-6) continue;
        out.push_back(normalized(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Individual checks.  Each returns an empty string on success or a diagnostic.
// ---------------------------------------------------------------------------

std::string check_sampler_validity(std::uint64_t samples, std::uint64_t seed) {
    const SamplerSpec specs[] = {
        {SamplerKind::GinibreMixed, 4, seed},
        {SamplerKind::GinibreMixed, 2, seed + 1},
        {SamplerKind::GinibreMixed, 1, seed + 2},
        {SamplerKind::HaarPure, 4, seed + 3},
        {SamplerKind::BellDiagonalUniform, 4, seed + 4},
    };
    const std::uint64_t draws = std::max<std::uint64_t>(20, samples / 10);
    for (const SamplerSpec& sp : specs) {
        for (std::uint64_t i = 0; i < draws; ++i) {
            const DensityMatrix rho = sample(sp, i);
            if (!rho.physical())
                return "draw " + std::to_string(i) + " is unphysical (min eigenvalue " +
                       fmt(rho.min_eigenvalue()) + ")";
            const Complex tr = trace(rho.matrix());
            if (std::abs(tr.real() - 1.0) > 1e-12 || std::abs(tr.imag()) > 1e-12)
                return "draw " + std::to_string(i) + " has trace off by " +
                       fmt(std::abs(tr.real() - 1.0));
        }
    }
    return {};
}

std::string check_bound_containment(std::uint64_t samples, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::GinibreMixed, 4, seed};
    std::vector<double> violation(samples, 0.0);
    std::vector<char> errored(samples, 0);
    qcorr_tools::parallel_indices(samples, [&](std::uint64_t i) {
        try {
            const BlochForm b = bloch_decompose(sample(sp, i));
            const CanonicalCorrelation cc = canonical_correlation(b);
            const double sigma = average_correlation(cc).sigma;
            const SigmaBounds b3 = sigma_bounds(std::min(degree_of_steerability(cc, 3),
                                                         std::sqrt(3.0)), 3);
            const SigmaBounds b2 = sigma_bounds(std::min(degree_of_steerability(cc, 2),
                                                         std::sqrt(2.0)), 2);
            double v = 0.0;
            v = std::max(v, b3.lower - sigma);
            v = std::max(v, sigma - b3.upper);
            v = std::max(v, b2.lower - sigma);
            v = std::max(v, sigma - b2.upper);
            violation[i] = v;
        } catch (...) {
            errored[i] = 1;
        }
    });
    double worst = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        if (errored[i]) return "exception while evaluating sample " + std::to_string(i);
        worst = std::max(worst, violation[i]);
    }
    if (worst > 1e-7)
        return "worst bound violation " + fmt(worst) + " exceeds 1e-7";
    return {};
}

std::string check_steering_hierarchy(std::uint64_t samples, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::GinibreMixed, 4, seed + 101};
    for (std::uint64_t i = 0; i < samples; ++i) {
        const BlochForm b = bloch_decompose(sample(sp, i));
        const CanonicalCorrelation cc = canonical_correlation(b);
        const double s2 = degree_of_steerability(cc, 2);
        const double s3 = degree_of_steerability(cc, 3);
        if (s2 > s3 + 1e-12)
            return "s2 " + fmt(s2) + " exceeds s3 " + fmt(s3) + " at sample " +
                   std::to_string(i);
        if (s2 > 1.0 && !(s3 > 1.0))
            return "two-setting steerable sample " + std::to_string(i) +
                   " is not three-setting steerable";
        if (s3 >= 1.0) {
            const double sigma = average_correlation(cc).sigma;
            if (sigma < 0.25 - 1e-9)
                return "s3 >= 1 but Sigma " + fmt(sigma) + " < 1/4 at sample " +
                       std::to_string(i);
        }
        for (int n : {2, 3}) {
            const double v = steering_violation(cc, n);
            if (v < 0.0 || v > 1.0 + 1e-9)
                return "normalized violation outside [0, 1] at sample " + std::to_string(i);
        }
    }
    return {};
}

std::string check_werner_line(std::uint64_t, std::uint64_t) {
    for (int k = 0; k <= 20; ++k) {
        const double lambda = k / 20.0;
        const FamilyExpected exp = family_expected(Werner{lambda, false});
        const BlochForm b = bloch_decompose(build(Werner{lambda, false}));
        const CanonicalCorrelation cc = canonical_correlation(b);
        const double sigma = average_correlation(cc).sigma;
        if (std::abs(sigma - lambda / 2.0) > 1e-9)
            return "Sigma mismatch " + fmt(std::abs(sigma - lambda / 2.0)) +
                   " at lambda " + fmt(lambda);
        const double s3 = degree_of_steerability(cc, 3);
        if (std::abs(s3 - std::sqrt(3.0) * lambda) > 1e-12)
            return "s3 mismatch at lambda " + fmt(lambda);
        if (exp.sigma_closed && std::abs(*exp.sigma_closed - lambda / 2.0) > 1e-15)
            return "closed-form table disagrees at lambda " + fmt(lambda);
    }
    return {};
}

std::string check_pure_closed_form(std::uint64_t, std::uint64_t) {
    for (int k = 0; k <= 24; ++k) {
        const double c = k / 24.0;
        const FamilyExpected exp = family_expected(PureSchmidt{c});
        const SigmaResult quad =
            average_correlation_method(exp.canonical, SigmaMethod::SingleIntegral);
        const double closed = sigma_pure(c);
        if (std::abs(quad.sigma - closed) > 1e-8)
            return "closed form vs quadrature differ by " +
                   fmt(std::abs(quad.sigma - closed)) + " at c " + fmt(c);
    }
    return {};
}

std::string check_mems_continuity(std::uint64_t, std::uint64_t) {
    const double joins[] = {1.0 / 3.0, 2.0 / 3.0};
    for (double s : joins) {
        const double below = *family_expected(Mems{s - 1e-9}).sigma_closed;
        const double above = *family_expected(Mems{s + 1e-9}).sigma_closed;
        if (std::abs(below - above) > 1e-8)
            return "Sigma jumps by " + fmt(std::abs(below - above)) + " at s " + fmt(s);
        const double s3_below = family_expected(Mems{s - 1e-9}).s3;
        const double s3_above = family_expected(Mems{s + 1e-9}).s3;
        if (std::abs(s3_below - s3_above) > 1e-8)
            return "s3 jumps at s " + fmt(s);
    }
    for (int k = 0; k <= 20; ++k) {
        const double s = k / 20.0;
        const FamilyExpected exp = family_expected(Mems{s});
        const SigmaResult quad =
            average_correlation_method(exp.canonical, SigmaMethod::SingleIntegral);
        if (std::abs(quad.sigma - *exp.sigma_closed) > 1e-8)
            return "table vs quadrature differ by " +
                   fmt(std::abs(quad.sigma - *exp.sigma_closed)) + " at s " + fmt(s);
    }
    return {};
}

std::string check_form_equivalence(std::uint64_t, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::GinibreMixed, 4, seed + 202};
    for (std::uint64_t i = 0; i < 10; ++i) {
        const BlochForm b = bloch_decompose(sample(sp, i));
        const CanonicalCorrelation cc = canonical_correlation(b);
        if (cc.alpha <= 1e-12) continue;
        const double single = average_correlation_method(cc, SigmaMethod::SingleIntegral).sigma;
        const double dbl = average_correlation_double(cc).sigma;
        if (std::abs(single - dbl) > 1e-7)
            return "reduced and spherical forms differ by " + fmt(std::abs(single - dbl)) +
                   " at sample " + std::to_string(i);
    }
    return {};
}

std::string check_monte_carlo(std::uint64_t, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::GinibreMixed, 4, seed + 303};
    for (std::uint64_t i = 0; i < 5; ++i) {
        const BlochForm b = bloch_decompose(sample(sp, i));
        const CanonicalCorrelation cc = canonical_correlation(b);
        const double quad = average_correlation(cc).sigma;
        const SigmaResult mc = monte_carlo_sigma(b, 200000, seed + 404 + i);
        const double band = 6.0 * mc.error_estimate + 1e-12;
        if (std::abs(mc.sigma - quad) > band)
            return "Monte Carlo off by " + fmt(std::abs(mc.sigma - quad)) +
                   " (allowed " + fmt(band) + ") at sample " + std::to_string(i);
    }
    return {};
}

std::string check_kraus_agreement(std::uint64_t, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::BellDiagonalUniform, 4, seed + 505};
    const ChannelSpec channels[] = {
        ChannelSpec::unital(ChannelKind::BitFlip, 1.0),
        ChannelSpec::unital(ChannelKind::BitPhaseFlip, 1.0),
        ChannelSpec::unital(ChannelKind::PhaseFlip, 1.0),
        ChannelSpec::amplitude_damping(1.0, 200.0),
    };
    for (std::uint64_t i = 0; i < 5; ++i) {
        const DensityMatrix rho = sample(sp, i);
        const Vec3 c = diag_coeffs(rho);
        for (const ChannelSpec& ch : channels) {
            for (double p : {0.0, 0.3, 0.7, 1.0}) {
                const DensityMatrix evolved = kraus_apply(rho, ch, p);
                const BlochForm be = bloch_decompose(evolved);
                const Vec3 expect = evolve_coeffs(c, ch, p);
                for (int k = 0; k < 3; ++k) {
                    if (std::abs(be.T[k][k] - expect[k]) > 1e-12)
                        return "Kraus and closed form differ by " +
                               fmt(std::abs(be.T[k][k] - expect[k])) + " on " +
                               to_string(ch.kind) + " at p " + fmt(p);
                }
                const bool gad = ch.kind == ChannelKind::AmplitudeDamping;
                for (int k = 0; k < 3; ++k) {
                    const double want = (gad && k == 2) ? p : 0.0;
                    if (std::abs(be.r[k] - want) > 1e-12 || std::abs(be.s[k] - want) > 1e-12)
                        return "local Bloch vectors wrong on " + to_string(ch.kind) +
                               " at p " + fmt(p);
                }
            }
        }
    }
    return {};
}

std::string check_unital_monotonicity(std::uint64_t, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::BellDiagonalUniform, 4, seed + 606};
    const ChannelKind kinds[] = {ChannelKind::BitFlip, ChannelKind::PhaseFlip,
                                 ChannelKind::BitPhaseFlip};
    for (std::uint64_t i = 0; i < 5; ++i) {
        const Vec3 c0 = diag_coeffs(sample(sp, i));
        const ChannelSpec ch = ChannelSpec::unital(kinds[i % 3], 1.0);
        const auto rows = trajectory(c0, ch, 3.0, 200);
        for (std::size_t k = 1; k < rows.size(); ++k) {
            if (rows[k].sigma > rows[k - 1].sigma + 1e-10)
                return "Sigma increases under a unital channel at step " + std::to_string(k);
            if (rows[k].s2 > rows[k - 1].s2 + 1e-10 || rows[k].s3 > rows[k - 1].s3 + 1e-10)
                return "steering degree increases under a unital channel at step " +
                       std::to_string(k);
        }
    }
    return {};
}

std::string check_death_times(std::uint64_t, std::uint64_t) {
    const ChannelSpec ch = ChannelSpec::unital(ChannelKind::PhaseFlip, 1.0);
    const DeathTimes dt = death_times_analytic(0.8, ch);
    const Vec3 c0{0.8, 0.8, 0.8};
    const struct {
        CrossQuantity q;
        double analytic;
    } cases[] = {{CrossQuantity::S2, dt.t_s2},
                 {CrossQuantity::S3, dt.t_s3},
                 {CrossQuantity::Sigma, dt.t_sigma}};
    for (const auto& cse : cases) {
        const double numeric = threshold_crossing(c0, ch, cse.q, CrossDirection::Decay,
                                                  0.0, 2.0 * cse.analytic);
        const double rel = std::abs(numeric - cse.analytic) / cse.analytic;
        if (rel > 1e-5)
            return "numeric crossing off by relative " + fmt(rel);
    }
    for (double c : {0.75, 0.9, 1.0}) {
        const DeathTimes d = death_times_analytic(c, ch);
        if (!(d.t_s2 <= d.t_s3 && d.t_s3 <= d.t_sigma))
            return "death times out of order at |c| " + fmt(c);
    }
    return {};
}

std::string check_functional_vs_degree(std::uint64_t, std::uint64_t seed) {
    const SamplerSpec sp{SamplerKind::GinibreMixed, 4, seed + 707};
    for (std::uint64_t i = 0; i < 10; ++i) {
        const BlochForm b = bloch_decompose(sample(sp, i));
        const CanonicalCorrelation cc = canonical_correlation(b);
        RandomStream rng(seed + 808, i);
        for (int trial = 0; trial < 20; ++trial) {
            for (int n : {2, 3}) {
                const double sn = degree_of_steerability(cc, n);
                std::vector<Vec3> a = orthonormal_set(rng, n);
                std::vector<Vec3> bs;
                for (int k = 0; k < n; ++k) bs.push_back(rng.unit_vector());
                const double f_ortho = steering_functional(b, MeasurementSettings(a, bs));
                if (f_ortho > sn + 1e-9)
                    return "functional " + fmt(f_ortho) + " exceeds s" +
                           std::to_string(n) + " = " + fmt(sn);
                std::vector<Vec3> a_free, b_free;
                for (int k = 0; k < n; ++k) {
                    a_free.push_back(rng.unit_vector());
                    b_free.push_back(rng.unit_vector());
                }
                const double f_free =
                    steering_functional(b, MeasurementSettings(a_free, b_free));
                if (f_free > std::sqrt(static_cast<double>(n)) * cc.alpha + 1e-9)
                    return "functional exceeds sqrt(n)*alpha for free settings";
            }
        }
    }
    return {};
}

std::string check_damping_revival(std::uint64_t, std::uint64_t) {
    const ChannelSpec ch = ChannelSpec::amplitude_damping(1.0, 200.0);
    const auto rows = trajectory({1.0, 1.0, 0.8}, ch, 1.0, 2000);
    std::size_t first_below = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].sigma < 0.25) {
            first_below = k;
            break;
        }
    }
    if (first_below == rows.size()) return "Sigma never drops below 1/4";
    for (std::size_t k = first_below + 1; k < rows.size(); ++k) {
        if (rows[k].sigma > 0.25 + 1e-3) return {};
    }
    return "Sigma does not recover above 1/4 after the first death";
}

}  // namespace

int run_verify_suite(std::uint64_t samples, std::uint64_t seed) {
    using Check = std::pair<const char*, std::function<std::string()>>;
    const std::vector<Check> checks = {
        {"sampler_validity", [&] { return check_sampler_validity(samples, seed); }},
        {"bound_containment", [&] { return check_bound_containment(samples, seed); }},
        {"steering_hierarchy", [&] { return check_steering_hierarchy(samples, seed); }},
        {"werner_line", [&] { return check_werner_line(samples, seed); }},
        {"pure_closed_form", [&] { return check_pure_closed_form(samples, seed); }},
        {"mems_continuity", [&] { return check_mems_continuity(samples, seed); }},
        {"form_equivalence", [&] { return check_form_equivalence(samples, seed); }},
        {"monte_carlo_consistency", [&] { return check_monte_carlo(samples, seed); }},
        {"kraus_closed_form_agreement", [&] { return check_kraus_agreement(samples, seed); }},
        {"unital_monotonicity", [&] { return check_unital_monotonicity(samples, seed); }},
        {"death_time_consistency", [&] { return check_death_times(samples, seed); }},
        {"functional_vs_degree", [&] { return check_functional_vs_degree(samples, seed); }},
        {"damping_revival", [&] { return check_damping_revival(samples, seed); }},
    };

    std::string first_fail;
    for (const Check& check : checks) {
        std::string detail;
        try {
            detail = check.second();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            std::printf("[PASS] %s\n", check.first);
        } else {
            std::printf("[FAIL] %s: %s\n", check.first, detail.c_str());
            if (first_fail.empty()) first_fail = check.first;
        }
    }
    if (first_fail.empty()) {
        std::printf("all %zu checks passed\n", checks.size());
        return 0;
    }
    std::printf("first failing property: %s\n", first_fail.c_str());
    return 1;
}
