#include "qcorr/steering.hpp"

#include <cmath>

#include "doctest.h"
#include "qcorr/errors.hpp"
#include "qcorr/families.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/sampling.hpp"

using namespace qcorr;

TEST_CASE("steering degree and normalized violation") {
    const CanonicalCorrelation singlet{1.0, 1.0, 1.0};
    CHECK(degree_of_steerability(singlet, 2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(degree_of_steerability(singlet, 3) == doctest::Approx(std::sqrt(3.0)));
    CHECK(steering_violation(singlet, 2) == doctest::Approx(1.0));
    CHECK(steering_violation(singlet, 3) == doctest::Approx(1.0));

    // Werner threshold lambda = 1/sqrt(3) for three settings.
    const double lam = 1.0 / std::sqrt(3.0);
    CHECK(degree_of_steerability({lam, lam, lam}, 3) == doctest::Approx(1.0));
    CHECK(steering_violation({lam, lam, lam}, 3) == doctest::Approx(0.0));
    CHECK(steering_violation({0.3, 0.2, 0.1}, 2) == 0.0);

    CHECK_THROWS_AS(degree_of_steerability(singlet, 4), BadSetting);
    CHECK_THROWS_AS(degree_of_steerability(singlet, 1), BadSetting);
}

TEST_CASE("s3 dominates s2 and violations stay normalized") {
    SamplerSpec ginibre{SamplerKind::GinibreMixed, 4, 17};
    for (std::uint64_t i = 0; i < 300; ++i) {
        const auto cc = canonical_correlation(bloch_decompose(sample(ginibre, i)));
        const double s2 = degree_of_steerability(cc, 2);
        const double s3 = degree_of_steerability(cc, 3);
        CHECK(s3 >= s2 - 1e-12);
        CHECK(s2 >= 0.0);
        const double v2 = steering_violation(cc, 2);
        const double v3 = steering_violation(cc, 3);
        CHECK(v2 >= 0.0);
        CHECK(v2 <= 1.0 + 1e-9);
        CHECK(v3 <= 1.0 + 1e-9);
        // Two-setting steerability implies three-setting steerability.
        if (s2 > 1.0) CHECK(s3 > 1.0);
    }
}

TEST_CASE("steering functional on chosen settings") {
    BlochForm werner1;
    werner1.T = {{{-1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}}};
    const MeasurementSettings axes3(
        {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}},
        {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}});
    // Singlet on the canonical axes: |sum| = 3, F = sqrt(3) = s3.
    CHECK(steering_functional(werner1, axes3) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    // Orthogonal a/b pairs see nothing.
    const MeasurementSettings crossed(
        {{{1, 0, 0}}, {{0, 1, 0}}},
        {{{0, 1, 0}}, {{0, 0, 1}}});
    CHECK(steering_functional(werner1, crossed) == doctest::Approx(0.0));

    CHECK_THROWS_AS(MeasurementSettings({{{1, 0, 0}}}, {{{1, 0, 0}}}), BadSetting);
    CHECK_THROWS_AS(MeasurementSettings({{{1, 0, 0}}, {{0, 0.5, 0}}},
                                        {{{1, 0, 0}}, {{0, 1, 0}}}),
                    BadSetting);
}

TEST_CASE("functional bounds: sqrt(n) alpha for unit settings, s_n for orthonormal a") {
    SamplerSpec ginibre{SamplerKind::GinibreMixed, 4, 71};
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto b = bloch_decompose(sample(ginibre, i));
        const auto cc = canonical_correlation(b);
        RandomStream rng(1000, i);
        for (int trial = 0; trial < 50; ++trial) {
            for (int n : {2, 3}) {
                // Arbitrary unit settings.
                std::vector<Vec3> av, bv;
                for (int k = 0; k < n; ++k) {
                    av.push_back(rng.unit_vector());
                    bv.push_back(rng.unit_vector());
                }
                const double f = steering_functional(b, MeasurementSettings(av, bv));
                CHECK(f <= std::sqrt(static_cast<double>(n)) * cc.alpha + 1e-9);

                // Orthonormal a-set: never beats the closed form s_n.
                Vec3 a0 = rng.unit_vector();
                Vec3 h = rng.unit_vector();
                const double pr = dot(a0, h);
                Vec3 a1{h[0] - pr * a0[0], h[1] - pr * a0[1], h[2] - pr * a0[2]};
                const double n1 = norm(a1);
                for (auto& x : a1) x /= n1;
                std::vector<Vec3> ao{a0, a1};
                if (n == 3)
                    ao.push_back({a0[1] * a1[2] - a0[2] * a1[1],
                                  a0[2] * a1[0] - a0[0] * a1[2],
                                  a0[0] * a1[1] - a0[1] * a1[0]});
                const double fo = steering_functional(b, MeasurementSettings(ao, bv));
                CHECK(fo <= degree_of_steerability(cc, n) + 1e-9);
            }
        }
    }
}

TEST_CASE("sigma bounds: shapes, continuity and domain") {
    // Below s_n = 1 the lower bound is linear.
    auto b1 = sigma_bounds(0.8, 3);
    CHECK(b1.lower == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(b1.upper == doctest::Approx(0.8 / (2.0 * std::sqrt(3.0))).epsilon(1e-12));

    // At s_n = 1 both lower expressions agree: E(1)/4 = 1/4.
    const auto at_left = sigma_bounds(1.0 - 1e-9, 3);
    const auto at_right = sigma_bounds(1.0 + 1e-9, 3);
    CHECK(std::abs(at_left.lower - at_right.lower) < 1e-8);
    CHECK(at_right.lower == doctest::Approx(0.25).epsilon(1e-8));

    // Elliptic branch endpoint.
    const auto top = sigma_bounds(std::sqrt(3.0), 3);
    CHECK(top.lower == doctest::Approx(0.4775247236284640).epsilon(1e-11));
    CHECK(top.upper == doctest::Approx(0.5).epsilon(1e-12));

    // n = 2 upper bound uses sqrt(2).
    const auto two = sigma_bounds(std::sqrt(2.0), 2);
    CHECK(two.upper == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(two.lower == doctest::Approx(M_PI_2 / 4.0).epsilon(1e-11));

    // Lower never exceeds upper across the domain.
    for (int n : {2, 3})
        for (int i = 0; i <= 100; ++i) {
            const double s = std::sqrt(static_cast<double>(n)) * i / 100.0;
            const auto bb = sigma_bounds(s, n);
            CHECK(bb.lower <= bb.upper + 1e-12);
        }

    CHECK_THROWS_AS(sigma_bounds(1.5, 2), DomainError);
    CHECK_THROWS_AS(sigma_bounds(-0.1, 3), DomainError);
    CHECK_THROWS_AS(sigma_bounds(1.0, 5), BadSetting);
}

TEST_CASE("classification thresholds") {
    // Sigma >= 1/(2 sqrt(2)) certifies nonclassicality.
    auto c = classify(0.36, 1.1, 1.2);
    CHECK(c.nonclassical == Tristate::Yes);
    CHECK(c.bell_nonlocal);
    CHECK(c.steerable3);

    // Sigma < 1/4 rules it out.
    c = classify(0.2, 0.8, 0.9);
    CHECK(c.nonclassical == Tristate::No);
    CHECK_FALSE(c.bell_nonlocal);

    // Window in between stays indeterminate; Werner lambda = 0.6.
    c = classify(0.3, 0.6 * std::sqrt(2.0), 0.6 * std::sqrt(3.0));
    CHECK(c.nonclassical == Tristate::Indeterminate);
    CHECK_FALSE(c.bell_nonlocal);
    CHECK(c.steerable3);

    // Boundaries: the yes threshold is inclusive, the no threshold strict.
    CHECK(classify(1.0 / (2.0 * std::sqrt(2.0)), 1.0, 1.0).nonclassical == Tristate::Yes);
    CHECK(classify(0.25, 1.0, 1.0).nonclassical == Tristate::Indeterminate);
    CHECK(to_string(Tristate::Yes) == "yes");
    CHECK(to_string(Tristate::Indeterminate) == "indeterminate");
}

TEST_CASE("steering report assembles consistent fields") {
    const auto e = family_expected(Werner{0.6});
    const auto rep = steering_report(e.canonical, *e.sigma_closed);
    CHECK(rep.s2 == doctest::Approx(0.6 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.s3 == doctest::Approx(0.6 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(rep.chsh_max == doctest::Approx(2.0 * rep.s2).epsilon(1e-12));
    CHECK(rep.bounds3.lower <= *e.sigma_closed + 1e-9);
    CHECK(*e.sigma_closed <= rep.bounds3.upper + 1e-9);
    CHECK(rep.classification.nonclassical == Tristate::Indeterminate);
    CHECK(rep.classification.steerable3);
    CHECK_FALSE(rep.classification.bell_nonlocal);
}
