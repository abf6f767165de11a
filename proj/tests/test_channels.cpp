#include "qcorr/channels.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qcorr/errors.hpp"
#include "qcorr/families.hpp"
#include "qcorr/rng.hpp"

using namespace qcorr;

namespace {

const ChannelSpec kPhase = ChannelSpec::unital(ChannelKind::PhaseFlip, 1.0);
const ChannelSpec kBit = ChannelSpec::unital(ChannelKind::BitFlip, 1.0);
const ChannelSpec kBitPhase = ChannelSpec::unital(ChannelKind::BitPhaseFlip, 1.0);
const ChannelSpec kGad = ChannelSpec::amplitude_damping(1.0, 200.0);

}  // namespace

TEST_CASE("channel construction validates parameters") {
    CHECK_THROWS_AS(ChannelSpec::unital(ChannelKind::PhaseFlip, 0.0), ParamOutOfRange);
    CHECK_THROWS_AS(ChannelSpec::unital(ChannelKind::AmplitudeDamping, 1.0), BadSetting);
    // Weak coupling makes the oscillation frequency imaginary.
    CHECK_THROWS_AS(ChannelSpec::amplitude_damping(1.0, 0.4), ParamOutOfRange);
    CHECK_NOTHROW(ChannelSpec::amplitude_damping(1.0, 0.51));
}

TEST_CASE("damping probability: unital saturation and oscillatory revival") {
    CHECK(damping_probability(kPhase, 0.0) == 0.0);
    CHECK(damping_probability(kPhase, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)));
    CHECK(damping_probability(kPhase, 50.0) == doctest::Approx(1.0).epsilon(1e-12));

    // Strong-coupling damping touches p = 1 and comes back down.
    CHECK(damping_probability(kGad, 0.0) == 0.0);
    const double d = std::sqrt(2.0 * 200.0 - 1.0);
    double t_touch = 0.0;
    // First zero of cos(d t/2) + (1/d) sin(d t/2).
    t_touch = 2.0 * (M_PI - std::atan(d)) / d;
    CHECK(damping_probability(kGad, t_touch) == doctest::Approx(1.0).epsilon(1e-9));
    const double later = t_touch + M_PI / d;  // quarter period: envelope maximum
    CHECK(damping_probability(kGad, later) < 0.999);

    CHECK_THROWS_AS(damping_probability(kPhase, -0.5), DomainError);
    for (double t = 0.0; t < 3.0; t += 0.01) {
        const double p = damping_probability(kGad, t);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("closed-form coefficient flow per channel") {
    const Vec3 c{0.5, -0.4, 0.8};
    const double p = 0.3;
    const double q2 = 0.49;

    const Vec3 bf = evolve_coeffs(c, kBit, p);
    CHECK(bf[0] == doctest::Approx(0.5));
    CHECK(bf[1] == doctest::Approx(-0.4 * q2));
    CHECK(bf[2] == doctest::Approx(0.8 * q2));

    const Vec3 bpf = evolve_coeffs(c, kBitPhase, p);
    CHECK(bpf[0] == doctest::Approx(0.5 * q2));
    CHECK(bpf[1] == doctest::Approx(-0.4));

    const Vec3 pf = evolve_coeffs(c, kPhase, p);
    CHECK(pf[2] == doctest::Approx(0.8));

    // Damping contracts transverse terms linearly and drives c3 to p^2.
    const Vec3 ad = evolve_coeffs({1.0, 1.0, 0.8}, kGad, 0.5);
    CHECK(ad[0] == doctest::Approx(0.5));
    CHECK(ad[1] == doctest::Approx(0.5));
    CHECK(ad[2] == doctest::Approx(0.8 * 0.25 + 0.25));

    CHECK_THROWS_AS(evolve_coeffs(c, kPhase, 1.5), DomainError);
}

TEST_CASE("Kraus route equals the closed-form route on Bell-diagonal states") {
    const Vec3 inits[] = {{0.5, -0.4, 0.3}, {0.9, 0.9, 0.9}, {1.0, -1.0, 1.0}};
    const ChannelSpec specs[] = {kBit, kBitPhase, kPhase, kGad};
    for (const Vec3& c0 : inits) {
        BlochForm b0;
        for (int i = 0; i < 3; ++i) b0.T[i][i] = c0[i];
        const auto rho0 = bloch_compose(b0);
        for (const auto& spec : specs) {
            for (double p : {0.0, 0.15, 0.5, 0.85, 1.0}) {
                const auto out = kraus_apply(rho0, spec, p);
                const auto bout = bloch_decompose(out);
                const Vec3 expected = evolve_coeffs(c0, spec, p);
                for (int i = 0; i < 3; ++i)
                    CHECK(std::abs(bout.T[i][i] - expected[i]) < 1e-12);
                CHECK(std::abs(trace(out.matrix()).real() - 1.0) < 1e-12);
                // Unital channels leave local polarization at zero; damping
                // builds (0, 0, p) on both sides.
                const double rz = (spec.kind == ChannelKind::AmplitudeDamping) ? p : 0.0;
                CHECK(std::abs(bout.r[2] - rz) < 1e-12);
                CHECK(std::abs(bout.s[2] - rz) < 1e-12);
            }
        }
    }
}

TEST_CASE("trajectories are monotone under unital noise and carry flags") {
    // The all-negative corner direction is inside the physical tetrahedron
    // (the all-positive one is not), and phase flip keeps it there.
    const auto rows = trajectory({-0.9, -0.9, -0.9}, kPhase, 2.0, 400);
    CHECK(rows.size() == 400);
    CHECK(rows.front().t == 0.0);
    CHECK(rows.back().t == doctest::Approx(2.0));
    for (std::size_t k = 1; k < rows.size(); ++k) {
        CHECK(rows[k].t > rows[k - 1].t);
        CHECK(rows[k].sigma <= rows[k - 1].sigma + 1e-12);
        CHECK(rows[k].s2 <= rows[k - 1].s2 + 1e-12);
        CHECK(rows[k].s3 <= rows[k - 1].s3 + 1e-12);
        CHECK(rows[k].physical);
    }
    // Initial point reproduces the static analysis.
    CHECK(rows.front().sigma ==
          doctest::Approx(average_correlation({0.9, 0.9, 0.9}).sigma).epsilon(1e-12));

    CHECK_THROWS_AS(trajectory({0.9, 0.9, 0.9}, kPhase, 0.0, 10), ParamOutOfRange);
    CHECK_THROWS_AS(trajectory({0.9, 0.9, 0.9}, kPhase, 1.0, 1), ParamOutOfRange);
}

TEST_CASE("trajectory rows expose the unphysical start of the benchmark states") {
    // Bit flip preserves c1 = 0.8 and shrinks the other two, so the formal
    // start (0.8, 1, 1) decays into the tetrahedron once (1-p)^2 <= 0.1,
    // i.e. past t = ln(10)/2.
    const auto rows = trajectory({0.8, 1.0, 1.0}, kBit, 2.0, 50);
    CHECK_FALSE(rows.front().physical);
    // Decay eventually re-enters the tetrahedron.
    CHECK(rows.back().physical);
    // Canonical sorting keeps alpha as the largest magnitude.
    for (const auto& row : rows) {
        CHECK(row.canonical.alpha >= row.canonical.beta);
        CHECK(row.canonical.beta >= row.canonical.gamma);
    }
}

TEST_CASE("trajectory CSV schema is bit-stable") {
    CHECK(trajectory_csv_header() ==
          "t,p,c1,c2,c3,alpha,beta,gamma,sigma,two_sigma,s2,s3,S2,S3,physical");
    TrajectoryRow row{};
    row.t = 0.5;
    row.p = 0.25;
    row.c = {1.0, 0.5, 0.25};
    row.canonical = {1.0, 0.5, 0.25};
    row.sigma = 0.3;
    row.s2 = 1.1;
    row.s3 = 1.15;
    row.violation2 = 0.2;
    row.violation3 = 0.1;
    row.physical = true;
    const std::string line = trajectory_csv_row(row);
    CHECK(line == "0.5,0.25,1,0.5,0.25,1,0.5,0.25,0.29999999999999999,0.59999999999999998,"
                  "1.1000000000000001,1.1499999999999999,0.20000000000000001,"
                  "0.10000000000000001,1");
    // Field count matches the header.
    CHECK(std::count(line.begin(), line.end(), ',') == 14);
}

TEST_CASE("analytic death times for |c| = 0.8 against frozen roots") {
    const auto dt = death_times_analytic(0.8, kPhase);
    CHECK(dt.t_s2 == doctest::Approx(0.1438410362258905).epsilon(1e-12));
    CHECK(dt.t_s3 == doctest::Approx(0.3171278313658768).epsilon(1e-12));
    // Root of the transcendental threshold equation, frozen from a grid scan.
    CHECK(dt.A == doctest::Approx(0.1419101223384549).epsilon(1e-10));
    CHECK(dt.t_sigma == doctest::Approx(0.4881403407628140).epsilon(1e-9));
    CHECK(dt.t_s2 < dt.t_s3);
    CHECK(dt.t_s3 < dt.t_sigma);
}

TEST_CASE("death times become infinite at the survival thresholds") {
    // Below 1/sqrt(2): s2 never reaches 1.
    auto dt = death_times_analytic(0.7, kPhase);
    CHECK(std::isinf(dt.t_s2));
    CHECK(std::isfinite(dt.t_s3));
    CHECK(std::isfinite(dt.t_sigma));

    // Below 1/sqrt(3): s3 never reaches 1 either.
    dt = death_times_analytic(0.55, kPhase);
    CHECK(std::isinf(dt.t_s2));
    CHECK(std::isinf(dt.t_s3));
    CHECK(std::isfinite(dt.t_sigma));

    // At or below 1/2 Sigma starts at or below 1/4.
    dt = death_times_analytic(0.5, kPhase);
    CHECK(std::isinf(dt.t_sigma));
    CHECK(dt.A == 0.0);

    // Pure Bell correlations never decay through any threshold.
    dt = death_times_analytic(1.0, kPhase);
    CHECK(std::isinf(dt.t_s2));
    CHECK(std::isinf(dt.t_s3));
    CHECK(std::isinf(dt.t_sigma));

    CHECK_THROWS_AS(death_times_analytic(0.0, kPhase), DomainError);
    CHECK_THROWS_AS(death_times_analytic(1.2, kPhase), DomainError);
    CHECK_THROWS_AS(death_times_analytic(0.8, kGad), BadSetting);
}

TEST_CASE("numeric threshold crossings match the analytic times") {
    const auto dt = death_times_analytic(0.8, kPhase);
    const double t2 = threshold_crossing({0.8, 0.8, 0.8}, kPhase, CrossQuantity::S2,
                                         CrossDirection::Decay, 0.0, 1.0);
    const double t3 = threshold_crossing({0.8, 0.8, 0.8}, kPhase, CrossQuantity::S3,
                                         CrossDirection::Decay, 0.0, 1.0);
    const double ts = threshold_crossing({0.8, 0.8, 0.8}, kPhase, CrossQuantity::Sigma,
                                         CrossDirection::Decay, 0.0, 2.0);
    CHECK(std::abs(t2 - dt.t_s2) / dt.t_s2 < 1e-6);
    CHECK(std::abs(t3 - dt.t_s3) / dt.t_s3 < 1e-6);
    CHECK(std::abs(ts - dt.t_sigma) / dt.t_sigma < 1e-5);

    // Wrong direction or no crossing in the bracket is rejected.
    CHECK_THROWS_AS(threshold_crossing({0.8, 0.8, 0.8}, kPhase, CrossQuantity::S2,
                                       CrossDirection::Revival, 0.0, 1.0),
                    NoSignChange);
    CHECK_THROWS_AS(threshold_crossing({0.3, 0.3, 0.3}, kPhase, CrossQuantity::S2,
                                       CrossDirection::Decay, 0.0, 1.0),
                    NoSignChange);
}

TEST_CASE("strong-coupling damping revives the correlation quantities") {
    // Benchmark initial coefficients (1, 1, 0.8), kappa = 200 gamma.
    const auto rows = trajectory({1.0, 1.0, 0.8}, kGad, 1.0, 4000);
    // Find first decay below 1/4 and a later rise above it.
    std::size_t fell = 0;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k].sigma < 0.25) { fell = k; break; }
    REQUIRE(fell > 0);
    bool rose = false;
    for (std::size_t k = fell; k < rows.size(); ++k)
        if (rows[k].sigma > 0.25 + 1e-3) { rose = true; break; }
    CHECK(rose);
}
