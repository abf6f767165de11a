#include "qcorr/families.hpp"

#include <cmath>

#include "doctest.h"
#include "qcorr/avgcorr.hpp"
#include "qcorr/errors.hpp"

using namespace qcorr;

TEST_CASE("werner states: matrix, canonical values and closed form") {
    for (double lam : {0.0, 0.1, 0.35, 0.6, 1.0}) {
        const auto rho = build(Werner{lam});
        CHECK(rho.physical());
        const auto b = bloch_decompose(rho);
        for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(b.r[i]) < 1e-12);
            CHECK(std::abs(b.s[i]) < 1e-12);
            for (int j = 0; j < 3; ++j)
                CHECK(b.T[i][j] == doctest::Approx(i == j ? -lam : 0.0).epsilon(1e-12));
        }
        const auto e = family_expected(Werner{lam});
        CHECK(e.canonical.alpha == doctest::Approx(lam).epsilon(1e-12));
        CHECK(e.s3 == doctest::Approx(std::sqrt(3.0) * lam).epsilon(1e-12));
        REQUIRE(e.sigma_closed.has_value());
        CHECK(*e.sigma_closed == doctest::Approx(0.5 * lam).epsilon(1e-12));
    }
    // Triplet variant differs in matrix but not in singular values.
    const auto cc = canonical_correlation(bloch_decompose(build(Werner{0.7, true})));
    CHECK(cc.alpha == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(cc.gamma == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("pure Schmidt states: correlation matrix and steering degree") {
    // Psi+ with c: T = diag(2c w, 2c w, -1), w = sqrt(1-c^2).
    const double c = 0.9;
    const double bv = 2.0 * c * std::sqrt(1.0 - c * c);
    const auto b = bloch_decompose(build(PureSchmidt{c}));
    CHECK(b.T[0][0] == doctest::Approx(bv).epsilon(1e-12));
    CHECK(b.T[1][1] == doctest::Approx(bv).epsilon(1e-12));
    CHECK(b.T[2][2] == doctest::Approx(-1.0).epsilon(1e-12));

    const auto e = family_expected(PureSchmidt{c});
    CHECK(e.canonical.alpha == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.canonical.beta == doctest::Approx(0.7846018098373213).epsilon(1e-12));
    CHECK(e.s3 == doctest::Approx(1.4937201879870272).epsilon(1e-12));
    REQUIRE(e.sigma_closed.has_value());
    CHECK(*e.sigma_closed == doctest::Approx(0.4299649725890106).epsilon(1e-10));

    // Separable ends and the Bell point.
    CHECK(*family_expected(PureSchmidt{0.0}).sigma_closed ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(*family_expected(PureSchmidt{1.0}).sigma_closed ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(*family_expected(PureSchmidt{1.0 / std::sqrt(2.0)}).sigma_closed ==
          doctest::Approx(0.5).epsilon(1e-12));

    // All four variants share the same canonical values.
    for (auto v : {BellVariant::PsiMinus, BellVariant::PhiPlus, BellVariant::PhiMinus}) {
        const auto cc = canonical_correlation(bloch_decompose(build(PureSchmidt{c, v})));
        CHECK(cc.alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cc.beta == doctest::Approx(bv).epsilon(1e-12));
        CHECK(cc.gamma == doctest::Approx(bv).epsilon(1e-12));
    }
}

TEST_CASE("mems states: branch matrices and branch continuity") {
    // Lower branch keeps populations (1/3, 1/3, 0, 1/3).
    const auto low = build(Mems{0.2});
    CHECK(low.physical());
    CHECK(low.matrix()(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(low.matrix()(0, 3).real() == doctest::Approx(0.1).epsilon(1e-12));

    // Upper branch switches the populations to (s/2, 1-s, 0, s/2).
    const auto high = build(Mems{0.8});
    CHECK(high.physical());
    CHECK(high.matrix()(0, 0).real() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(high.matrix()(1, 1).real() == doctest::Approx(0.2).epsilon(1e-12));

    // The boundary s = 2/3 belongs to the lower branch and both agree there.
    const double s_star = 2.0 / 3.0;
    const auto at = build(Mems{s_star});
    CHECK(at.matrix()(0, 0).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(at.matrix()(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // Sigma and s3 are continuous across both branch changes.
    for (double s_join : {1.0 / 3.0, 2.0 / 3.0}) {
        const auto below = family_expected(Mems{s_join - 1e-9});
        const auto above = family_expected(Mems{s_join + 1e-9});
        CHECK(std::abs(*below.sigma_closed - *above.sigma_closed) < 1e-8);
        CHECK(std::abs(below.s3 - above.s3) < 1e-8);
    }

    // Frozen branch values.
    CHECK(*family_expected(Mems{0.0}).sigma_closed ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-12));
    CHECK(*family_expected(Mems{1.0 / 3.0}).sigma_closed ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-11));
    CHECK(*family_expected(Mems{0.2}).sigma_closed ==
          doctest::Approx(0.1245312941583874).epsilon(1e-11));
    CHECK(*family_expected(Mems{0.5}).sigma_closed ==
          doctest::Approx(0.2243848374184785).epsilon(1e-10));
    CHECK(*family_expected(Mems{0.8}).sigma_closed ==
          doctest::Approx(0.3685342952804143).epsilon(1e-10));
    CHECK(family_expected(Mems{0.5}).s3 ==
          doctest::Approx(std::sqrt(2.0 * 0.25 + 1.0 / 9.0)).epsilon(1e-12));
    CHECK(family_expected(Mems{0.8}).s3 ==
          doctest::Approx(std::sqrt(6.0 * 0.64 - 3.2 + 1.0)).epsilon(1e-12));
}

TEST_CASE("bell diagonal family flags tetrahedron violations") {
    const auto vertex = build(BellDiagonal{{1.0, -1.0, 1.0}});
    CHECK(vertex.physical());
    CHECK(vertex.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));

    const auto outside = build(BellDiagonal{{0.8, 1.0, 1.0}});
    CHECK_FALSE(outside.physical());
    CHECK(outside.min_eigenvalue() == doctest::Approx(-0.45).epsilon(1e-12));

    const auto e = family_expected(BellDiagonal{{0.8, 1.0, 1.0}});
    CHECK(e.canonical.alpha == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.canonical.gamma == doctest::Approx(0.8).epsilon(1e-12));
    CHECK_FALSE(e.sigma_closed.has_value());
}

TEST_CASE("family grids: quadrature reproduces every closed form within 1e-8") {
    for (int i = 0; i <= 200; ++i) {
        const double x = i / 200.0;
        for (const FamilySpec spec :
             {FamilySpec{Werner{x}}, FamilySpec{PureSchmidt{x}}, FamilySpec{Mems{x}}}) {
            const auto e = family_expected(spec);
            const auto direct = canonical_correlation(bloch_decompose(build(spec)));
            CHECK(std::abs(direct.alpha - e.canonical.alpha) < 1e-10);
            CHECK(std::abs(direct.beta - e.canonical.beta) < 1e-10);
            CHECK(std::abs(direct.gamma - e.canonical.gamma) < 1e-10);
            REQUIRE(e.sigma_closed.has_value());
            CHECK(std::abs(average_correlation(e.canonical).sigma - *e.sigma_closed) <
                  1e-8);
        }
    }
}

TEST_CASE("family parameters outside their ranges are rejected") {
    CHECK_THROWS_AS(build(Werner{-0.1}), ParamOutOfRange);
    CHECK_THROWS_AS(build(Werner{1.1}), ParamOutOfRange);
    CHECK_THROWS_AS(build(PureSchmidt{1.5}), ParamOutOfRange);
    CHECK_THROWS_AS(build(Mems{-0.2}), ParamOutOfRange);
    CHECK_THROWS_AS(build(BellDiagonal{{1.2, 0.0, 0.0}}), ParamOutOfRange);
    // Tolerance slack admits boundary noise.
    CHECK_NOTHROW(build(Werner{1.0 + 1e-13}));
}

TEST_CASE("family mini-language parses and rejects") {
    const auto w = parse_family_spec("werner:0.6");
    CHECK(std::holds_alternative<Werner>(w));
    CHECK(std::get<Werner>(w).lambda == doctest::Approx(0.6));
    CHECK_FALSE(std::get<Werner>(w).plus);
    CHECK(std::get<Werner>(parse_family_spec("werner:0.25:+")).plus);

    const auto p = parse_family_spec("pure:0.9:psi+");
    CHECK(std::get<PureSchmidt>(p).c == doctest::Approx(0.9));
    CHECK(std::get<PureSchmidt>(p).variant == BellVariant::PsiPlus);
    CHECK(std::get<PureSchmidt>(parse_family_spec("pure:0.4:phi-")).variant ==
          BellVariant::PhiMinus);

    CHECK(std::get<Mems>(parse_family_spec("mems:0.5")).s == doctest::Approx(0.5));

    const auto bd = parse_family_spec("belldiag:0.8,1,1");
    CHECK(std::get<BellDiagonal>(bd).c[0] == doctest::Approx(0.8));
    CHECK(std::get<BellDiagonal>(bd).c[2] == doctest::Approx(1.0));

    CHECK(family_name(w) == "werner");
    CHECK(family_name(bd) == "belldiag");

    CHECK_THROWS_AS(parse_family_spec(""), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("ghz:0.5"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("werner"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("werner:abc"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("werner:0.5:0.1"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("pure:0.9:chi+"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("belldiag:1,1"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("belldiag:1,1,1,1"), BadSetting);
    CHECK_THROWS_AS(parse_family_spec("mems:0.5:extra"), BadSetting);
}
