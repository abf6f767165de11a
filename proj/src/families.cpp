#include "qcorr/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qcorr/avgcorr.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/numerics.hpp"

namespace qcorr {
namespace {

constexpr double kParamTol = 1e-12;

void check_unit_range(double x, const char* what) {
    if (!(x >= -kParamTol && x <= 1.0 + kParamTol))
        throw ParamOutOfRange(std::string(what) + " must lie in [0, 1]");
}

Mat4c outer(const std::array<Complex, 4>& v) {
    Mat4c m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

std::array<Complex, 4> schmidt_vector(double c, BellVariant variant) {
    const double w = std::sqrt(std::max(0.0, 1.0 - c * c));
    std::array<Complex, 4> v{};
    switch (variant) {
        case BellVariant::PsiPlus:  v[1] = c; v[2] = w; break;
        case BellVariant::PsiMinus: v[1] = c; v[2] = -w; break;
        case BellVariant::PhiPlus:  v[0] = c; v[3] = w; break;
        case BellVariant::PhiMinus: v[0] = c; v[3] = -w; break;
    }
    return v;
}

DensityMatrix from_raw(const Mat4c& m) {
    return DensityMatrix::from_matrix(m, /*require_physical=*/false);
}

DensityMatrix build_pure(const PureSchmidt& p) {
    check_unit_range(p.c, "pure: Schmidt coefficient");
    return from_raw(outer(schmidt_vector(std::clamp(p.c, 0.0, 1.0), p.variant)));
}

DensityMatrix build_werner(const Werner& w) {
    check_unit_range(w.lambda, "werner: lambda");
    const double lam = std::clamp(w.lambda, 0.0, 1.0);
    const auto bell = schmidt_vector(1.0 / std::sqrt(2.0),
                                     w.plus ? BellVariant::PsiPlus : BellVariant::PsiMinus);
    Mat4c m = Complex{lam, 0.0} * outer(bell);
    const double bg = 0.25 * (1.0 - lam);
    for (std::size_t i = 0; i < 4; ++i) m(i, i) += bg;
    return from_raw(m);
}

DensityMatrix build_mems(const Mems& mems) {
    check_unit_range(mems.s, "mems: s");
    const double s = std::clamp(mems.s, 0.0, 1.0);
    Mat4c m;
    if (s <= 2.0 / 3.0) {
        m(0, 0) = m(1, 1) = m(3, 3) = 1.0 / 3.0;
    } else {
        m(0, 0) = m(3, 3) = 0.5 * s;
        m(1, 1) = 1.0 - s;
    }
    m(0, 3) = m(3, 0) = 0.5 * s;
    return from_raw(m);
}

DensityMatrix build_belldiag(const BellDiagonal& bd) {
    for (double ci : bd.c)
        if (!(ci >= -1.0 - kParamTol && ci <= 1.0 + kParamTol))
            throw ParamOutOfRange("belldiag: entries must lie in [-1, 1]");
    BlochForm b;
    for (std::size_t i = 0; i < 3; ++i) b.T[i][i] = bd.c[i];
    return bloch_compose(b);
}

CanonicalCorrelation sorted_canonical(double x, double y, double z) {
    std::array<double, 3> v{std::abs(x), std::abs(y), std::abs(z)};
    std::sort(v.begin(), v.end());
    return {v[2], v[1], v[0]};
}

// Single-integral Sigma for canonical values (a, b, c) with a > 0, evaluated
// directly from the kernel.
double sigma_single(double a, double b, double c) {
    const double fb = (b / a) * (b / a);
    const double fc = (c / a) * (c / a);
    const auto integrand = [fb, fc](double phi) {
        const double sp = std::sin(phi);
        const double cp = std::cos(phi);
        return sigma_kernel(std::min(1.0, fb * sp * sp + fc * cp * cp));
    };
    const double I = integrate(integrand, {0.0, M_PI_2}, 1e-12, 1e-14).value;
    return 0.25 * a * (1.0 + (2.0 / M_PI) * I);
}

FamilyExpected expected_pure(const PureSchmidt& p) {
    check_unit_range(p.c, "pure: Schmidt coefficient");
    const double c = std::clamp(p.c, 0.0, 1.0);
    const double b = 2.0 * c * std::sqrt(std::max(0.0, 1.0 - c * c));
    FamilyExpected e;
    e.canonical = {1.0, b, b};
    e.s3 = std::sqrt(1.0 + 2.0 * b * b);
    e.sigma_closed = sigma_pure(c);
    return e;
}

FamilyExpected expected_werner(const Werner& w) {
    check_unit_range(w.lambda, "werner: lambda");
    const double lam = std::clamp(w.lambda, 0.0, 1.0);
    return {{lam, lam, lam}, std::sqrt(3.0) * lam, 0.5 * lam};
}

FamilyExpected expected_mems(const Mems& mems) {
    check_unit_range(mems.s, "mems: s");
    const double s = std::clamp(mems.s, 0.0, 1.0);
    FamilyExpected e;
    if (s <= 2.0 / 3.0) {
        e.canonical = sorted_canonical(s, s, 1.0 / 3.0);
        e.s3 = std::sqrt(2.0 * s * s + 1.0 / 9.0);
        // Below the crossover the state is azimuthally isotropic around the
        // dominant axis and Sigma closes over the kernel at f = 9 s^2.
        e.sigma_closed = (s < 1.0 / 3.0)
                             ? (1.0 / 12.0) * (1.0 + sigma_kernel(9.0 * s * s))
                             : sigma_single(s, s, 1.0 / 3.0);
    } else {
        e.canonical = sorted_canonical(s, s, 2.0 * s - 1.0);
        e.s3 = std::sqrt(6.0 * s * s - 4.0 * s + 1.0);
        e.sigma_closed = sigma_single(s, s, 2.0 * s - 1.0);
    }
    return e;
}

FamilyExpected expected_belldiag(const BellDiagonal& bd) {
    FamilyExpected e;
    e.canonical = sorted_canonical(bd.c[0], bd.c[1], bd.c[2]);
    e.s3 = std::sqrt(dot(bd.c, bd.c));
    e.sigma_closed = std::nullopt;
    return e;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.push_back("");
    return parts;
}

double parse_number(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double x = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return x;
    } catch (const std::exception&) {
        throw BadSetting("family spec: bad number '" + text + "' for " + what);
    }
}

}  // namespace

DensityMatrix build(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> DensityMatrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PureSchmidt>) return build_pure(s);
            else if constexpr (std::is_same_v<T, Werner>) return build_werner(s);
            else if constexpr (std::is_same_v<T, Mems>) return build_mems(s);
            else return build_belldiag(s);
        },
        spec);
}

FamilyExpected family_expected(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> FamilyExpected {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PureSchmidt>) return expected_pure(s);
            else if constexpr (std::is_same_v<T, Werner>) return expected_werner(s);
            else if constexpr (std::is_same_v<T, Mems>) return expected_mems(s);
            else return expected_belldiag(s);
        },
        spec);
}

FamilySpec parse_family_spec(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty() || parts[0].empty())
        throw BadSetting("family spec: expected '<family>:<params>'");
    const std::string& name = parts[0];

    if (name == "werner") {
        if (parts.size() < 2 || parts.size() > 3)
            throw BadSetting("family spec: werner takes 'werner:lambda[:+|-]'");
        Werner w{parse_number(parts[1], "werner lambda"), false};
        if (parts.size() == 3) {
            if (parts[2] == "+") w.plus = true;
            else if (parts[2] == "-") w.plus = false;
            else throw BadSetting("family spec: werner sign must be '+' or '-'");
        }
        return w;
    }
    if (name == "pure") {
        if (parts.size() < 2 || parts.size() > 3)
            throw BadSetting("family spec: pure takes 'pure:c[:psi+|psi-|phi+|phi-]'");
        PureSchmidt p{parse_number(parts[1], "pure c"), BellVariant::PsiPlus};
        if (parts.size() == 3) {
            if (parts[2] == "psi+") p.variant = BellVariant::PsiPlus;
            else if (parts[2] == "psi-") p.variant = BellVariant::PsiMinus;
            else if (parts[2] == "phi+") p.variant = BellVariant::PhiPlus;
            else if (parts[2] == "phi-") p.variant = BellVariant::PhiMinus;
            else throw BadSetting("family spec: unknown pure variant '" + parts[2] + "'");
        }
        return p;
    }
    if (name == "mems") {
        if (parts.size() != 2)
            throw BadSetting("family spec: mems takes 'mems:s'");
        return Mems{parse_number(parts[1], "mems s")};
    }
    if (name == "belldiag") {
        if (parts.size() != 2)
            throw BadSetting("family spec: belldiag takes 'belldiag:c1,c2,c3'");
        const auto nums = split(parts[1], ',');
        if (nums.size() != 3)
            throw BadSetting("family spec: belldiag needs three comma-separated entries");
        BellDiagonal bd{};
        for (std::size_t i = 0; i < 3; ++i)
            bd.c[i] = parse_number(nums[i], "belldiag entry");
        return bd;
    }
    throw BadSetting("family spec: unknown family '" + name + "'");
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PureSchmidt>) return "pure";
            else if constexpr (std::is_same_v<T, Werner>) return "werner";
            else if constexpr (std::is_same_v<T, Mems>) return "mems";
            else { (void)s; return "belldiag"; }
        },
        spec);
}

}  // namespace qcorr
