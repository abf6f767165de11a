#pragma once

#include <optional>
#include <string>
#include <variant>

#include "qcorr/qstate.hpp"

namespace qcorr {

// Pure Schmidt-form states c|xy> +/- sqrt(1-c^2)|yx>.
enum class BellVariant { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

struct PureSchmidt {
    double c;  // Schmidt coefficient in [0, 1]
    BellVariant variant = BellVariant::PsiPlus;
};

struct Werner {
    double lambda;  // mixing weight in [0, 1]
    bool plus = false;  // singlet (|psi->) when false; triplet |psi+> when true
};

// Maximally entangled mixed states, one branch change at s = 2/3.
struct Mems {
    double s;  // in [0, 1]
};

struct BellDiagonal {
    Vec3 c;  // diagonal correlation entries, each in [-1, 1]
};

using FamilySpec = std::variant<PureSchmidt, Werner, Mems, BellDiagonal>;

struct FamilyExpected {
    CanonicalCorrelation canonical;
    double s3;
    // Analytic Sigma where the family has one; Bell-diagonal states do not.
    std::optional<double> sigma_closed;
};

// Density matrix of the family member; throws ParamOutOfRange for parameters
// outside the stated ranges (tolerance 1e-12).  Bell-diagonal members may be
// unphysical and are returned with physical() = false rather than rejected.
DensityMatrix build(const FamilySpec& spec);

// Closed-form canonical singular values, steering degree s3 and (where
// available) Sigma for the family member.
FamilyExpected family_expected(const FamilySpec& spec);

// Mini-language: "werner:0.6[:+|-]", "pure:0.9[:psi+|psi-|phi+|phi-]",
// "mems:0.5", "belldiag:0.8,1,1".  Throws BadSetting on malformed input.
FamilySpec parse_family_spec(const std::string& text);

std::string family_name(const FamilySpec& spec);

}  // namespace qcorr
