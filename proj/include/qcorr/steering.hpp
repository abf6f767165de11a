#pragma once

#include <vector>

#include "qcorr/avgcorr.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

// Paired measurement directions, n = 2 or 3 per side, each unit norm within
// 1e-10 (validated on construction).
struct MeasurementSettings {
    std::vector<Vec3> a;
    std::vector<Vec3> b;

    MeasurementSettings(std::vector<Vec3> a_in, std::vector<Vec3> b_in);
    int n() const { return static_cast<int>(a.size()); }
};

enum class Tristate { No, Indeterminate, Yes };

std::string to_string(Tristate t);

struct Classification {
    bool bell_nonlocal;       // s2 > 1
    bool steerable3;          // s3 > 1
    Tristate nonclassical;    // from Sigma against the bound window
};

struct SigmaBounds {
    double lower;
    double upper;
};

struct SteeringReport {
    CanonicalCorrelation canonical;
    double s2;
    double s3;
    double violation2;   // normalized, in [0, 1]
    double violation3;
    double chsh_max;     // 2 * s2
    SigmaBounds bounds3; // Sigma window implied by s3
    Classification classification;
};

// s_n = sqrt of the sum of the n largest squared singular values; n = 2 or 3.
// Steering criterion: the state is n-setting steerable iff s_n > 1 (strict).
double degree_of_steerability(const CanonicalCorrelation& cc, int n);

// Normalized violation S_n = max(0, (s_n - 1)/(sqrt(n) - 1)), in [0, 1] for
// physical states.
double steering_violation(const CanonicalCorrelation& cc, int n);

// Linear steering functional F_n = (1/sqrt(n)) |sum_i a_i^T T b_i| for the
// given settings.  For arbitrary unit settings F_n <= sqrt(n)*alpha; when the
// a_i are mutually orthogonal F_n <= s_n, with equality at the optimum.
double steering_functional(const BlochForm& b, const MeasurementSettings& m);

// Sigma window implied by the steering degree:
//   lower = s_n/4 for s_n < 1, else E(s_n)/4;  upper = s_n/(2*sqrt(n)).
// Throws DomainError when s_n is outside [0, sqrt(n)] beyond 1e-9.
SigmaBounds sigma_bounds(double s_n, int n);

// Nonclassicality from Sigma alone: yes if Sigma >= 1/(2*sqrt(2)) (forces
// s2 > 1), no if Sigma < 1/4 (forces s3 <= 1), else indeterminate.
Classification classify(double sigma, double s2, double s3);

SteeringReport steering_report(const CanonicalCorrelation& cc, double sigma);

}  // namespace qcorr
