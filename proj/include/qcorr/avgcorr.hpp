#pragma once

#include <cstdint>
#include <string>

#include "qcorr/qstate.hpp"

namespace qcorr {

enum class SigmaMethod { ClosedForm, SingleIntegral, DoubleIntegral, MonteCarlo };

std::string to_string(SigmaMethod m);

struct SigmaResult {
    double sigma;
    SigmaMethod method;
    double error_estimate;  // absolute; standard error for Monte Carlo
};

// Average absolute correlation Sigma = <|a^T T b|> over independent
// area-uniform unit vectors a, b, reduced to the canonical singular values:
//   Sigma = (alpha/4) * [1 + (2/pi) * Integral_0^{pi/2} g(f(phi)) dphi],
//   f(phi) = (beta/alpha)^2 sin^2(phi) + (gamma/alpha)^2 cos^2(phi).
// Dispatch: alpha = 0 -> 0 exactly; |beta - gamma| <= 1e-12*alpha -> closed
// form (f constant); otherwise adaptive quadrature.  Always alpha/4 <= Sigma
// <= alpha/2.
SigmaResult average_correlation(const CanonicalCorrelation& cc);

// Evaluate with an explicit method instead of the dispatch rule.  ClosedForm
// requires beta = gamma within the dispatch tolerance; SingleIntegral and
// DoubleIntegral force their quadrature routes (alpha > 0 for the latter).
// MonteCarlo is not available here; it needs the full correlation matrix.
SigmaResult average_correlation_method(const CanonicalCorrelation& cc, SigmaMethod m);

// Same quantity from the unreduced spherical double integral
//   Sigma = (alpha/(8*pi)) Int_0^{2pi} dphi Int_0^pi dtheta sin(theta)
//           sqrt(f(phi) sin^2(theta) + cos^2(theta)).
// Cross-validation route; requires alpha > 0.
SigmaResult average_correlation_double(const CanonicalCorrelation& cc);

// Closed form for azimuthally isotropic states (beta = gamma, constant
// f = (beta/alpha)^2):  Sigma = s3 / (4*sqrt(2f+1)) * [1 + g(f)].
// At f = 1 this is s3/(2*sqrt(3)), the upper bound.
double sigma_isotropic(double s3, double f);

// Closed form for a pure state with Schmidt coefficient c in [0, 1]:
// f = 4c^2(1-c^2), Sigma = (1/4)(1 + g(f)).  Ranges over [1/4, 1/2] with the
// maximum at c = 1/sqrt(2).
double sigma_pure(double c);

// Direct Monte Carlo estimate of <|a^T T b|> with n independent direction
// pairs.  Draw i uses the stream keyed by (seed, i), so the estimate is
// reproducible and independent of evaluation order.  error_estimate is the
// standard error of the mean.
SigmaResult monte_carlo_sigma(const BlochForm& b, std::int64_t n, std::uint64_t seed);

}  // namespace qcorr
