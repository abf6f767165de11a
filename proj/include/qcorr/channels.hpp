#pragma once

#include <string>
#include <vector>

#include "qcorr/avgcorr.hpp"
#include "qcorr/qstate.hpp"

namespace qcorr {

enum class ChannelKind { BitFlip, BitPhaseFlip, PhaseFlip, AmplitudeDamping };

std::string to_string(ChannelKind k);

// One-qubit noise applied to both qubits.  gamma_rate > 0.  Amplitude damping
// is the strong-coupling, oscillatory variant and additionally needs
// kappa > gamma_rate/2 so the Rabi frequency stays real.
struct ChannelSpec {
    ChannelKind kind;
    double gamma_rate;
    double kappa = 0.0;

    static ChannelSpec unital(ChannelKind kind, double gamma_rate);
    static ChannelSpec amplitude_damping(double gamma_rate, double kappa);
};

// Damping probability at time t >= 0 (t in units of 1/gamma_rate when
// gamma_rate = 1).  Unital kinds: p = 1 - exp(-gamma t).  Amplitude damping:
// p = 1 - exp(-gamma t) [cos(D t/2) + (gamma/D) sin(D t/2)]^2 with
// D = sqrt(2 kappa gamma - gamma^2); oscillates and can repeatedly touch 1.
// Values within 1e-12 outside [0, 1] are clamped; beyond that DomainError.
double damping_probability(const ChannelSpec& spec, double t);

// Kraus route: apply the channel with probability parameter p to both qubits.
// Kraus completeness is asserted to 1e-12; trace is preserved to 1e-12.
DensityMatrix kraus_apply(const DensityMatrix& rho, const ChannelSpec& spec, double p);

// Closed-form route for Bell-diagonal coefficient vectors c = (c1, c2, c3):
//   unital, flip axis i: c_i' = c_i, c_j' = c_j (1-p)^2 for j != i;
//   amplitude damping:   c_1,2' = c_1,2 (1-p), c_3' = c_3 (1-p)^2 + p^2.
Vec3 evolve_coeffs(const Vec3& c, const ChannelSpec& spec, double p);

struct TrajectoryRow {
    double t;
    double p;
    Vec3 c;
    CanonicalCorrelation canonical;
    double sigma;
    double s2;
    double s3;
    double violation2;
    double violation3;
    bool physical;
};

// Coefficient dynamics of a Bell-diagonal initial vector on a uniform time
// grid with both endpoints included (steps >= 2 rows).  Each row is evolved
// directly from c0 via p(t), not stepwise.  The physical flag reflects the
// Bell-diagonal matrix built from the evolved coefficients alone; amplitude
// damping also grows local Bloch vectors (0, 0, p) that the correlation
// quantities do not consume.
std::vector<TrajectoryRow> trajectory(const Vec3& c0, const ChannelSpec& spec,
                                      double t_max, int steps);

// Exact CSV schema emitted for trajectories.
std::string trajectory_csv_header();
std::string trajectory_csv_row(const TrajectoryRow& row);

struct DeathTimes {
    double t_s2;     // s2 crosses 1; infinity when s2(0) <= 1
    double t_s3;     // s3 crosses 1; infinity when s3(0) <= 1
    double t_sigma;  // Sigma crosses 1/4; infinity when Sigma(0) <= 1/4
    double A;        // e^{-4 gamma t_sigma}; 0 in the infinite case
};

// Death times under any unital channel from the isotropic initial vector
// (|c|, |c|, |c|), 0 < |c| <= 1:
//   t_s2 = -ln[(1-c^2)/c^2] / (4 gamma)
//   t_s3 = -ln[(1-c^2)/(2 c^2)] / (4 gamma)
//   t_sigma = -ln(A) / (4 gamma), where A solves
//     asinh(sqrt((1-A)/A)) = ((1-|c|)/|c|) sqrt(1-A)/A
// (equivalently g(A) = (1-|c|)/|c|), bisected on (1e-12, 1-1e-12).
// Whenever finite, t_s2 <= t_s3 <= t_sigma.
DeathTimes death_times_analytic(double c_abs, const ChannelSpec& spec);

enum class CrossQuantity { S2, S3, Sigma };
enum class CrossDirection { Decay, Revival };

// Bisected crossing time of s2/s3/Sigma through its threshold (1, 1, 1/4)
// inside the bracket.  Decay expects the quantity above threshold at iv.lo and
// below at iv.hi; revival the reverse.  Throws NoSignChange when the bracket
// does not straddle such a crossing.
double threshold_crossing(const Vec3& c0, const ChannelSpec& spec,
                          CrossQuantity quantity, CrossDirection direction,
                          double t_lo, double t_hi);

}  // namespace qcorr
