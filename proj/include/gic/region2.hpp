#pragma once

#include <cmath>
#include <vector>

#include "gic/channel.hpp"

namespace gic {

/// Determinant margin below which the SINR->SNR maps are treated as singular.
inline constexpr double kSingularEps = 1e-12;

/// Rate of a real Gaussian channel at the given SINR, in bits per real
/// channel use. This convention is fixed throughout the library.
inline double rate_bits(double sinr) { return 0.5 * std::log2(1.0 + sinr); }

struct SnrPoint2 {
    double u1 = 0.0;
    double u2 = 0.0;
};

struct SinrPoint2 {
    double s1 = 0.0;
    double s2 = 0.0;
};

/// Which user's power cap produces the binding constraint on a boundary point.
enum class ActiveConstraint { UserOneCap, UserTwoCap };

struct BoundaryPoint2 {
    double t = 0.0;          // boundary parameter, equals s1
    SinrPoint2 sinr;         // (t, f(t))
    double c1_bits = 0.0;
    double c2_bits = 0.0;
    ActiveConstraint active = ActiveConstraint::UserTwoCap;
};

enum class SpacingMode { UniformT, UniformRate };

/// S_i = u_i / (1 + a_ij u_j). Total on u >= 0; S <= u componentwise.
SinrPoint2 snr_to_sinr(const NormalizedChannel& ch, SnrPoint2 u);

/// Inverse map. Throws SingularTransform when 1 - a12*a21*s1*s2 <= margin.
SnrPoint2 sinr_to_snr(const NormalizedChannel& ch, SinrPoint2 s);

/// Largest feasible S1 given the other user's SINR, induced by user 1's cap.
double phi1(const NormalizedChannel& ch, double s2);
/// Same bound for user 2 (index-swapped formula).
double phi2(const NormalizedChannel& ch, double s1);

/// Membership in the SINR region: s1 <= phi1(s2) and s2 <= phi2(s1).
/// `rel_tol` relaxes both comparisons; 0 means exact.
bool contains(const NormalizedChannel& ch, SinrPoint2 s, double rel_tol = 0.0);

struct BoundaryValue {
    double s2 = 0.0;
    ActiveConstraint active = ActiveConstraint::UserTwoCap;
};

/// Upper edge of the SINR region as a function of s1 = t in [0, pbar1]:
/// f(t) = min(phi2(t), (pbar1 - t)/(a12 t (1 + a21 pbar1))), with the second
/// branch excluded where its denominator vanishes (t = 0 or a12 = 0).
BoundaryValue boundary_f(const NormalizedChannel& ch, double t);

/// Sample the capacity-region boundary as (c1, c2) pairs. Endpoints are
/// always included exactly; c2 is non-increasing along the curve.
std::vector<BoundaryPoint2> capacity_boundary(const NormalizedChannel& ch,
                                              int num_samples,
                                              SpacingMode spacing = SpacingMode::UniformT);

/// Sum of both users' rates at the allocation u. Throws DomainError if u is
/// outside the power box.
double sum_rate(const NormalizedChannel& ch, SnrPoint2 u);

} // namespace gic
