#pragma once

#include <array>
#include <vector>

#include "gic/channel.hpp"
#include "gic/region2.hpp"

namespace gic {

struct SnrPoint3 {
    double u1 = 0.0;
    double u2 = 0.0;
    double u3 = 0.0;
};

struct SinrPoint3 {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

/// Coefficient matrix of the linear system tying powers to SINR targets,
/// together with its block decomposition: the two-user block of pair (1,2),
/// the coupling column a = (s1*a13, s2*a23) and the feedback row b = (a31, a32).
struct InterferenceMatrix3 {
    std::array<std::array<double, 3>, 3> m;
    std::array<std::array<double, 2>, 2> upper_block;
    std::array<double, 2> coupling;
    std::array<double, 2> feedback;
};

InterferenceMatrix3 build_matrix(const NormalizedChannel& ch, SinrPoint3 s);

/// S_i = u_i / (1 + sum_j a_ij u_j). Total on u >= 0; S <= u componentwise.
SinrPoint3 snr_to_sinr(const NormalizedChannel& ch, SnrPoint3 u);

/// Solve the 3x3 system for the powers realizing s. Throws SingularTransform
/// when the determinant drops to the margin, InfeasibleSinr when a solved
/// power is negative (s outside the achievable cone).
SnrPoint3 sinr_to_snr(const NormalizedChannel& ch, SinrPoint3 s);

/// Largest feasible S3 given (s1, s2), induced by user 3's power cap.
/// Throws SingularTransform beyond the hyperbola of the (1,2) pair.
double phi3(const NormalizedChannel& ch, double s1, double s2);
/// The same bound for users 1 and 2, by permutation of the channel indices.
double phi1(const NormalizedChannel& ch, double s2, double s3);
double phi2(const NormalizedChannel& ch, double s1, double s3);

/// Reference route for phi3: the bound evaluated through the explicit 2x2
/// block inverse instead of the expanded closed form. Kept separate so the
/// two routes can be checked against each other.
double phi3_via_block(const NormalizedChannel& ch, double s1, double s2);

/// Membership in the three-user SINR region: s_i <= phi_i for all three
/// index assignments. A pairwise determinant at or below the margin maps to
/// false. `rel_tol` relaxes the comparisons; 0 means exact.
bool contains(const NormalizedChannel& ch, SinrPoint3 s, double rel_tol = 0.0);

struct SurfacePoint {
    double s_a = 0.0;     // first free coordinate
    double s_b = 0.0;     // second free coordinate
    double s_bound = 0.0; // bounding value of the face's own coordinate
};

struct SurfaceFace {
    int face = 0; // 1-based index of the bounded coordinate
    std::vector<SurfacePoint> points;
};

struct SurfaceSample3 {
    std::array<SurfaceFace, 3> faces;
    int resolution = 0;
};

/// Sample the three bounding surfaces of the region. For face i the two free
/// SINRs run over a resolution x resolution grid clipped to the two-user
/// region of the free pair; grid points whose bound falls outside the full
/// region (another face cuts below) produce no sample. Every emitted point
/// is a member of the region within 1e-9.
SurfaceSample3 sample_surface(const NormalizedChannel& ch, int resolution);

} // namespace gic
