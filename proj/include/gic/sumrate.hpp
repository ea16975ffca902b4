#pragma once

#include <array>

#include "gic/region2.hpp"

namespace gic {

/// Half-planes split by the line r1 + r2 = r_star (the best single-user
/// rate): A above, B below. A full-power corner in A means full power is
/// sum-rate optimal; in B a single-user corner is.
enum class RegionLabel { A, B, OnSeparator };

/// Width of the OnSeparator band around r1 + r2 = r_star.
inline constexpr double kSeparatorTol = 1e-9;

struct RatePair {
    double r1_bits = 0.0;
    double r2_bits = 0.0;
};

struct CornerCandidate {
    SnrPoint2 u;
    double sum_rate_bits = 0.0;
};

struct SumRateSolution {
    SnrPoint2 best_u;
    double best_value_bits = 0.0;
    RegionLabel region_label = RegionLabel::OnSeparator;
    double r_star_bits = 0.0;                     // best single-user rate
    std::array<CornerCandidate, 3> corner_table;  // (0,pbar2), (pbar1,0), (pbar1,pbar2)
    RatePair m_point;                             // rates at full power
};

/// Maximize the two-user sum rate over the power box. The optimum is one of
/// the three corner candidates; ties prefer (pbar1,pbar2), then (pbar1,0),
/// then (0,pbar2).
SumRateSolution maximize_sum_rate(const NormalizedChannel& ch);

/// Side of the separator line r1 + r2 = r_star the rate pair falls on.
RegionLabel classify_point(const NormalizedChannel& ch, RatePair rates);

struct GridMax {
    SnrPoint2 u;
    double value_bits = 0.0;
};

/// Exhaustive sum-rate search on a uniform resolution x resolution grid over
/// the power box (corners included). Ties keep the smallest row-major index.
GridMax grid_oracle_max(const NormalizedChannel& ch, int resolution);

} // namespace gic
