#include "gic/sumrate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gic/errors.hpp"

namespace gic {

namespace {

void require_two_user(const NormalizedChannel& ch) {
    if (ch.n() != 2)
        throw DomainError("two-user operation on an n=" + std::to_string(ch.n()) +
                          " channel");
}

} // namespace

SumRateSolution maximize_sum_rate(const NormalizedChannel& ch) {
    require_two_user(ch);
    const double p1 = ch.pbar(0), p2 = ch.pbar(1);

    SumRateSolution sol;
    sol.corner_table = {{{{0.0, p2}, sum_rate(ch, {0.0, p2})},
                         {{p1, 0.0}, sum_rate(ch, {p1, 0.0})},
                         {{p1, p2}, sum_rate(ch, {p1, p2})}}};

    // Preference order on ties: full power, then (pbar1, 0), then (0, pbar2).
    int best = 2;
    if (sol.corner_table[1].sum_rate_bits > sol.corner_table[best].sum_rate_bits) best = 1;
    if (sol.corner_table[0].sum_rate_bits > sol.corner_table[best].sum_rate_bits) best = 0;
    sol.best_u = sol.corner_table[best].u;
    sol.best_value_bits = sol.corner_table[best].sum_rate_bits;

    sol.r_star_bits = std::max(rate_bits(p1), rate_bits(p2));
    const SinrPoint2 sm = snr_to_sinr(ch, {p1, p2});
    sol.m_point = {rate_bits(sm.s1), rate_bits(sm.s2)};
    sol.region_label = classify_point(ch, sol.m_point);
    return sol;
}

RegionLabel classify_point(const NormalizedChannel& ch, RatePair rates) {
    require_two_user(ch);
    const double r_star = std::max(rate_bits(ch.pbar(0)), rate_bits(ch.pbar(1)));
    const double sum = rates.r1_bits + rates.r2_bits;
    if (std::abs(sum - r_star) <= kSeparatorTol) return RegionLabel::OnSeparator;
    return sum > r_star ? RegionLabel::A : RegionLabel::B;
}

GridMax grid_oracle_max(const NormalizedChannel& ch, int resolution) {
    require_two_user(ch);
    if (resolution < 2) throw DomainError("grid oracle needs resolution >= 2");
    const double p1 = ch.pbar(0), p2 = ch.pbar(1);

    GridMax best{{0.0, 0.0}, -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < resolution; ++i) {
        const double u1 = p1 * (static_cast<double>(i) / (resolution - 1));
        for (int j = 0; j < resolution; ++j) {
            const double u2 = p2 * (static_cast<double>(j) / (resolution - 1));
            const double v = sum_rate(ch, {u1, u2});
            if (v > best.value_bits) best = {{u1, u2}, v};
        }
    }
    return best;
}

} // namespace gic
