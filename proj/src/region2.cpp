#include "gic/region2.hpp"

#include <algorithm>
#include <cassert>
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

SinrPoint2 snr_to_sinr(const NormalizedChannel& ch, SnrPoint2 u) {
    require_two_user(ch);
    const double a12 = ch.a(0, 1), a21 = ch.a(1, 0);
    return {u.u1 / (1.0 + a12 * u.u2), u.u2 / (1.0 + a21 * u.u1)};
}

SnrPoint2 sinr_to_snr(const NormalizedChannel& ch, SinrPoint2 s) {
    require_two_user(ch);
    const double a12 = ch.a(0, 1), a21 = ch.a(1, 0);
    const double det = 1.0 - a12 * a21 * s.s1 * s.s2;
    if (det <= kSingularEps)
        throw SingularTransform("SINR pair at or beyond the invertibility asymptote");
    return {s.s1 * (1.0 + s.s2 * a12) / det, s.s2 * (1.0 + s.s1 * a21) / det};
}

// The cap-induced bounds share one expression shape; keeping it in a helper
// pins the evaluation order, on which the three-user bounds degenerate
// bit-exactly.
namespace {
inline double cap_bound(double p_own, double a_in, double a_out, double s_other) {
    return p_own / (1.0 + s_other * (1.0 + a_out * p_own) * a_in);
}
} // namespace

double phi1(const NormalizedChannel& ch, double s2) {
    require_two_user(ch);
    return cap_bound(ch.pbar(0), ch.a(0, 1), ch.a(1, 0), s2);
}

double phi2(const NormalizedChannel& ch, double s1) {
    require_two_user(ch);
    return cap_bound(ch.pbar(1), ch.a(1, 0), ch.a(0, 1), s1);
}

bool contains(const NormalizedChannel& ch, SinrPoint2 s, double rel_tol) {
    const double b1 = phi1(ch, s.s2);
    const double b2 = phi2(ch, s.s1);
    const bool inside = s.s1 <= b1 + rel_tol * std::max(1.0, b1) &&
                        s.s2 <= b2 + rel_tol * std::max(1.0, b2);
#ifndef NDEBUG
    // The cap constraints imply the hyperbola constraint; spot-check it.
    if (inside) {
        const double prod = ch.a(0, 1) * ch.a(1, 0) * s.s1 * s.s2;
        assert(prod < 1.0 + rel_tol);
    }
#endif
    return inside;
}

BoundaryValue boundary_f(const NormalizedChannel& ch, double t) {
    require_two_user(ch);
    const double p1 = ch.pbar(0);
    if (!(t >= 0.0) || t > p1)
        throw DomainError("boundary parameter outside [0, pbar1]");
    const double b1 = phi2(ch, t);
    const double denom = ch.a(0, 1) * t * (1.0 + ch.a(1, 0) * p1);
    if (denom > 0.0) {
        const double b2 = (p1 - t) / denom;
        if (b2 < b1) return {b2, ActiveConstraint::UserOneCap};
    }
    return {b1, ActiveConstraint::UserTwoCap};
}

std::vector<BoundaryPoint2> capacity_boundary(const NormalizedChannel& ch,
                                              int num_samples, SpacingMode spacing) {
    require_two_user(ch);
    if (num_samples < 2) throw DomainError("boundary sampling needs at least 2 samples");
    const double p1 = ch.pbar(0);
    const double c_max = rate_bits(p1);

    std::vector<BoundaryPoint2> out;
    out.reserve(static_cast<std::size_t>(num_samples));
    for (int k = 0; k < num_samples; ++k) {
        double t;
        if (k == 0) {
            t = 0.0;
        } else if (k == num_samples - 1) {
            t = p1;
        } else if (spacing == SpacingMode::UniformT) {
            t = p1 * (static_cast<double>(k) / (num_samples - 1));
        } else {
            const double c = c_max * (static_cast<double>(k) / (num_samples - 1));
            t = std::clamp(std::exp2(2.0 * c) - 1.0, 0.0, p1);
        }
        const BoundaryValue f = boundary_f(ch, t);
        out.push_back({t, {t, f.s2}, rate_bits(t), rate_bits(f.s2), f.active});
    }
    return out;
}

double sum_rate(const NormalizedChannel& ch, SnrPoint2 u) {
    require_two_user(ch);
    if (!(u.u1 >= 0.0) || !(u.u2 >= 0.0) || u.u1 > ch.pbar(0) || u.u2 > ch.pbar(1))
        throw DomainError("allocation outside the power box");
    const SinrPoint2 s = snr_to_sinr(ch, u);
    return rate_bits(s.s1) + rate_bits(s.s2);
}

} // namespace gic
