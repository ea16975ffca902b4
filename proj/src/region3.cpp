#include "gic/region3.hpp"

#include <algorithm>
#include <string>

#include "gic/errors.hpp"

namespace gic {

namespace {

void require_three_user(const NormalizedChannel& ch) {
    if (ch.n() != 3)
        throw DomainError("three-user operation on an n=" + std::to_string(ch.n()) +
                          " channel");
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

InterferenceMatrix3 build_matrix(const NormalizedChannel& ch, SinrPoint3 s) {
    require_three_user(ch);
    InterferenceMatrix3 r;
    r.upper_block = {{{1.0, -(s.s1 * ch.a(0, 1))}, {-(s.s2 * ch.a(1, 0)), 1.0}}};
    r.coupling = {s.s1 * ch.a(0, 2), s.s2 * ch.a(1, 2)};
    r.feedback = {ch.a(2, 0), ch.a(2, 1)};
    r.m = {{{r.upper_block[0][0], r.upper_block[0][1], -r.coupling[0]},
            {r.upper_block[1][0], r.upper_block[1][1], -r.coupling[1]},
            {-(s.s3 * r.feedback[0]), -(s.s3 * r.feedback[1]), 1.0}}};
    return r;
}

SinrPoint3 snr_to_sinr(const NormalizedChannel& ch, SnrPoint3 u) {
    require_three_user(ch);
    return {u.u1 / (1.0 + ch.a(0, 1) * u.u2 + ch.a(0, 2) * u.u3),
            u.u2 / (1.0 + ch.a(1, 0) * u.u1 + ch.a(1, 2) * u.u3),
            u.u3 / (1.0 + ch.a(2, 0) * u.u1 + ch.a(2, 1) * u.u2)};
}

SnrPoint3 sinr_to_snr(const NormalizedChannel& ch, SinrPoint3 s) {
    const auto A = build_matrix(ch, s).m;
    const double det = det3(A);
    if (det <= kSingularEps)
        throw SingularTransform("SINR triple at or beyond the invertibility asymptote");

    const std::array<double, 3> rhs = {s.s1, s.s2, s.s3};
    std::array<double, 3> u{};
    for (int c = 0; c < 3; ++c) {
        auto M = A;
        for (int r = 0; r < 3; ++r) M[r][c] = rhs[r];
        u[c] = det3(M) / det;
    }
    if (u[0] < 0.0 || u[1] < 0.0 || u[2] < 0.0)
        throw InfeasibleSinr("SINR triple outside the achievable cone");
    return {u[0], u[1], u[2]};
}

double phi3(const NormalizedChannel& ch, double s1, double s2) {
    require_three_user(ch);
    const double a12 = ch.a(0, 1), a21 = ch.a(1, 0);
    const double a13 = ch.a(0, 2), a23 = ch.a(1, 2);
    const double a31 = ch.a(2, 0), a32 = ch.a(2, 1);
    const double p3 = ch.pbar(2);

    const double det = 1.0 - a12 * a21 * s1 * s2;
    if (det <= kSingularEps)
        throw SingularTransform("free SINR pair beyond its invertibility asymptote");
    // Evaluation order matters: with s1 = 0 or s2 = 0 this reduces bit-exactly
    // to the two-user cap bound of the remaining pair.
    const double den = det + s1 * (1.0 + a13 * p3) * (a31 + s2 * a32 * a21) +
                       s2 * (1.0 + a23 * p3) * (a32 + s1 * a31 * a12);
    return p3 * det / den;
}

double phi1(const NormalizedChannel& ch, double s2, double s3) {
    const std::array<int, 3> order = {1, 2, 0};
    return phi3(subchannel(ch, order), s2, s3);
}

double phi2(const NormalizedChannel& ch, double s1, double s3) {
    const std::array<int, 3> order = {0, 2, 1};
    return phi3(subchannel(ch, order), s1, s3);
}

double phi3_via_block(const NormalizedChannel& ch, double s1, double s2) {
    require_three_user(ch);
    const double a12 = ch.a(0, 1), a21 = ch.a(1, 0);
    const double a13 = ch.a(0, 2), a23 = ch.a(1, 2);
    const double a31 = ch.a(2, 0), a32 = ch.a(2, 1);
    const double p3 = ch.pbar(2);

    const double det = 1.0 - a12 * a21 * s1 * s2;
    if (det <= kSingularEps)
        throw SingularTransform("free SINR pair beyond its invertibility asymptote");
    // inverse of the (1,2) block: (1/det) [[1, s1*a12], [s2*a21, 1]]
    const double x1 = s1 * (1.0 + a13 * p3);
    const double x2 = s2 * (1.0 + a23 * p3);
    const double y1 = (x1 + s1 * a12 * x2) / det;
    const double y2 = (s2 * a21 * x1 + x2) / det;
    return p3 / (1.0 + (a31 * y1 + a32 * y2));
}

bool contains(const NormalizedChannel& ch, SinrPoint3 s, double rel_tol) {
    require_three_user(ch);
    const std::array<double, 3> v = {s.s1, s.s2, s.s3};
    // (bounded index, free pair) in the order the bounds are evaluated below
    constexpr int asg[3][3] = {{2, 0, 1}, {0, 1, 2}, {1, 0, 2}};
    for (const auto& a : asg) {
        const int j = a[1], k = a[2];
        if (1.0 - ch.a(j, k) * ch.a(k, j) * v[j] * v[k] <= kSingularEps) return false;
    }
    const auto within = [rel_tol](double x, double bound) {
        return x <= bound + rel_tol * std::max(1.0, bound);
    };
    return within(s.s3, phi3(ch, s.s1, s.s2)) && within(s.s1, phi1(ch, s.s2, s.s3)) &&
           within(s.s2, phi2(ch, s.s1, s.s3));
}

SurfaceSample3 sample_surface(const NormalizedChannel& ch, int resolution) {
    require_three_user(ch);
    if (resolution < 2) throw DomainError("surface sampling needs resolution >= 2");

    SurfaceSample3 out;
    out.resolution = resolution;
    constexpr int asg[3][3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}; // (bound, free a, free b)
    for (int f = 0; f < 3; ++f) {
        const int i = asg[f][0], j = asg[f][1], k = asg[f][2];
        const std::array<int, 2> pair = {j, k};
        const NormalizedChannel pair_jk = subchannel(ch, pair);
        SurfaceFace face{i + 1, {}};
        for (int r = 0; r < resolution; ++r) {
            const double sj = ch.pbar(j) * (static_cast<double>(r) / (resolution - 1));
            for (int c = 0; c < resolution; ++c) {
                const double sk = ch.pbar(k) * (static_cast<double>(c) / (resolution - 1));
                if (1.0 - ch.a(j, k) * ch.a(k, j) * sj * sk <= kSingularEps) continue;
                if (!contains(pair_jk, SinrPoint2{sj, sk})) continue;
                const double si = (i == 0)   ? phi1(ch, sj, sk)
                                  : (i == 1) ? phi2(ch, sj, sk)
                                             : phi3(ch, sj, sk);
                std::array<double, 3> p{};
                p[i] = si;
                p[j] = sj;
                p[k] = sk;
                // another face may cut below this one; such grid points get no sample
                if (!contains(ch, SinrPoint3{p[0], p[1], p[2]}, 1e-9)) continue;
                face.points.push_back({sj, sk, si});
            }
        }
        out.faces[f] = std::move(face);
    }
    return out;
}

} // namespace gic
