#include <doctest.h>

#include <array>
#include <cmath>

#include "gic/channel.hpp"
#include "gic/errors.hpp"
#include "gic/region2.hpp"
#include "gic/region3.hpp"
#include "gic/rng.hpp"
#include "test_util.hpp"

using gic::NormalizedChannel;
using gic::SinrPoint2;
using gic::SinrPoint3;
using gic::SnrPoint3;
using testutil::close;

namespace {

// independent residual check of the linear system u_i = s_i (1 + sum a_ij u_j)
double system_residual(const NormalizedChannel& ch, SinrPoint3 s, SnrPoint3 u) {
    const double r1 = u.u1 - s.s1 * (1.0 + ch.a(0, 1) * u.u2 + ch.a(0, 2) * u.u3);
    const double r2 = u.u2 - s.s2 * (1.0 + ch.a(1, 0) * u.u1 + ch.a(1, 2) * u.u3);
    const double r3 = u.u3 - s.s3 * (1.0 + ch.a(2, 0) * u.u1 + ch.a(2, 1) * u.u2);
    return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

// closed-form elimination of u3 through the 2x2 block inverse
double u3_closed_form(const NormalizedChannel& ch, SinrPoint3 s) {
    const double det = 1.0 - ch.a(0, 1) * ch.a(1, 0) * s.s1 * s.s2;
    const double inv00 = 1.0 / det, inv01 = s.s1 * ch.a(0, 1) / det;
    const double inv10 = s.s2 * ch.a(1, 0) / det, inv11 = 1.0 / det;
    const double b1 = ch.a(2, 0), b2 = ch.a(2, 1);
    const double a1 = s.s1 * ch.a(0, 2), a2 = s.s2 * ch.a(1, 2);
    const double bt_inv_s = b1 * (inv00 * s.s1 + inv01 * s.s2) +
                            b2 * (inv10 * s.s1 + inv11 * s.s2);
    const double bt_inv_a = b1 * (inv00 * a1 + inv01 * a2) + b2 * (inv10 * a1 + inv11 * a2);
    return s.s3 * (1.0 + bt_inv_s) / (1.0 - s.s3 * bt_inv_a);
}

} // namespace

TEST_CASE("build_matrix: identity at the origin and without interference") {
    const NormalizedChannel quiet = gic::make_three_user(0, 0, 0, 0, 0, 0, 1, 2, 3);
    const NormalizedChannel ch =
        gic::make_three_user(0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 1, 1, 1);

    for (const auto& m : {gic::build_matrix(ch, {0, 0, 0}).m,
                          gic::build_matrix(quiet, {1, 1, 1}).m}) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(m[i][j] == (i == j ? 1.0 : 0.0));
    }

    const auto built = gic::build_matrix(ch, {1, 1, 1});
    const std::array<std::array<double, 3>, 3> expected = {
        {{1.0, -0.5, -0.5}, {-0.5, 1.0, -0.5}, {-0.5, -0.5, 1.0}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(built.m[i][j] == expected[i][j]);
}

TEST_CASE("build_matrix: block decomposition reproduces the full matrix") {
    gic::Rng rng(401);
    for (int t = 0; t < 50; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const SinrPoint3 s{rng.uniform(0, 5), rng.uniform(0, 5), rng.uniform(0, 5)};
        const auto b = gic::build_matrix(ch, s);
        CHECK(b.m[0][0] == b.upper_block[0][0]);
        CHECK(b.m[0][1] == b.upper_block[0][1]);
        CHECK(b.m[1][0] == b.upper_block[1][0]);
        CHECK(b.m[1][1] == b.upper_block[1][1]);
        CHECK(b.m[0][2] == -b.coupling[0]);
        CHECK(b.m[1][2] == -b.coupling[1]);
        CHECK(b.m[2][0] == -(s.s3 * b.feedback[0]));
        CHECK(b.m[2][1] == -(s.s3 * b.feedback[1]));
        CHECK(b.m[2][2] == 1.0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(b.m[i][j] <= 0.0);
    }
}

TEST_CASE("snr_to_sinr (3u): identity without interference, axis fixed points") {
    const NormalizedChannel quiet = gic::make_three_user(0, 0, 0, 0, 0, 0, 2, 3, 4);
    const SinrPoint3 s = gic::snr_to_sinr(quiet, SnrPoint3{2.0, 3.0, 4.0});
    CHECK(s.s1 == 2.0);
    CHECK(s.s2 == 3.0);
    CHECK(s.s3 == 4.0);

    gic::Rng rng(402);
    for (int t = 0; t < 20; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const SinrPoint3 axis = gic::snr_to_sinr(ch, SnrPoint3{ch.pbar(0), 0.0, 0.0});
        CHECK(axis.s1 == ch.pbar(0));
        CHECK(axis.s2 == 0.0);
        CHECK(axis.s3 == 0.0);
    }

    const NormalizedChannel sym =
        gic::make_three_user(0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 1, 1, 1);
    const SinrPoint3 half = gic::snr_to_sinr(sym, SnrPoint3{1.0, 1.0, 1.0});
    CHECK(half.s1 == 0.5);
    CHECK(half.s2 == 0.5);
    CHECK(half.s3 == 0.5);
}

TEST_CASE("sinr_to_snr (3u): origin, zero third target, residuals") {
    const NormalizedChannel sym =
        gic::make_three_user(0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 4, 4, 4);
    const SnrPoint3 origin = gic::sinr_to_snr(sym, SinrPoint3{0, 0, 0});
    CHECK(origin.u1 == 0.0);
    CHECK(origin.u2 == 0.0);
    CHECK(origin.u3 == 0.0);

    // a zero third target forces u3 = 0 and reduces to the two-user solve
    gic::Rng rng(403);
    const std::array<int, 2> pair12 = {0, 1};
    for (int t = 0; t < 50; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const NormalizedChannel pair_ch = gic::subchannel(ch, pair12);
        const SinrPoint2 target = gic::snr_to_sinr(
            pair_ch, gic::SnrPoint2{pair_ch.pbar(0) * rng.unit(),
                                    pair_ch.pbar(1) * rng.unit()});
        const SnrPoint3 u = gic::sinr_to_snr(ch, SinrPoint3{target.s1, target.s2, 0.0});
        CHECK(u.u3 == 0.0);
        const gic::SnrPoint2 u2 = gic::sinr_to_snr(pair_ch, target);
        CHECK(close(u.u1, u2.u1, 1e-12));
        CHECK(close(u.u2, u2.u2, 1e-12));
    }

    const SinrPoint3 s{1.0, 1.0, 1.0};
    const SnrPoint3 u = gic::sinr_to_snr(sym, s);
    CHECK(system_residual(sym, s, u) < 1e-12);
}

TEST_CASE("sinr_to_snr (3u): agrees with the u3 block closed form") {
    gic::Rng rng(404);
    for (int t = 0; t < 200; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const SinrPoint3 s = gic::snr_to_sinr(
            ch, SnrPoint3{ch.pbar(0) * rng.unit(), ch.pbar(1) * rng.unit(),
                          ch.pbar(2) * rng.unit()});
        const SnrPoint3 u = gic::sinr_to_snr(ch, s);
        const double u3 = u3_closed_form(ch, s);
        CHECK(testutil::rel_gap(u.u3, u3) < 1e-10);
    }
}

TEST_CASE("sinr_to_snr (3u): singular and infeasible targets are distinguished") {
    const NormalizedChannel ch = gic::make_three_user(1, 1, 1, 1, 1, 1, 10, 10, 10);
    CHECK_THROWS_AS((void)gic::sinr_to_snr(ch, SinrPoint3{1.0, 1.0, 1.0}), gic::SingularTransform);
    CHECK_THROWS_AS((void)gic::sinr_to_snr(ch, SinrPoint3{0.9, 0.9, 0.9}), gic::SingularTransform);
    // a negative target keeps the matrix regular but needs a negative power
    const NormalizedChannel mild =
        gic::make_three_user(0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 4, 4, 4);
    CHECK_THROWS_AS((void)gic::sinr_to_snr(mild, SinrPoint3{-0.5, 0.1, 0.1}), gic::InfeasibleSinr);
}

TEST_CASE("round trip (3u): identity on the power box") {
    gic::Rng rng(405);
    double worst = 0.0;
    for (int t = 0; t < 2000; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const SnrPoint3 u{ch.pbar(0) * rng.unit(), ch.pbar(1) * rng.unit(),
                          ch.pbar(2) * rng.unit()};
        const SinrPoint3 s = gic::snr_to_sinr(ch, u);
        CHECK(s.s1 <= u.u1);
        CHECK(s.s2 <= u.u2);
        CHECK(s.s3 <= u.u3);
        const SnrPoint3 back = gic::sinr_to_snr(ch, s);
        const double scale = std::max({u.u1, u.u2, u.u3, 1e-300});
        worst = std::max(worst, std::max({std::abs(back.u1 - u.u1), std::abs(back.u2 - u.u2),
                                          std::abs(back.u3 - u.u3)}) /
                                    scale);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("phi3: cap at the origin, block-route agreement") {
    const NormalizedChannel ch =
        gic::make_three_user(0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 1.0, 2.0, 3.0);
    CHECK(gic::phi3(ch, 0.0, 0.0) == 3.0);

    gic::Rng rng(406);
    const std::array<int, 2> pair12 = {0, 1};
    for (int t = 0; t < 200; ++t) {
        const NormalizedChannel c = testutil::random_n_user(rng, 3);
        const NormalizedChannel pair_ch = gic::subchannel(c, pair12);
        const SinrPoint2 s = gic::snr_to_sinr(
            pair_ch, gic::SnrPoint2{pair_ch.pbar(0) * rng.unit(),
                                    pair_ch.pbar(1) * rng.unit()});
        CHECK(testutil::rel_gap(gic::phi3(c, s.s1, s.s2),
                                gic::phi3_via_block(c, s.s1, s.s2)) < 1e-10);
    }
}

TEST_CASE("phi3: axis slices reduce bit-exactly to the two-user bounds") {
    gic::Rng rng(407);
    const std::array<int, 2> pair13 = {0, 2};
    const std::array<int, 2> pair23 = {1, 2};
    for (int t = 0; t < 500; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const double s1 = ch.pbar(0) * rng.unit();
        const double s2 = ch.pbar(1) * rng.unit();
        CHECK(gic::phi3(ch, s1, 0.0) == gic::phi2(gic::subchannel(ch, pair13), s1));
        CHECK(gic::phi3(ch, 0.0, s2) == gic::phi2(gic::subchannel(ch, pair23), s2));
    }
}

TEST_CASE("phi1/phi2 (3u): definitional permutations and symmetric-channel symmetry") {
    const NormalizedChannel ch =
        gic::make_three_user(0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 1.0, 2.0, 3.0);
    CHECK(gic::phi1(ch, 0.0, 0.0) == 1.0);
    CHECK(gic::phi2(ch, 0.0, 0.0) == 2.0);

    const std::array<int, 3> rot = {1, 2, 0};
    const std::array<int, 3> swap23 = {0, 2, 1};
    gic::Rng rng(408);
    for (int t = 0; t < 100; ++t) {
        const double x = rng.uniform(0.0, 1.0), y = rng.uniform(0.0, 1.0);
        CHECK(gic::phi1(ch, x, y) == gic::phi3(gic::subchannel(ch, rot), x, y));
        CHECK(gic::phi2(ch, x, y) == gic::phi3(gic::subchannel(ch, swap23), x, y));
    }

    const NormalizedChannel sym =
        gic::make_three_user(0.2, 0.2, 0.2, 0.2, 0.2, 0.2, 4.0, 4.0, 4.0);
    for (int t = 0; t < 100; ++t) {
        const double x = rng.uniform(0.0, 2.0), y = rng.uniform(0.0, 2.0);
        CHECK(close(gic::phi1(sym, x, y), gic::phi3(sym, x, y), 1e-12));
        CHECK(close(gic::phi2(sym, y, x), gic::phi3(sym, x, y), 1e-12));
        CHECK(close(gic::phi3(sym, x, y), gic::phi3(sym, y, x), 1e-12));
    }
}

TEST_CASE("phi3: non-increasing in each free coordinate on the feasible set") {
    gic::Rng rng(409);
    for (int t = 0; t < 30; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const std::array<int, 2> pair12 = {0, 1};
        const NormalizedChannel pair_ch = gic::subchannel(ch, pair12);
        const double s2 = 0.3 * ch.pbar(1);
        double prev = gic::phi3(ch, 0.0, s2);
        for (int k = 1; k <= 20; ++k) {
            const double s1 = ch.pbar(0) * k / 20.0;
            if (!gic::contains(pair_ch, SinrPoint2{s1, s2})) break;
            const double cur = gic::phi3(ch, s1, s2);
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("contains (3u): origin in, joint full power out, box image in") {
    const NormalizedChannel ch =
        gic::make_three_user(0.3, 0.3, 0.3, 0.3, 0.3, 0.3, 2.0, 2.0, 2.0);
    CHECK(gic::contains(ch, SinrPoint3{0, 0, 0}));
    CHECK_FALSE(gic::contains(ch, SinrPoint3{2, 2, 2}));

    gic::Rng rng(410);
    for (int t = 0; t < 3; ++t) {
        const NormalizedChannel c = testutil::random_n_user(rng, 3);
        const int res = 11;
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j)
                for (int k = 0; k < res; ++k) {
                    const SnrPoint3 u{c.pbar(0) * i / (res - 1.0),
                                      c.pbar(1) * j / (res - 1.0),
                                      c.pbar(2) * k / (res - 1.0)};
                    CHECK(gic::contains(c, gic::snr_to_sinr(c, u), 1e-9));
                }
    }
}

TEST_CASE("contains (3u): agrees with the solve-and-check oracle") {
    gic::Rng rng(411);
    long long mismatches = 0;
    for (int t = 0; t < 20; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        for (int k = 0; k < 500; ++k) {
            // sample around the box, inside and outside alike
            const SinrPoint3 s{1.5 * ch.pbar(0) * rng.unit(), 1.5 * ch.pbar(1) * rng.unit(),
                               1.5 * ch.pbar(2) * rng.unit()};
            const bool via_phi = gic::contains(ch, s);
            bool via_solve = false;
            try {
                const SnrPoint3 u = gic::sinr_to_snr(ch, s);
                via_solve = u.u1 <= ch.pbar(0) && u.u2 <= ch.pbar(1) && u.u3 <= ch.pbar(2);
            } catch (const gic::Error&) {
                via_solve = false;
            }
            mismatches += via_phi != via_solve;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("contains (3u): zero slice equals the two-user region exactly") {
    gic::Rng rng(412);
    const std::array<int, 2> pair12 = {0, 1};
    for (int t = 0; t < 3; ++t) {
        const NormalizedChannel ch = testutil::random_n_user(rng, 3);
        const NormalizedChannel pair_ch = gic::subchannel(ch, pair12);
        const int res = 101;
        long long mismatches = 0;
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j) {
                const double s1 = ch.pbar(0) * i / (res - 1.0);
                const double s2 = ch.pbar(1) * j / (res - 1.0);
                mismatches += gic::contains(ch, SinrPoint3{s1, s2, 0.0}) !=
                              gic::contains(pair_ch, SinrPoint2{s1, s2});
            }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("sample_surface: zero interference gives the box surface") {
    const NormalizedChannel quiet = gic::make_three_user(0, 0, 0, 0, 0, 0, 1.0, 2.0, 3.0);
    const gic::SurfaceSample3 surf = gic::sample_surface(quiet, 5);
    for (const auto& face : surf.faces) {
        CHECK(face.points.size() == 25);
        const double cap = quiet.pbar(face.face - 1);
        for (const auto& p : face.points) CHECK(p.s_bound == cap);
    }
    CHECK_THROWS_AS((void)gic::sample_surface(quiet, 1), gic::DomainError);
}

TEST_CASE("sample_surface: resolution 2 keeps the axis fixed points") {
    const NormalizedChannel ch =
        gic::make_three_user(0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0);
    const gic::SurfaceSample3 surf = gic::sample_surface(ch, 2);
    for (const auto& face : surf.faces) {
        REQUIRE(!face.points.empty());
        CHECK(face.points.front().s_a == 0.0);
        CHECK(face.points.front().s_b == 0.0);
        CHECK(face.points.front().s_bound == ch.pbar(face.face - 1));
    }
}

TEST_CASE("sample_surface: every emitted point is a member; symmetric faces agree") {
    const NormalizedChannel sym =
        gic::make_three_user(0.2, 0.2, 0.2, 0.2, 0.2, 0.2, 4.0, 4.0, 4.0);
    const gic::SurfaceSample3 surf = gic::sample_surface(sym, 17);
    for (const auto& face : surf.faces) {
        for (const auto& p : face.points) {
            std::array<double, 3> v{};
            v[static_cast<std::size_t>(face.face - 1)] = p.s_bound;
            const int j = face.face == 1 ? 1 : 0;
            const int k = face.face == 3 ? 1 : 2;
            v[static_cast<std::size_t>(j)] = p.s_a;
            v[static_cast<std::size_t>(k)] = p.s_b;
            CHECK(gic::contains(sym, SinrPoint3{v[0], v[1], v[2]}, 1e-9));
        }
    }
    // identical grids and bounds on all three faces of a symmetric channel
    REQUIRE(surf.faces[0].points.size() == surf.faces[1].points.size());
    REQUIRE(surf.faces[0].points.size() == surf.faces[2].points.size());
    for (std::size_t i = 0; i < surf.faces[0].points.size(); ++i) {
        CHECK(close(surf.faces[0].points[i].s_bound, surf.faces[1].points[i].s_bound, 1e-9));
        CHECK(close(surf.faces[0].points[i].s_bound, surf.faces[2].points[i].s_bound, 1e-9));
    }
}

TEST_CASE("sample_surface: grid points cut off by another face produce no sample") {
    const NormalizedChannel sym =
        gic::make_three_user(0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 1.0, 1.0, 1.0);
    const gic::SurfaceSample3 surf = gic::sample_surface(sym, 2);
    // the pairwise fixed points (cap, 0) and (0, cap) solve to a power above
    // the third user's cap once that user transmits at full power
    for (const auto& face : surf.faces) CHECK(face.points.size() == 1);
}
