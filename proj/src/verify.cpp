#include "gic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <vector>

#include "gic/errors.hpp"
#include "gic/export.hpp"
#include "gic/feasibility.hpp"
#include "gic/region2.hpp"
#include "gic/region3.hpp"
#include "gic/rng.hpp"
#include "gic/sumrate.hpp"

namespace gic {

namespace {

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

// draws stay inside a_ij in (0,2], pbar in (0,10]
NormalizedChannel random_two_user(Rng& rng) {
    const double a12 = rng.positive(2.0), a21 = rng.positive(2.0);
    const double p1 = rng.positive(10.0), p2 = rng.positive(10.0);
    return make_two_user(a12, a21, p1, p2);
}

NormalizedChannel random_n_user(Rng& rng, int n) {
    std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                rng.positive(2.0);
    std::vector<double> pbar(static_cast<std::size_t>(n));
    for (double& p : pbar) p = rng.positive(10.0);
    return NormalizedChannel(std::move(a), std::move(pbar));
}

CheckResult finish(std::string id, std::string name, double budget, const Timer& timer,
                   bool pass, long long checks, double worst, std::string note) {
    CheckResult r;
    r.id = std::move(id);
    r.name = std::move(name);
    r.pass = pass;
    r.checks = checks;
    r.worst = worst;
    r.note = std::move(note);
    r.seconds = timer.elapsed();
    r.budget_seconds = budget;
    return r;
}

CheckResult check_fixed_points(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 1);
    long long checks = 0;
    long long failures = 0;
    for (int t = 0; t < o.endpoint_channels; ++t) {
        const NormalizedChannel ch = random_two_user(rng);
        const double p1 = ch.pbar(0), p2 = ch.pbar(1);
        const SinrPoint2 sa = snr_to_sinr(ch, SnrPoint2{p1, 0.0});
        const SinrPoint2 sb = snr_to_sinr(ch, SnrPoint2{0.0, p2});
        const SnrPoint2 ua = sinr_to_snr(ch, SinrPoint2{p1, 0.0});
        const SnrPoint2 ub = sinr_to_snr(ch, SinrPoint2{0.0, p2});
        failures += (sa.s1 != p1) + (sa.s2 != 0.0) + (sb.s1 != 0.0) + (sb.s2 != p2);
        failures += (ua.u1 != p1) + (ua.u2 != 0.0) + (ub.u1 != 0.0) + (ub.u2 != p2);
        checks += 8;
    }
    std::string note = failures ? std::to_string(failures) + " non-exact fixed points" : "";
    return finish("fixed-points", "axis fixed points are bit-exact under both transforms",
                  1.0, timer, failures == 0, checks, 0.0, std::move(note));
}

CheckResult check_round_trip(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 2);
    long long checks = 0;
    long long domination_failures = 0;
    double worst = 0.0;
    for (int t = 0; t < o.roundtrip_pairs; ++t) {
        const NormalizedChannel ch = random_two_user(rng);
        const SnrPoint2 u{ch.pbar(0) * rng.unit(), ch.pbar(1) * rng.unit()};
        const SinrPoint2 s = snr_to_sinr(ch, u);
        domination_failures += !(s.s1 <= u.u1 && s.s2 <= u.u2);
        const SnrPoint2 back = sinr_to_snr(ch, s);
        const double scale = std::max({std::abs(u.u1), std::abs(u.u2), 1e-300});
        worst = std::max(worst,
                         std::max(std::abs(back.u1 - u.u1), std::abs(back.u2 - u.u2)) / scale);
        checks += 2;
    }
    for (int t = 0; t < o.roundtrip_pairs; ++t) {
        const NormalizedChannel ch = random_n_user(rng, 3);
        const SnrPoint3 u{ch.pbar(0) * rng.unit(), ch.pbar(1) * rng.unit(),
                          ch.pbar(2) * rng.unit()};
        const SinrPoint3 s = snr_to_sinr(ch, u);
        domination_failures += !(s.s1 <= u.u1 && s.s2 <= u.u2 && s.s3 <= u.u3);
        const SnrPoint3 back = sinr_to_snr(ch, s);
        const double scale =
            std::max({std::abs(u.u1), std::abs(u.u2), std::abs(u.u3), 1e-300});
        worst = std::max(worst, std::max({std::abs(back.u1 - u.u1), std::abs(back.u2 - u.u2),
                                          std::abs(back.u3 - u.u3)}) /
                                    scale);
        checks += 2;
    }
    const bool pass = worst < o.tol_roundtrip && domination_failures == 0;
    std::ostringstream note;
    if (!pass)
        note << "worst relative error " << format_sig12(worst) << ", "
             << domination_failures << " domination failures";
    return finish("round-trip", "SNR->SINR->SNR returns the input (2- and 3-user)", 5.0,
                  timer, pass, checks, worst, note.str());
}

CheckResult check_boundary_endpoints(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 3);
    long long checks = 0;
    long long failures = 0;
    for (int t = 0; t < o.endpoint_channels; ++t) {
        const NormalizedChannel ch = random_two_user(rng);
        failures += boundary_f(ch, 0.0).s2 != ch.pbar(1);
        failures += boundary_f(ch, ch.pbar(0)).s2 != 0.0;
        checks += 2;
    }
    std::string note = failures ? std::to_string(failures) + " non-exact endpoints" : "";
    return finish("boundary-endpoints", "f(0)=pbar2 and f(pbar1)=0 exactly", 0.0, timer,
                  failures == 0, checks, 0.0, std::move(note));
}

CheckResult check_hyperbola_redundancy(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 4);
    long long checks = 0;
    long long violations = 0;
    double worst = 0.0;
    for (int t = 0; t < o.redundancy_points; ++t) {
        const NormalizedChannel ch = random_two_user(rng);
        // a point satisfying both cap constraints: draw s2, cap s1 by phi1,
        // then clamp s2 down to phi2(s1) (phi1 only grows when s2 shrinks)
        double s2 = ch.pbar(1) * rng.unit();
        const double s1 = phi1(ch, s2) * rng.unit();
        s2 = std::min(s2, phi2(ch, s1));
        const double prod = ch.a(0, 1) * ch.a(1, 0) * s1 * s2;
        worst = std::max(worst, prod);
        violations += !(prod < 1.0);
        ++checks;
    }
    std::string note =
        violations ? std::to_string(violations) + " hyperbola-constraint violations" : "";
    return finish("hyperbola-redundancy",
                  "cap constraints imply the hyperbola constraint strictly", 0.0, timer,
                  violations == 0, checks, worst, std::move(note));
}

CheckResult check_membership_image(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 5);
    long long checks = 0;
    long long forward_failures = 0;
    long long backward_failures = 0;
    const int res = o.membership_grid;
    for (int t = 0; t < o.grid_channels; ++t) {
        const NormalizedChannel ch = random_two_user(rng);
        const double p1 = ch.pbar(0), p2 = ch.pbar(1);
        for (int i = 0; i < res; ++i) {
            const double x = static_cast<double>(i) / (res - 1);
            for (int j = 0; j < res; ++j) {
                const double y = static_cast<double>(j) / (res - 1);
                // forward: images of the power box are members
                const SinrPoint2 s = snr_to_sinr(ch, SnrPoint2{p1 * x, p2 * y});
                forward_failures += !contains(ch, s, o.tol_image);
                ++checks;
                // backward: members map back into the power box
                const SinrPoint2 g{p1 * x, p2 * y};
                if (contains(ch, g)) {
                    ++checks;
                    try {
                        const SnrPoint2 u = sinr_to_snr(ch, g);
                        const double slack1 = o.tol_backmap * std::max(1.0, p1);
                        const double slack2 = o.tol_backmap * std::max(1.0, p2);
                        backward_failures += !(u.u1 >= -slack1 && u.u1 <= p1 + slack1 &&
                                               u.u2 >= -slack2 && u.u2 <= p2 + slack2);
                    } catch (const SingularTransform&) {
                        ++backward_failures;
                    }
                }
            }
        }
    }
    const bool pass = forward_failures == 0 && backward_failures == 0;
    std::ostringstream note;
    if (!pass)
        note << forward_failures << " forward / " << backward_failures
             << " backward mismatches";
    return finish("membership-image",
                  "SINR region membership matches the image of the power box", 30.0, timer,
                  pass, checks, 0.0, note.str());
}

CheckResult check_corner_optimality(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 6);
    long long checks = 0;
    double worst_excess = 0.0;
    double worst_identity = 0.0;
    for (int t = 0; t < o.trials; ++t) {
        const NormalizedChannel ch = random_two_user(rng);
        const SumRateSolution sol = maximize_sum_rate(ch);
        const GridMax g = grid_oracle_max(ch, o.oracle_grid);
        worst_excess = std::max(worst_excess, g.value_bits - sol.best_value_bits);
        const double closed_form =
            std::max(sol.r_star_bits, sol.m_point.r1_bits + sol.m_point.r2_bits);
        worst_identity = std::max(worst_identity, std::abs(sol.best_value_bits - closed_form));
        checks += 2;
    }
    const bool pass = worst_excess <= o.tol_corner && worst_identity <= o.tol_sum_identity;
    std::ostringstream note;
    if (!pass)
        note << "worst grid excess " << format_sig12(worst_excess) << ", worst identity gap "
             << format_sig12(worst_identity);
    return finish("corner-optimality", "grid search never beats the best corner allocation",
                  60.0, timer, pass, checks, std::max(worst_excess, worst_identity),
                  note.str());
}

CheckResult check_sum_rate_values(const VerifyOptions& o) {
    Timer timer;
    long long checks = 0;
    double worst = 0.0;
    bool pass = true;
    std::ostringstream note;

    // weak symmetric cross gains: full power wins
    {
        const NormalizedChannel ch = make_two_user(0.1, 0.1, 4.0, 4.0);
        const SumRateSolution sol = maximize_sum_rate(ch);
        const double expected = 1.9475325801058645; // log2(1 + 4/1.4)
        worst = std::max(worst, std::abs(sol.best_value_bits - expected));
        if (std::abs(sol.best_value_bits - expected) > o.tol_value ||
            sol.region_label != RegionLabel::A || sol.best_u.u1 != 4.0 ||
            sol.best_u.u2 != 4.0) {
            pass = false;
            note << "full-power case off; ";
        }
        checks += 3;
    }
    // unit symmetric cross gains: a single-user corner wins
    {
        const NormalizedChannel ch = make_two_user(1.0, 1.0, 4.0, 4.0);
        const SumRateSolution sol = maximize_sum_rate(ch);
        const double expected = 1.160964047443681; // 0.5*log2(5)
        worst = std::max(worst, std::abs(sol.best_value_bits - expected));
        if (std::abs(sol.best_value_bits - expected) > o.tol_value ||
            sol.region_label != RegionLabel::B || sol.best_u.u1 != 4.0 ||
            sol.best_u.u2 != 0.0) {
            pass = false;
            note << "single-user case off; ";
        }
        checks += 3;
    }
    return finish("sum-rate-values", "reference two-user sum-rate solutions", 0.0, timer,
                  pass, checks, worst, note.str());
}

CheckResult check_block_equivalence(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 8);
    long long checks = 0;
    double worst = 0.0;
    for (int t = 0; t < o.formula_draws; ++t) {
        const NormalizedChannel ch = random_n_user(rng, 3);
        // a feasible free pair: image of a random point of the (1,2) power box
        const std::array<int, 2> pair = {0, 1};
        const NormalizedChannel pair_ch = subchannel(ch, pair);
        const SinrPoint2 s =
            snr_to_sinr(pair_ch, SnrPoint2{pair_ch.pbar(0) * rng.unit(),
                                           pair_ch.pbar(1) * rng.unit()});
        const double closed = phi3(ch, s.s1, s.s2);
        const double block = phi3_via_block(ch, s.s1, s.s2);
        worst = std::max(worst, std::abs(closed - block) / std::max(std::abs(closed), 1e-300));
        ++checks;
    }
    const bool pass = worst < o.tol_block;
    std::string note = pass ? "" : "worst relative gap " + format_sig12(worst);
    return finish("phi3-block-equivalence",
                  "closed-form phi3 matches the block-elimination route", 0.0, timer, pass,
                  checks, worst, std::move(note));
}

CheckResult check_degeneration(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 9);
    long long checks = 0;
    double worst = 0.0;
    long long mismatches = 0;
    for (int t = 0; t < o.formula_draws; ++t) {
        const NormalizedChannel ch = random_n_user(rng, 3);
        const double s1 = ch.pbar(0) * rng.unit();
        const double s2 = ch.pbar(1) * rng.unit();
        const std::array<int, 2> pair13 = {0, 2};
        const std::array<int, 2> pair23 = {1, 2};
        const double via3_a = phi3(ch, s1, 0.0);
        const double two_a = phi2(subchannel(ch, pair13), s1);
        const double via3_b = phi3(ch, 0.0, s2);
        const double two_b = phi2(subchannel(ch, pair23), s2);
        worst = std::max(worst, std::abs(via3_a - two_a) / std::max(std::abs(two_a), 1e-300));
        worst = std::max(worst, std::abs(via3_b - two_b) / std::max(std::abs(two_b), 1e-300));
        checks += 2;
    }
    // zero-slice of the three-user region equals the two-user region of pair (1,2)
    for (int t = 0; t < o.slice_channels; ++t) {
        const NormalizedChannel ch = random_n_user(rng, 3);
        const std::array<int, 2> pair12 = {0, 1};
        const NormalizedChannel pair_ch = subchannel(ch, pair12);
        for (int i = 0; i < o.slice_grid; ++i) {
            const double s1 = ch.pbar(0) * (static_cast<double>(i) / (o.slice_grid - 1));
            for (int j = 0; j < o.slice_grid; ++j) {
                const double s2 = ch.pbar(1) * (static_cast<double>(j) / (o.slice_grid - 1));
                mismatches += contains(ch, SinrPoint3{s1, s2, 0.0}) !=
                              contains(pair_ch, SinrPoint2{s1, s2});
                ++checks;
            }
        }
    }
    const bool pass = worst < o.tol_degeneration && mismatches == 0;
    std::ostringstream note;
    if (!pass)
        note << "worst relative gap " << format_sig12(worst) << ", " << mismatches
             << " slice mismatches";
    return finish("pair-degeneration",
                  "phi3 on an axis reduces to the two-user bounds; zero slice matches", 0.0,
                  timer, pass, checks, worst, note.str());
}

CheckResult check_boundary_curve(const VerifyOptions& o) {
    Timer timer;
    long long checks = 0;
    bool pass = true;
    std::ostringstream note;

    const NormalizedChannel ch = make_two_user(0.4, 0.4, 1.0, 1.0);
    const auto curve = capacity_boundary(ch, o.curve_samples);
    const auto& first = curve.front();
    const auto& last = curve.back();
    if (!(first.c1_bits == 0.0 && first.c2_bits == 0.5 && last.c1_bits == 0.5 &&
          last.c2_bits == 0.0)) {
        pass = false;
        note << "endpoints not exact; ";
    }
    checks += 4;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (curve[i].c2_bits > curve[i - 1].c2_bits) {
            pass = false;
            note << "c2 increases at sample " << i << "; ";
            break;
        }
        ++checks;
    }
    std::ostringstream once, twice;
    write_curve(once, curve, ch, SpacingMode::UniformT, TableFormat::Csv);
    write_curve(twice, curve, ch, SpacingMode::UniformT, TableFormat::Csv);
    if (once.str() != twice.str()) {
        pass = false;
        note << "serialization not byte-identical; ";
    }
    ++checks;
    return finish("boundary-curve",
                  "reference boundary curve: exact endpoints, monotone, deterministic", 0.0,
                  timer, pass, checks, 0.0, note.str());
}

CheckResult check_nuser_oracle(const VerifyOptions& o) {
    Timer timer;
    Rng rng(o.seed * 1000 + 11);
    long long checks = 0;
    long long failures = 0;
    std::vector<int> counts = o.nuser_counts;
    if (o.nuser_channel) counts = {o.nuser_channel->n()};
    for (int n : counts) {
        for (int t = 0; t < o.nuser_points; ++t) {
            const NormalizedChannel ch =
                o.nuser_channel ? *o.nuser_channel : random_n_user(rng, n);
            std::vector<double> u(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = ch.pbar(i) * rng.unit();
            const std::vector<double> s = snr_to_sinr_n(ch, u);
            bool dominated = true;
            for (int i = 0; i < n; ++i)
                dominated = dominated &&
                            s[static_cast<std::size_t>(i)] <= u[static_cast<std::size_t>(i)];
            failures += !dominated;
            failures += !contains_n(ch, s, o.tol_image);
            checks += 2;
        }
    }
    std::string note = failures ? std::to_string(failures) + " oracle failures" : "";
    return finish("nuser-oracle",
                  "n-user membership oracle accepts images of the power box", 10.0, timer,
                  failures == 0, checks, 0.0, std::move(note));
}

} // namespace

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    results.push_back(check_fixed_points(opts));
    results.push_back(check_round_trip(opts));
    results.push_back(check_boundary_endpoints(opts));
    results.push_back(check_hyperbola_redundancy(opts));
    results.push_back(check_membership_image(opts));
    results.push_back(check_corner_optimality(opts));
    results.push_back(check_sum_rate_values(opts));
    results.push_back(check_block_equivalence(opts));
    results.push_back(check_degeneration(opts));
    results.push_back(check_boundary_curve(opts));
    results.push_back(check_nuser_oracle(opts));
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

} // namespace gic
