#include "gic/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gic/errors.hpp"
#include "gic/region2.hpp"
#include "gic/region3.hpp"

namespace gic {

namespace {

void require_size(const NormalizedChannel& ch, std::size_t size) {
    if (static_cast<int>(size) != ch.n())
        throw DomainError("point has " + std::to_string(size) + " entries, channel has " +
                          std::to_string(ch.n()) + " users");
}

} // namespace

std::vector<double> snr_to_sinr_n(const NormalizedChannel& ch, std::span<const double> u) {
    require_size(ch, u.size());
    const int n = ch.n();
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double den = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != i) den += ch.a(i, j) * u[static_cast<std::size_t>(j)];
        s[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] / den;
    }
    return s;
}

PowerSolve solve_powers(const NormalizedChannel& ch, std::span<const double> s) {
    require_size(ch, s.size());
    const int n = ch.n();
    // rows of the system: u_i - s_i * sum_j a_ij u_j = s_i
    std::vector<double> A(static_cast<std::size_t>(n) * n);
    std::vector<double> b(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A[static_cast<std::size_t>(i) * n + j] =
                (i == j) ? 1.0 : -(s[static_cast<std::size_t>(i)] * ch.a(i, j));

    auto at = [&](int i, int j) -> double& { return A[static_cast<std::size_t>(i) * n + j]; };

    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
        if (at(pivot, col) == 0.0) {
            det = 0.0;
            break;
        }
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
            std::swap(b[static_cast<std::size_t>(pivot)], b[static_cast<std::size_t>(col)]);
            det = -det;
        }
        det *= at(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double factor = at(r, col) / at(col, col);
            if (factor == 0.0) continue;
            at(r, col) = 0.0;
            for (int j = col + 1; j < n; ++j) at(r, j) -= factor * at(col, j);
            b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(col)];
        }
    }

    PowerSolve out;
    out.det = det;
    if (det <= kSingularEps) {
        out.status = SolveStatus::Singular;
        return out;
    }
    out.u.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) acc -= at(i, j) * out.u[static_cast<std::size_t>(j)];
        out.u[static_cast<std::size_t>(i)] = acc / at(i, i);
    }
    out.status = std::any_of(out.u.begin(), out.u.end(), [](double x) { return x < 0.0; })
                     ? SolveStatus::NegativePower
                     : SolveStatus::Ok;
    return out;
}

std::vector<double> sinr_to_snr_n(const NormalizedChannel& ch, std::span<const double> s) {
    require_size(ch, s.size());
    if (ch.n() == 2) {
        const SnrPoint2 u = sinr_to_snr(ch, SinrPoint2{s[0], s[1]});
        return {u.u1, u.u2};
    }
    if (ch.n() == 3) {
        const SnrPoint3 u = sinr_to_snr(ch, SinrPoint3{s[0], s[1], s[2]});
        return {u.u1, u.u2, u.u3};
    }
    PowerSolve r = solve_powers(ch, s);
    if (r.status == SolveStatus::Singular)
        throw SingularTransform("SINR point at or beyond the invertibility asymptote");
    if (r.status == SolveStatus::NegativePower)
        throw InfeasibleSinr("SINR point outside the achievable cone");
    return std::move(r.u);
}

bool contains_n(const NormalizedChannel& ch, std::span<const double> s, double rel_tol) {
    for (double x : s)
        if (!(x >= 0.0)) return false;
    const PowerSolve r = solve_powers(ch, s);
    if (r.status == SolveStatus::Singular) return false;
    for (int i = 0; i < ch.n(); ++i) {
        const double slack = rel_tol * std::max(1.0, ch.pbar(i));
        const double u = r.u[static_cast<std::size_t>(i)];
        if (u < -slack || u > ch.pbar(i) + slack) return false;
    }
    return true;
}

} // namespace gic
