#include "gic/channel.hpp"

#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include "gic/errors.hpp"

namespace gic {

namespace {

std::string user_tag(int i) { return "user " + std::to_string(i + 1); }

void check_finite(double x, const std::string& what) {
    if (!std::isfinite(x)) throw ValidationError(what + " is not finite");
}

} // namespace

NormalizedChannel::NormalizedChannel(std::vector<std::vector<double>> a,
                                     std::vector<double> pbar)
    : n_(static_cast<int>(pbar.size())) {
    if (n_ < 2) throw ValidationError("channel needs at least 2 users");
    if (static_cast<int>(a.size()) != n_)
        throw ValidationError("cross-gain matrix must have n rows");
    a_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(a[i].size()) != n_)
            throw ValidationError("cross-gain matrix row " + std::to_string(i + 1) +
                                  " must have n entries");
        for (int j = 0; j < n_; ++j) {
            const double v = a[i][j];
            check_finite(v, "a[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
            if (i == j && v != 0.0)
                throw ValidationError("cross-gain matrix diagonal must be zero (" +
                                      user_tag(i) + ")");
            if (v < 0.0)
                throw ValidationError("cross-gain a[" + std::to_string(i + 1) + "][" +
                                      std::to_string(j + 1) + "] must be non-negative");
            a_[static_cast<std::size_t>(i) * n_ + j] = v;
        }
    }
    for (int i = 0; i < n_; ++i) {
        check_finite(pbar[i], "pbar of " + user_tag(i));
        if (pbar[i] < 0.0)
            throw ValidationError("pbar of " + user_tag(i) + " must be non-negative");
    }
    pbar_ = std::move(pbar);
}

NormalizedChannel normalize(const RawChannel& raw) {
    const int n = raw.n;
    if (n < 2) throw ValidationError("channel needs at least 2 users");
    if (static_cast<int>(raw.gains.size()) != n)
        throw ValidationError("gain matrix must have n rows");
    if (static_cast<int>(raw.power_caps.size()) != n)
        throw ValidationError("power_caps must have n entries");
    check_finite(raw.noise_variance, "noise_variance");
    if (raw.noise_variance <= 0.0)
        throw ValidationError("noise_variance must be positive");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(raw.gains[i].size()) != n)
            throw ValidationError("gain matrix row " + std::to_string(i + 1) +
                                  " must have n entries");
        for (int j = 0; j < n; ++j) {
            check_finite(raw.gains[i][j], "g[" + std::to_string(i + 1) + "][" +
                                              std::to_string(j + 1) + "]");
            if (raw.gains[i][j] < 0.0)
                throw ValidationError("gain g[" + std::to_string(i + 1) + "][" +
                                      std::to_string(j + 1) + "] must be non-negative");
        }
        if (raw.gains[i][i] <= 0.0)
            throw ValidationError("direct gain g[" + std::to_string(i + 1) + "][" +
                                  std::to_string(i + 1) + "] must be positive (" +
                                  user_tag(i) + ")");
        check_finite(raw.power_caps[i], "power cap of " + user_tag(i));
        if (raw.power_caps[i] < 0.0)
            throw ValidationError("power cap of " + user_tag(i) + " must be non-negative");
    }

    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    std::vector<double> pbar(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j) a[i][j] = raw.gains[i][j] / raw.gains[j][j];
        pbar[i] = raw.gains[i][i] * raw.power_caps[i] / raw.noise_variance;
    }
    return NormalizedChannel(std::move(a), std::move(pbar));
}

NormalizedChannel subchannel(const NormalizedChannel& ch, std::span<const int> users) {
    const int k = static_cast<int>(users.size());
    if (k < 2) throw DomainError("subchannel needs at least 2 users");
    std::unordered_set<int> seen;
    for (int u : users) {
        if (u < 0 || u >= ch.n())
            throw DomainError("subchannel index " + std::to_string(u) + " out of range");
        if (!seen.insert(u).second)
            throw DomainError("subchannel indices must be distinct");
    }
    std::vector<std::vector<double>> a(k, std::vector<double>(k, 0.0));
    std::vector<double> pbar(k);
    for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q)
            if (p != q) a[p][q] = ch.a(users[p], users[q]);
        pbar[p] = ch.pbar(users[p]);
    }
    return NormalizedChannel(std::move(a), std::move(pbar));
}

NormalizedChannel make_two_user(double a12, double a21, double pbar1, double pbar2) {
    return NormalizedChannel({{0.0, a12}, {a21, 0.0}}, {pbar1, pbar2});
}

NormalizedChannel make_three_user(double a12, double a13,
                                  double a21, double a23,
                                  double a31, double a32,
                                  double pbar1, double pbar2, double pbar3) {
    return NormalizedChannel({{0.0, a12, a13}, {a21, 0.0, a23}, {a31, a32, 0.0}},
                             {pbar1, pbar2, pbar3});
}

} // namespace gic
