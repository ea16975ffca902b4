#pragma once

#include <span>
#include <vector>

namespace gic {

/// Physical description of an n-user interference channel: power gains
/// gains[i][j] = |h_ij|^2 of transmitter j at receiver i, the receiver noise
/// variance, and the per-user transmit power caps.
struct RawChannel {
    int n = 0;
    std::vector<std::vector<double>> gains;
    double noise_variance = 1.0;
    std::vector<double> power_caps;
};

/// Dimensionless channel used by every formula downstream: cross-gain ratios
/// a[i][j] = gains[i][j]/gains[j][j] (zero diagonal) and normalized SNR caps
/// pbar[i] = gains[i][i]*P_i/noise_variance. Immutable after construction.
class NormalizedChannel {
public:
    /// Validates and stores the matrix / cap vector. The diagonal of `a` must
    /// be exactly zero, all entries finite and non-negative, n >= 2.
    NormalizedChannel(std::vector<std::vector<double>> a, std::vector<double> pbar);

    int n() const { return n_; }
    double a(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double pbar(int i) const { return pbar_[static_cast<std::size_t>(i)]; }
    std::span<const double> pbar() const { return pbar_; }

private:
    int n_;
    std::vector<double> a_; // row-major n x n, zero diagonal
    std::vector<double> pbar_;
};

/// Reduce a raw channel to its normalized form. Rejects non-positive direct
/// gains and non-positive noise variance, naming the offending index.
NormalizedChannel normalize(const RawChannel& raw);

/// Channel restricted to `users` (0-based old indices), in the given order.
/// A full-length index list permutes the users. Indices must be distinct.
NormalizedChannel subchannel(const NormalizedChannel& ch, std::span<const int> users);

NormalizedChannel make_two_user(double a12, double a21, double pbar1, double pbar2);
NormalizedChannel make_three_user(double a12, double a13,
                                  double a21, double a23,
                                  double a31, double a32,
                                  double pbar1, double pbar2, double pbar3);

} // namespace gic
