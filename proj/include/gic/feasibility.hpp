#pragma once

#include <span>
#include <vector>

#include "gic/channel.hpp"

namespace gic {

/// S_i = u_i / (1 + sum_{j != i} a_ij u_j) for any user count.
std::vector<double> snr_to_sinr_n(const NormalizedChannel& ch, std::span<const double> u);

enum class SolveStatus { Ok, Singular, NegativePower };

struct PowerSolve {
    SolveStatus status = SolveStatus::Ok;
    std::vector<double> u; // filled unless Singular
    double det = 0.0;
};

/// Solve the n-user linear system for the powers realizing the SINR target,
/// by partial-pivot elimination. Does not throw; see `status`.
PowerSolve solve_powers(const NormalizedChannel& ch, std::span<const double> s);

/// Throwing variant. Dispatches to the closed-form eliminations at n = 2, 3
/// and to `solve_powers` above for larger n. Throws SingularTransform or
/// InfeasibleSinr as in the small-n transforms.
std::vector<double> sinr_to_snr_n(const NormalizedChannel& ch, std::span<const double> s);

/// Membership oracle for any user count: solve for the powers and check the
/// box constraints 0 <= u_i <= pbar_i (relaxed by `rel_tol`). Singular or
/// unsolvable targets map to false.
bool contains_n(const NormalizedChannel& ch, std::span<const double> s, double rel_tol = 0.0);

} // namespace gic
