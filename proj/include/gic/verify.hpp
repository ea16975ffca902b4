#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gic/channel.hpp"

namespace gic {

/// Knobs for the property-check suite. Defaults pin the counts and
/// tolerances the suite is graded at; only `verify` runs may override them.
struct VerifyOptions {
    std::uint64_t seed = 7;

    int trials = 200;            // corner-optimality channel draws
    int endpoint_channels = 100; // fixed-point / boundary-endpoint channel draws
    int roundtrip_pairs = 10000; // per user count (2 and 3)
    int redundancy_points = 10000;
    int grid_channels = 20;
    int membership_grid = 201;
    int oracle_grid = 101;
    int curve_samples = 101;
    int formula_draws = 1000; // block-equivalence and degeneration draws
    int slice_channels = 5;
    int slice_grid = 101;
    int nuser_points = 1000;
    std::vector<int> nuser_counts = {4, 5};

    /// When set, the n-user oracle check runs on this channel instead of
    /// random draws (its user count replaces `nuser_counts`).
    std::optional<NormalizedChannel> nuser_channel;

    double tol_roundtrip = 1e-10;
    double tol_backmap = 1e-9;
    double tol_image = 1e-9;
    double tol_corner = 1e-9;
    double tol_sum_identity = 1e-12;
    double tol_value = 1e-5;
    double tol_block = 1e-10;
    double tol_degeneration = 1e-14;
};

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    long long checks = 0; // individual assertions evaluated
    double worst = 0.0;   // worst observed error, 0 when not applicable
    std::string note;     // failure detail, empty on pass
    double seconds = 0.0;
    double budget_seconds = 0.0; // 0 = no runtime budget
};

/// Run the full property suite in a fixed order. Deterministic for a given
/// options value (including the seed).
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace gic
