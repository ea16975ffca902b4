#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gic/region2.hpp"
#include "gic/region3.hpp"
#include "gic/sumrate.hpp"

namespace gic {

enum class TableFormat { Csv, Json };

/// Render with 12 significant digits ("%.12g"); -0 is canonicalized to 0.
std::string format_sig12(double x);

/// Nearest double to the 12-significant-digit rendering of x. JSON output
/// stores these so CSV and JSON of the same table parse to identical values.
double round_sig12(double x);

std::string to_string(ActiveConstraint c);
std::string to_string(SpacingMode m);
std::string to_string(RegionLabel l);

/// Boundary-curve table. CSV columns: t,s1,s2,c1_bits,c2_bits,active_constraint
/// with `#`-prefixed metadata lines; JSON wraps the same rows plus metadata.
/// Output is deterministic: identical input gives identical bytes.
void write_curve(std::ostream& os, const std::vector<BoundaryPoint2>& curve,
                 const NormalizedChannel& ch, SpacingMode spacing, TableFormat fmt);

/// Surface table, rows grouped by face. CSV columns: face,s_a,s_b,s_bound.
/// Faces with no samples stay present in the metadata with zero rows.
void write_surface(std::ostream& os, const SurfaceSample3& surface,
                   const NormalizedChannel& ch, TableFormat fmt);

/// Sum-rate solution: metadata plus the three corner candidates.
/// CSV columns: corner,u1,u2,sum_rate_bits,is_best.
void write_sumrate(std::ostream& os, const SumRateSolution& sol,
                   const NormalizedChannel& ch, TableFormat fmt);

} // namespace gic
