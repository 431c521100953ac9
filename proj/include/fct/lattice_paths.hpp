#pragma once

#include <optional>
#include <string>

#include "fct/bigint.hpp"

namespace fct {

// Candidate readings of the "stay below the line x = (p-1)y" rule. The
// comparison is applied at every lattice point a path visits, endpoints
// included.
enum class PathConstraint {
  kXLess,     // x <  (p-1)*y
  kXAtMost,   // x <= (p-1)*y
  kXGreater,  // x >  (p-1)*y
  kXAtLeast,  // x >= (p-1)*y, i.e. points on or below the line y = x/(p-1)
};

std::string to_string(PathConstraint constraint);

// The one convention that reproduces the closed form on the calibration grid
// p in {2,3,4,5}, n <= 4 (see calibrate_path_constraint). Frozen here; the
// test suite re-runs the calibration and checks it still is the unique match.
inline constexpr PathConstraint kCalibratedConstraint = PathConstraint::kXAtLeast;

struct PathCountQuery {
  int p = 2;  // >= 2; the p = 1 target degenerates and is rejected
  int n = 1;  // >= 1
  int k = 0;  // 0 <= k <= n
};

// Counts monotone lattice paths (unit east/north steps) from (0,0) to
// ((p-1)n - 1, k) whose every visited point satisfies the given constraint.
// Dynamic programming over lattice points with exact integers; shares no code
// with the triangle recurrences.
BigInt count_paths_under(const PathCountQuery& query, PathConstraint constraint);

// The production counter: count_paths_under with kCalibratedConstraint.
BigInt count_constrained_paths(const PathCountQuery& query);

// Runs all four candidate conventions against the closed form over the
// calibration grid and returns the convention iff exactly one matches.
std::optional<PathConstraint> calibrate_path_constraint();

}  // namespace fct
