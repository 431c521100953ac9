#include "fct/lattice_paths.hpp"

#include <stdexcept>
#include <vector>

#include "fct/triangle.hpp"

namespace fct {
namespace {

bool point_allowed(long long x, long long y, int p, PathConstraint constraint) {
  const long long rhs = static_cast<long long>(p - 1) * y;
  switch (constraint) {
    case PathConstraint::kXLess:
      return x < rhs;
    case PathConstraint::kXAtMost:
      return x <= rhs;
    case PathConstraint::kXGreater:
      return x > rhs;
    case PathConstraint::kXAtLeast:
      return x >= rhs;
  }
  throw std::logic_error("unknown path constraint");
}

}  // namespace

std::string to_string(PathConstraint constraint) {
  switch (constraint) {
    case PathConstraint::kXLess:
      return "x < (p-1)y";
    case PathConstraint::kXAtMost:
      return "x <= (p-1)y";
    case PathConstraint::kXGreater:
      return "x > (p-1)y";
    case PathConstraint::kXAtLeast:
      return "x >= (p-1)y";
  }
  throw std::logic_error("unknown path constraint");
}

BigInt count_paths_under(const PathCountQuery& query, PathConstraint constraint) {
  if (query.p < 2) {
    throw std::invalid_argument(
        "path counting requires p >= 2; the p = 1 triangle is validated "
        "against the recurrences directly");
  }
  if (query.n < 1 || query.k < 0 || query.k > query.n) {
    throw std::invalid_argument("path query requires 1 <= n and 0 <= k <= n");
  }

  const long long target_x = static_cast<long long>(query.p - 1) * query.n - 1;
  const int target_y = query.k;
  if (!point_allowed(0, 0, query.p, constraint)) {
    return 0;
  }

  // One row of the DP table per y; row[x] counts paths from (0,0) to (x,y).
  std::vector<BigInt> row(static_cast<size_t>(target_x) + 1, BigInt(0));
  row[0] = 1;
  for (long long x = 1; x <= target_x; ++x) {
    row[static_cast<size_t>(x)] =
        point_allowed(x, 0, query.p, constraint) ? row[static_cast<size_t>(x - 1)]
                                                 : BigInt(0);
  }
  for (int y = 1; y <= target_y; ++y) {
    std::vector<BigInt> next(static_cast<size_t>(target_x) + 1, BigInt(0));
    for (long long x = 0; x <= target_x; ++x) {
      if (!point_allowed(x, y, query.p, constraint)) {
        continue;
      }
      BigInt acc = row[static_cast<size_t>(x)];
      if (x > 0) {
        acc += next[static_cast<size_t>(x - 1)];
      }
      next[static_cast<size_t>(x)] = std::move(acc);
    }
    row = std::move(next);
  }
  return row[static_cast<size_t>(target_x)];
}

BigInt count_constrained_paths(const PathCountQuery& query) {
  return count_paths_under(query, kCalibratedConstraint);
}

std::optional<PathConstraint> calibrate_path_constraint() {
  constexpr PathConstraint kCandidates[] = {
      PathConstraint::kXLess, PathConstraint::kXAtMost,
      PathConstraint::kXGreater, PathConstraint::kXAtLeast};
  std::optional<PathConstraint> unique_match;
  for (PathConstraint candidate : kCandidates) {
    bool matches = true;
    for (int p = 2; p <= 5 && matches; ++p) {
      for (int n = 1; n <= 4 && matches; ++n) {
        for (int k = 0; k <= n && matches; ++k) {
          if (count_paths_under({p, n, k}, candidate) !=
              triangle_closed_form_cell(p, n, k)) {
            matches = false;
          }
        }
      }
    }
    if (matches) {
      if (unique_match) {
        return std::nullopt;  // not unique
      }
      unique_match = candidate;
    }
  }
  return unique_match;
}

}  // namespace fct
