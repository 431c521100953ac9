#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fct/bigint.hpp"

namespace fct {

// Set partition of {1..n} in canonical form: elements ascending within each
// block, blocks ordered by least element.
class SetPartition {
 public:
  SetPartition() = default;  // the void partition of the empty set
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  // Arcs of the standard diagram: one arc per pair of consecutive elements of
  // a block, so a partition with m arcs has n - m blocks.
  std::vector<std::pair<int, int>> arcs() const;

  // No two standard arcs (i,j), (k,l) with i < k < j < l.
  bool is_noncrossing() const;

  // Every block of *this lies inside one block of `coarser`.
  bool refines(const SetPartition& coarser) const;

  bool is_matching() const;  // all blocks of size 2

  std::string str() const;  // "{1,4}{2,3}"; "{}" for the void partition

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
};

// A refinement pair: `fine` (drawn as arcs) refines `coarse` (whose extra
// grouping is drawn as ties). Both components are noncrossing.
struct DoublePartition {
  SetPartition fine;
  SetPartition coarse;

  std::string str() const;  // "{1}{2} / {1,2}"

  friend bool operator==(const DoublePartition&, const DoublePartition&) = default;
  friend auto operator<=>(const DoublePartition&, const DoublePartition&) = default;
};

// Exhaustive enumerations. Output is sorted in the canonical partition order,
// each object exactly once. Counts are Catalan for the first two families and
// the order-3 / order-4 Fuss-Catalan numbers for the doubles.
std::vector<SetPartition> enumerate_noncrossing_partitions(int n);
std::vector<SetPartition> enumerate_noncrossing_matchings(int arcs);  // on {1..2*arcs}
std::vector<DoublePartition> enumerate_double_partitions(int n);
std::vector<DoublePartition> enumerate_matching_double_partitions(int arcs);

// Number of boxes of the arc-and-tie diagram. The connected components of
// such a diagram are the blocks of the coarse partition; a component drawn
// strictly inside another component's span borders only bounded regions of
// the spanning component, so the clusters that border the unbounded region
// are exactly the blocks whose span [min,max] is not strictly contained in
// another block's span.
int box_count(const SetPartition& coarse);
int box_count(const DoublePartition& d);

enum class Family { kMatchings, kPartitions, kDoublePartitions, kMatchingDoubles };

std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view text);

// Histogram of box counts over one enumerated family. For matchings the
// count at b boxes equals T^2(n, n-b), for double partitions T^3(n, n-b),
// for matching doubles T^4(n, n-b).
std::map<int, BigInt> box_distribution(int n, Family family);

struct FRecurrenceReport {
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
  explicit operator bool() const { return ok; }
};

// Rebuilds the diagram counts F(n,k) = #{double partitions of [n] with k
// boxes} from the one-step recurrence F(n,k) = sum_{j=k-1}^{n-1} (j-k+2)
// F(n-1,j) and compares against brute-force box histograms for all n up to
// n_max. Initial conditions: F(0,0) = 1 and F(n,0) = 0 for n >= 1 (no
// diagram with points has zero boxes).
FRecurrenceReport verify_f_recurrence(int n_max);

}  // namespace fct
