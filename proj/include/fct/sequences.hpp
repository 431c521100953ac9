#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fct/bigint.hpp"

namespace fct {

// A named exact integer sequence with an explicit starting index.
struct SequenceTable {
  std::string name;
  int start_index = 0;
  std::vector<BigInt> values;
};

// The published order-5 triangle: cells exactly as printed (row 10 omits its
// structural diagonal zero) plus the sum column.
struct P5GoldenTable {
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> sums;
};

// Golden data checked in under data/. These are reference values, never
// regenerated; generation is what gets checked against them.
struct ReferenceData {
  std::vector<SequenceTable> signed_sums;  // index i holds the p = i+1 table
  P5GoldenTable p5_triangle;
};

SequenceTable load_sequence_file_entry(const std::filesystem::path& file, int p);
ReferenceData load_reference_data(const std::filesystem::path& data_dir);

struct GoldenCheck {
  bool ok = true;
  std::string detail;  // "(p,n,k) expected .. actual .." on first mismatch
  explicit operator bool() const { return ok; }
};

// Regenerates the signed row sums for the given order (from both the
// convolution and the alternating recurrence) and compares them against the
// stored sequence.
GoldenCheck check_signed_sums(const ReferenceData& ref, int p);

// Regenerates the order-5 triangle and compares every stored cell and row sum.
GoldenCheck check_p5_table(const ReferenceData& ref);

}  // namespace fct
