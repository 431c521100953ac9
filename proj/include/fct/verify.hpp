#pragma once

#include <optional>
#include <string>

#include "fct/sequences.hpp"

namespace fct::verify {

// Each check returns std::nullopt on success and the first counterexample,
// formatted for humans, on failure.
using Failure = std::optional<std::string>;

// Convolution, alternating recurrence, and closed form agree cell-for-cell.
Failure method_equivalence(int p_max, int n_max);

// Row sums equal the Fuss-Catalan numbers, for every method.
Failure row_sums(int p_max, int n_max);

// At p = 2 the cells satisfy T(n,k) = T(n,k-1) + T(n-1,k) with the classical
// boundary values.
Failure catalan_triangle_recurrence(int n_max);

// T(n,0) = 1, T(n,n) = 0 for n > 0, and every cell is non-negative even when
// produced by the mixed-sign recurrence.
Failure boundary_and_nonnegativity(int p_max, int n_max);

Failure identity_e4(int m_max, int h_max);

// The calibration sweep admits exactly one constraint convention and it is
// the frozen one.
Failure lattice_calibration();

// Path counts equal the closed form for p in {2..5}, 1 <= n <= n_max, all k.
Failure lattice_oracle(int n_max);

// Enumerated family sizes match the Fuss-Catalan predictions.
Failure enumeration_cardinalities(int partitions_max, int matchings_max,
                                  int doubles_max, int matching_doubles_max);

// Box-count histograms match the order-2/3/4 triangles read as T(n, n-b).
Failure box_correspondence(int matchings_max, int doubles_max,
                           int matching_doubles_max);

Failure f_recurrence(int n_max);

Failure signed_sum_goldens(const ReferenceData& ref);
Failure p5_table_golden(const ReferenceData& ref);

// Full sweep of fuss_catalan and the closed form; fails iff any internal
// division aborts as inexact.
Failure exactness_sweep(int p_max, int n_max);

}  // namespace fct::verify
