#pragma once

#include "fct/bigint.hpp"

namespace fct {

// Binomial coefficient defined for every integer pair (n, k).
//
// For n >= 0 this is the familiar table (zero outside 0 <= k <= n). For
// negative arguments the coefficient is extended so that Pascal's rule
// C(n,k) = C(n-1,k-1) + C(n-1,k) keeps holding away from (0,0):
//
//   n < 0, k >= 0 :  (-1)^k * C(k-n-1, k)
//   k <= n < 0    :  (-1)^(n-k) * C(-k-1, n-k)
//   n < k < 0     :  0
//
// In particular C(-1,-1) = 1 while C(m,-1) = 0 for every m != -1, which is
// exactly what makes the p = 1 triangle recurrence come out right without a
// special case.
BigInt binomial(long long n, long long k);

}  // namespace fct
