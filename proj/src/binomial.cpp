#include "fct/binomial.hpp"

namespace fct {
namespace {

// C(n,k) for n >= 0 and 0 <= k <= n, multiplicative form. Each intermediate
// division is exact: after step i the accumulator is C(n-k+i, i).
BigInt binomial_nonneg(long long n, long long k) {
  if (k > n - k) {
    k = n - k;
  }
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = exact_div(result * (n - k + i), BigInt(i));
  }
  return result;
}

}  // namespace

BigInt binomial(long long n, long long k) {
  if (n >= 0) {
    if (k < 0 || k > n) {
      return 0;
    }
    return binomial_nonneg(n, k);
  }
  if (k >= 0) {
    BigInt value = binomial_nonneg(k - n - 1, k);
    return (k % 2 == 0) ? value : -value;
  }
  if (k <= n) {
    BigInt value = binomial_nonneg(-k - 1, n - k);
    return ((n - k) % 2 == 0) ? value : -value;
  }
  return 0;
}

}  // namespace fct
