#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fct/bigint.hpp"

namespace fct {

// Which construction produced a triangle.
enum class Method { kConvolution, kAlternating, kClosedForm };

std::string to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

struct TriangleParams {
  int p = 2;      // order, >= 1
  int n_max = 0;  // largest row index, >= 0
};

// Lower-triangular table T(n,k) for 0 <= k <= n <= n_max, stored dense and
// row-major. Immutable after construction; safe to share across threads.
class Triangle {
 public:
  Triangle(TriangleParams params, Method method,
           std::vector<std::vector<BigInt>> rows);

  int p() const { return params_.p; }
  int n_max() const { return params_.n_max; }
  const TriangleParams& params() const { return params_; }
  Method method() const { return method_; }

  const std::vector<BigInt>& row(int n) const;
  const BigInt& cell(int n, int k) const;

  BigInt row_sum(int n) const;

  // Alternating sum with sign (-1)^(n+k+1) applied to cell (n,k).
  BigInt signed_row_sum(int n) const;

 private:
  TriangleParams params_;
  Method method_;
  std::vector<std::vector<BigInt>> rows_;
};

// True when two triangles have the same order and identical cells; the
// construction tag is ignored.
bool same_cells(const Triangle& a, const Triangle& b);

// The Fuss-Catalan number binomial(p*n+1, n) / (p*n+1), division checked
// exact. At p = 2 these are the Catalan numbers.
BigInt fuss_catalan(int p, int n);

// Row-by-row construction from the previous row with weights
// binomial(k-j+p-2, p-2).
Triangle triangle_convolution(TriangleParams params);

// Same triangle from one previous-row cell plus p-1 same-row cells with
// signed weights binomial(p-1, j); cells are filled in increasing k so the
// same-row reads are available, and negative k reads as zero.
Triangle triangle_alternating(TriangleParams params);

// Direct evaluation: (p-1)(n-k) * binomial((p-1)n+k, k) / ((p-1)n+k), the
// product taken before the division so the quotient is exact. A zero
// denominator occurs only at (0,0) and at k = 0 when p = 1, where the value
// is 1 by the initial conditions.
BigInt triangle_closed_form_cell(int p, int n, int k);
Triangle triangle_closed_form(TriangleParams params);

// Checks binomial(m+h, h) == sum_{r=1}^{h+1} (-1)^(r-1) binomial(h+1, r) *
// binomial(m+h-r, h) for m, h >= 0.
bool verify_binomial_identity_e4(int m, int h);

}  // namespace fct
