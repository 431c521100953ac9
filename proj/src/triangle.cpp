#include "fct/triangle.hpp"

#include <stdexcept>
#include <utility>

#include "fct/binomial.hpp"

namespace fct {
namespace {

void validate(const TriangleParams& params) {
  if (params.p < 1) {
    throw std::invalid_argument("triangle order p must be >= 1, got " +
                                std::to_string(params.p));
  }
  if (params.n_max < 0) {
    throw std::invalid_argument("n_max must be >= 0, got " +
                                std::to_string(params.n_max));
  }
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::kConvolution:
      return "convolution";
    case Method::kAlternating:
      return "alternating";
    case Method::kClosedForm:
      return "closed-form";
  }
  throw std::logic_error("unknown method tag");
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "convolution") return Method::kConvolution;
  if (text == "alternating") return Method::kAlternating;
  if (text == "closed-form") return Method::kClosedForm;
  return std::nullopt;
}

Triangle::Triangle(TriangleParams params, Method method,
                   std::vector<std::vector<BigInt>> rows)
    : params_(params), method_(method), rows_(std::move(rows)) {
  validate(params_);
  if (rows_.size() != static_cast<size_t>(params_.n_max) + 1) {
    throw std::invalid_argument("triangle must have n_max+1 rows");
  }
  for (size_t n = 0; n < rows_.size(); ++n) {
    if (rows_[n].size() != n + 1) {
      throw std::invalid_argument("row " + std::to_string(n) +
                                  " must have " + std::to_string(n + 1) +
                                  " cells");
    }
  }
}

const std::vector<BigInt>& Triangle::row(int n) const {
  if (n < 0 || n > params_.n_max) {
    throw std::out_of_range("row index " + std::to_string(n) +
                            " outside 0.." + std::to_string(params_.n_max));
  }
  return rows_[static_cast<size_t>(n)];
}

const BigInt& Triangle::cell(int n, int k) const {
  const auto& r = row(n);
  if (k < 0 || k > n) {
    throw std::out_of_range("cell index k=" + std::to_string(k) +
                            " outside row " + std::to_string(n));
  }
  return r[static_cast<size_t>(k)];
}

BigInt Triangle::row_sum(int n) const {
  BigInt sum = 0;
  for (const BigInt& value : row(n)) {
    sum += value;
  }
  return sum;
}

BigInt Triangle::signed_row_sum(int n) const {
  const auto& r = row(n);
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    if ((n + k + 1) % 2 == 0) {
      sum += r[static_cast<size_t>(k)];
    } else {
      sum -= r[static_cast<size_t>(k)];
    }
  }
  return sum;
}

bool same_cells(const Triangle& a, const Triangle& b) {
  if (a.p() != b.p() || a.n_max() != b.n_max()) {
    return false;
  }
  for (int n = 0; n <= a.n_max(); ++n) {
    if (a.row(n) != b.row(n)) {
      return false;
    }
  }
  return true;
}

BigInt fuss_catalan(int p, int n) {
  if (p < 1 || n < 0) {
    throw std::invalid_argument("fuss_catalan requires p >= 1 and n >= 0");
  }
  const long long m = static_cast<long long>(p) * n + 1;
  return exact_div(binomial(m, n), BigInt(m));
}

Triangle triangle_convolution(TriangleParams params) {
  validate(params);
  // weight[d] multiplies T(n-1, k-d); at p = 1 it degenerates to
  // binomial(d-1, -1), i.e. 1 at d = 0 and 0 beyond.
  std::vector<BigInt> weight(static_cast<size_t>(params.n_max) + 1);
  for (int d = 0; d <= params.n_max; ++d) {
    weight[static_cast<size_t>(d)] = binomial(d + params.p - 2, params.p - 2);
  }

  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(params.n_max) + 1);
  rows[0] = {BigInt(1)};
  for (int n = 1; n <= params.n_max; ++n) {
    const auto& prev = rows[static_cast<size_t>(n - 1)];
    auto& row = rows[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (int k = 0; k < n; ++k) {
      BigInt acc = 0;
      for (int j = 0; j <= k; ++j) {
        acc += weight[static_cast<size_t>(k - j)] * prev[static_cast<size_t>(j)];
      }
      row[static_cast<size_t>(k)] = std::move(acc);
    }
    // row[n] stays 0: the diagonal initial condition.
  }
  return Triangle(params, Method::kConvolution, std::move(rows));
}

Triangle triangle_alternating(TriangleParams params) {
  validate(params);
  const int p = params.p;
  // coef[j] = (-1)^(j-1) * binomial(p-1, j) for the same-row terms.
  std::vector<BigInt> coef(static_cast<size_t>(p), BigInt(0));
  for (int j = 1; j < p; ++j) {
    BigInt c = binomial(p - 1, j);
    coef[static_cast<size_t>(j)] = (j % 2 == 1) ? c : -c;
  }

  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(params.n_max) + 1);
  rows[0] = {BigInt(1)};
  for (int n = 1; n <= params.n_max; ++n) {
    const auto& prev = rows[static_cast<size_t>(n - 1)];
    auto& row = rows[static_cast<size_t>(n)];
    row.assign(static_cast<size_t>(n) + 1, BigInt(0));
    for (int k = 0; k < n; ++k) {
      BigInt acc = prev[static_cast<size_t>(k)];
      for (int j = 1; j < p && j <= k; ++j) {
        acc += coef[static_cast<size_t>(j)] * row[static_cast<size_t>(k - j)];
      }
      row[static_cast<size_t>(k)] = std::move(acc);
    }
  }
  return Triangle(params, Method::kAlternating, std::move(rows));
}

BigInt triangle_closed_form_cell(int p, int n, int k) {
  if (p < 1 || n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("closed form requires p >= 1 and 0 <= k <= n");
  }
  const long long denom = static_cast<long long>(p - 1) * n + k;
  if (denom == 0) {
    return 1;
  }
  BigInt numer = BigInt(p - 1) * (n - k) * binomial(denom, k);
  return exact_div(numer, BigInt(denom));
}

Triangle triangle_closed_form(TriangleParams params) {
  validate(params);
  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(params.n_max) + 1);
  for (int n = 0; n <= params.n_max; ++n) {
    auto& row = rows[static_cast<size_t>(n)];
    row.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      row.push_back(triangle_closed_form_cell(params.p, n, k));
    }
  }
  return Triangle(params, Method::kClosedForm, std::move(rows));
}

bool verify_binomial_identity_e4(int m, int h) {
  if (m < 0 || h < 0) {
    throw std::invalid_argument("identity check requires m >= 0 and h >= 0");
  }
  const BigInt lhs = binomial(m + h, h);
  BigInt rhs = 0;
  for (int r = 1; r <= h + 1; ++r) {
    BigInt term = binomial(h + 1, r) * binomial(m + h - r, h);
    rhs += (r % 2 == 1) ? term : -term;
  }
  return lhs == rhs;
}

}  // namespace fct
