#include "fct/verify.hpp"

#include <sstream>

#include "fct/lattice_paths.hpp"
#include "fct/partitions.hpp"
#include "fct/triangle.hpp"

namespace fct::verify {
namespace {

std::string cell_tag(int p, int n, int k) {
  std::ostringstream os;
  os << "(p=" << p << ", n=" << n << ", k=" << k << ")";
  return os.str();
}

Failure histogram_matches_triangle(int p, int n, const std::map<int, BigInt>& hist,
                                   const Triangle& t, Family family) {
  for (int b = 1; b <= n; ++b) {
    BigInt counted = 0;
    if (auto it = hist.find(b); it != hist.end()) {
      counted = it->second;
    }
    const BigInt& expected = t.cell(n, n - b);
    if (counted != expected) {
      std::ostringstream os;
      os << to_string(family) << " n=" << n << ", " << b
         << " boxes: enumerated " << counted << ", T^" << p << "(" << n << ","
         << (n - b) << ") = " << expected;
      return os.str();
    }
  }
  // No stray histogram entries outside 1..n.
  for (const auto& [boxes, count] : hist) {
    if (boxes < 1 || boxes > n) {
      std::ostringstream os;
      os << to_string(family) << " n=" << n << ": impossible box count "
         << boxes << " (x" << count << ")";
      return os.str();
    }
  }
  return std::nullopt;
}

}  // namespace

Failure method_equivalence(int p_max, int n_max) {
  for (int p = 1; p <= p_max; ++p) {
    const Triangle conv = triangle_convolution({p, n_max});
    const Triangle alt = triangle_alternating({p, n_max});
    const Triangle closed = triangle_closed_form({p, n_max});
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        const BigInt& a = conv.cell(n, k);
        const BigInt& b = alt.cell(n, k);
        const BigInt& c = closed.cell(n, k);
        if (a != b || a != c) {
          std::ostringstream os;
          os << cell_tag(p, n, k) << ": convolution " << a << ", alternating "
             << b << ", closed form " << c;
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

Failure row_sums(int p_max, int n_max) {
  for (int p = 1; p <= p_max; ++p) {
    for (const Triangle& t : {triangle_convolution({p, n_max}),
                              triangle_alternating({p, n_max}),
                              triangle_closed_form({p, n_max})}) {
      for (int n = 0; n <= n_max; ++n) {
        const BigInt sum = t.row_sum(n);
        const BigInt expected = fuss_catalan(p, n);
        if (sum != expected) {
          std::ostringstream os;
          os << "row sum (p=" << p << ", n=" << n << ", " << to_string(t.method())
             << "): " << sum << " != A^p_n = " << expected;
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

Failure catalan_triangle_recurrence(int n_max) {
  const Triangle t = triangle_convolution({2, n_max});
  if (t.cell(0, 0) != 1) {
    return std::string("(0,0) must be 1");
  }
  for (int n = 1; n <= n_max; ++n) {
    if (t.cell(n, 0) != 1 || t.cell(n, n) != 0) {
      std::ostringstream os;
      os << "p=2 boundary at n=" << n << ": row starts with " << t.cell(n, 0)
         << " and ends with " << t.cell(n, n);
      return os.str();
    }
    for (int k = 1; k < n; ++k) {
      if (t.cell(n, k) != t.cell(n, k - 1) + t.cell(n - 1, k)) {
        std::ostringstream os;
        os << "p=2 cell " << cell_tag(2, n, k) << " breaks T(n,k-1) + T(n-1,k)";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

Failure boundary_and_nonnegativity(int p_max, int n_max) {
  for (int p = 1; p <= p_max; ++p) {
    for (const Triangle& t : {triangle_convolution({p, n_max}),
                              triangle_alternating({p, n_max})}) {
      for (int n = 0; n <= n_max; ++n) {
        if (t.cell(n, 0) != 1) {
          return cell_tag(p, n, 0) + ": left column must be 1";
        }
        if (n > 0 && t.cell(n, n) != 0) {
          return cell_tag(p, n, n) + ": diagonal must be 0";
        }
        for (int k = 0; k <= n; ++k) {
          if (t.cell(n, k) < 0) {
            return cell_tag(p, n, k) + ": negative cell " + t.cell(n, k).str() +
                   " from " + to_string(t.method());
          }
        }
      }
    }
  }
  return std::nullopt;
}

Failure identity_e4(int m_max, int h_max) {
  for (int m = 0; m <= m_max; ++m) {
    for (int h = 0; h <= h_max; ++h) {
      if (!verify_binomial_identity_e4(m, h)) {
        std::ostringstream os;
        os << "binomial identity fails at (m=" << m << ", h=" << h << ")";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

Failure lattice_calibration() {
  const auto calibrated = calibrate_path_constraint();
  if (!calibrated) {
    return std::string("calibration sweep did not single out one convention");
  }
  if (*calibrated != kCalibratedConstraint) {
    return "calibration selected \"" + to_string(*calibrated) +
           "\" but the frozen convention is \"" +
           to_string(kCalibratedConstraint) + "\"";
  }
  return std::nullopt;
}

Failure lattice_oracle(int n_max) {
  if (auto failure = lattice_calibration()) {
    return failure;
  }
  for (int p = 2; p <= 5; ++p) {
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        const BigInt paths = count_constrained_paths({p, n, k});
        const BigInt closed = triangle_closed_form_cell(p, n, k);
        if (paths != closed) {
          std::ostringstream os;
          os << "path count " << cell_tag(p, n, k) << ": " << paths
             << " paths vs closed form " << closed;
          return os.str();
        }
      }
    }
  }
  return std::nullopt;
}

Failure enumeration_cardinalities(int partitions_max, int matchings_max,
                                  int doubles_max, int matching_doubles_max) {
  for (int n = 0; n <= partitions_max; ++n) {
    const auto count = BigInt(enumerate_noncrossing_partitions(n).size());
    if (count != fuss_catalan(2, n)) {
      return "noncrossing partitions of [" + std::to_string(n) + "]: got " +
             count.str() + ", want C_n = " + fuss_catalan(2, n).str();
    }
  }
  for (int n = 0; n <= matchings_max; ++n) {
    const auto count = BigInt(enumerate_noncrossing_matchings(n).size());
    if (count != fuss_catalan(2, n)) {
      return "noncrossing matchings with " + std::to_string(n) + " arcs: got " +
             count.str() + ", want C_n = " + fuss_catalan(2, n).str();
    }
  }
  for (int n = 0; n <= doubles_max; ++n) {
    const auto count = BigInt(enumerate_double_partitions(n).size());
    if (count != fuss_catalan(3, n)) {
      return "double partitions of [" + std::to_string(n) + "]: got " +
             count.str() + ", want A^3_n = " + fuss_catalan(3, n).str();
    }
  }
  for (int n = 0; n <= matching_doubles_max; ++n) {
    const auto count = BigInt(enumerate_matching_double_partitions(n).size());
    if (count != fuss_catalan(4, n)) {
      return "matching doubles with " + std::to_string(n) + " arcs: got " +
             count.str() + ", want A^4_n = " + fuss_catalan(4, n).str();
    }
  }
  return std::nullopt;
}

Failure box_correspondence(int matchings_max, int doubles_max,
                           int matching_doubles_max) {
  const Triangle t2 = triangle_convolution({2, std::max(matchings_max, 1)});
  for (int n = 1; n <= matchings_max; ++n) {
    if (auto failure = histogram_matches_triangle(
            2, n, box_distribution(n, Family::kMatchings), t2,
            Family::kMatchings)) {
      return failure;
    }
  }
  const Triangle t3 = triangle_convolution({3, std::max(doubles_max, 1)});
  for (int n = 1; n <= doubles_max; ++n) {
    if (auto failure = histogram_matches_triangle(
            3, n, box_distribution(n, Family::kDoublePartitions), t3,
            Family::kDoublePartitions)) {
      return failure;
    }
  }
  const Triangle t4 = triangle_convolution({4, std::max(matching_doubles_max, 1)});
  for (int n = 1; n <= matching_doubles_max; ++n) {
    if (auto failure = histogram_matches_triangle(
            4, n, box_distribution(n, Family::kMatchingDoubles), t4,
            Family::kMatchingDoubles)) {
      return failure;
    }
  }
  return std::nullopt;
}

Failure f_recurrence(int n_max) {
  const FRecurrenceReport report = verify_f_recurrence(n_max);
  if (!report.ok) {
    return report.detail;
  }
  return std::nullopt;
}

Failure signed_sum_goldens(const ReferenceData& ref) {
  for (int p = 1; p <= static_cast<int>(ref.signed_sums.size()); ++p) {
    const GoldenCheck check = check_signed_sums(ref, p);
    if (!check.ok) {
      return check.detail;
    }
  }
  return std::nullopt;
}

Failure p5_table_golden(const ReferenceData& ref) {
  const GoldenCheck check = check_p5_table(ref);
  if (!check.ok) {
    return check.detail;
  }
  return std::nullopt;
}

Failure exactness_sweep(int p_max, int n_max) {
  try {
    for (int p = 1; p <= p_max; ++p) {
      for (int n = 0; n <= n_max; ++n) {
        (void)fuss_catalan(p, n);
        for (int k = 0; k <= n; ++k) {
          (void)triangle_closed_form_cell(p, n, k);
        }
      }
    }
  } catch (const std::logic_error& e) {
    return std::string("inexact division: ") + e.what();
  }
  return std::nullopt;
}

}  // namespace fct::verify
