#pragma once

// Macaulay O-sequence machinery: binomial growth bounds, the O-sequence
// predicate, and the three necessary conditions a candidate rank matrix must
// satisfy.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gjt/jordan.hpp"

namespace gjt {

/// Binomial coefficient as an exact integer; zero when k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// The i-th Macaulay upper bound h^<i>: write h = C(a_i,i) + ... + C(a_j,j)
/// with a_i > a_{i-1} > ... > a_j >= j >= 1 (the unique representation,
/// found greedily) and return C(a_i+1,i+1) + ... + C(a_j+1,j+1).  This is
/// the largest admissible value in degree i+1 after h in degree i.
inline long macaulay_growth_bound(long h, int i) {
  if (i < 1) throw std::invalid_argument("macaulay bound: degree index must be >= 1");
  if (h < 0) throw std::invalid_argument("macaulay bound: negative value");
  if (h == 0) return 0;
  Integer bound = 0;
  Integer remaining(h);
  int k = i;
  while (remaining > 0 && k >= 1) {
    long a = k;
    while (binomial(a + 1, k) <= remaining) ++a;
    remaining -= binomial(a, k);
    bound += binomial(a + 1, k + 1);
    --k;
  }
  if (!bound.fits_slong_p())
    throw std::overflow_error("macaulay bound: result does not fit a machine integer");
  return bound.get_si();
}

struct OSequenceCheck {
  bool ok = true;
  int violation_index = -1;  // first failing position when !ok
};

/// Macaulay's characterization: v(0) <= 1, no entry negative, and each step
/// bounded by the binomial growth of the previous one.  A leading zero
/// forces the whole vector to vanish (the algebra is zero).
inline OSequenceCheck is_o_sequence(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0) return {false, static_cast<int>(i)};
  if (v.empty()) return {};
  if (v[0] > 1) return {false, 0};
  if (v[0] == 0) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != 0) return {false, static_cast<int>(i)};
    return {};
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i + 1] > macaulay_growth_bound(v[i], static_cast<int>(i)))
      return {false, static_cast<int>(i) + 1};
  return {};
}

struct ConditionViolation {
  std::string condition;  // "i", "ii" or "iii"
  int index = -1;         // diagonal index for (i)/(ii); row index for (iii)
  int position = -1;      // failing entry for (i)/(ii); column index for (iii)
  std::string detail;
};

struct ConditionReport {
  bool passed = true;
  std::vector<ConditionViolation> violations;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string vector_to_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace detail

/// Necessary conditions for an upper-triangular non-negative matrix to be
/// the rank matrix of some Artinian Gorenstein algebra and linear form:
///   (i)   every diagonal is an O-sequence;
///   (ii)  diag(k) minus the zero-prepended diag(k+1) is an O-sequence;
///   (iii) for successive 2x2 submatrices (u v / w z) with w on or above the
///         main diagonal, w + v >= u + z.
/// All violations are reported.  Non-symmetric non-zero diagonals are only
/// warned about: genuine diagonals are Gorenstein Hilbert functions, but the
/// conditions themselves do not require symmetry.
inline ConditionReport check_rank_matrix_conditions(const TriangularIntMatrix& m) {
  if (!m.is_upper_triangular())
    throw std::invalid_argument("condition check: matrix is not upper triangular");
  const int n = m.size();
  ConditionReport report;

  for (int k = 0; k < n; ++k) {
    const auto diag = m.diagonal(k);
    const auto check = is_o_sequence(diag);
    if (!check.ok) {
      report.violations.push_back({"i", k, check.violation_index,
                                   "diag(" + std::to_string(k) + ") = " +
                                       detail::vector_to_string(diag) +
                                       " is not an O-sequence"});
    }
    bool non_zero = false, symmetric = true;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] != 0) non_zero = true;
      if (diag[i] != diag[diag.size() - 1 - i]) symmetric = false;
    }
    if (non_zero && !symmetric)
      report.warnings.push_back("diag(" + std::to_string(k) + ") = " +
                                detail::vector_to_string(diag) + " is not symmetric");
  }

  for (int k = 0; k + 1 < n; ++k) {
    const auto upper = m.diagonal(k);
    const auto lower = m.diagonal(k + 1);
    std::vector<int> diff(upper.size());
    diff[0] = upper[0];
    for (std::size_t i = 1; i < upper.size(); ++i)
      diff[i] = upper[i] - lower[i - 1];
    const auto check = is_o_sequence(diff);
    if (!check.ok) {
      report.violations.push_back({"ii", k, check.violation_index,
                                   "diag(" + std::to_string(k) + ") - (diag(" +
                                       std::to_string(k + 1) + "))_+ = " +
                                       detail::vector_to_string(diff) +
                                       " is not an O-sequence"});
    }
  }

  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j + 1 < n; ++j) {
      const int u = m.at(i, j), v = m.at(i, j + 1);
      const int w = m.at(i + 1, j), z = m.at(i + 1, j + 1);
      if (w + v < u + z) {
        std::ostringstream os;
        os << "submatrix (" << u << "," << v << ";" << w << "," << z
           << ") at rows " << i << "," << i + 1 << " and columns " << j << ","
           << j + 1 << " violates w+v >= u+z";
        report.violations.push_back({"iii", i, j, os.str()});
      }
    }
  }

  report.passed = report.violations.empty();
  return report;
}

}  // namespace gjt
