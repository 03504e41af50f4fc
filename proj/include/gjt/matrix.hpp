#pragma once

// Dense matrices over exact rationals with fraction-free rank computation
// and deterministic pivot-column extraction.

#include <gmpxx.h>

#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gjt/polynomial.hpp"

namespace gjt {

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  }

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[index(r, c)]; }
  const Rational& at(int r, int c) const { return entries_[index(r, c)]; }

  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const {
    RationalMatrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: shape mismatch in product");
    RationalMatrix out(a.rows_, b.cols_);
    Rational acc;
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj == 0) continue;
          out.at(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
      os << (r == 0 ? "[" : " ");
      for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
      os << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("matrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_, cols_;
  std::vector<Rational> entries_;
};

struct EliminationResult {
  int rank = 0;
  std::vector<int> pivot_columns;
};

namespace detail {

/// One-step fraction-free (Bareiss) elimination on a denominator-cleared
/// integer copy.  Columns are scanned left to right and the first non-zero
/// entry below the current row is the pivot, so the pivot column set is the
/// lexicographically-first maximal independent set.
inline EliminationResult fraction_free_eliminate(const RationalMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<Integer> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    Integer lcm = 1;
    for (int c = 0; c < cols; ++c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    for (int c = 0; c < cols; ++c) {
      const Rational& q = m.at(r, c);
      Integer scaled = q.get_num() * (lcm / q.get_den());
      a[static_cast<std::size_t>(r) * cols + c] = std::move(scaled);
    }
  }

  auto e = [&](int r, int c) -> Integer& {
    return a[static_cast<std::size_t>(r) * cols + c];
  };

  EliminationResult out;
  Integer prev = 1;
  Integer t;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (e(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int cc = c; cc < cols; ++cc) std::swap(e(pivot, cc), e(rank, cc));
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc) {
        // Entries stay minors of the original matrix; the division is exact.
        t = e(r, cc) * e(rank, c) - e(r, c) * e(rank, cc);
        assert(mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        e(r, cc) = t;
      }
      e(r, c) = 0;
    }
    prev = e(rank, c);
    out.pivot_columns.push_back(c);
    ++rank;
  }
  out.rank = rank;
  return out;
}

}  // namespace detail

/// Exact rank over the rationals.
inline int rank(const RationalMatrix& m) {
  return detail::fraction_free_eliminate(m).rank;
}

/// Indices of the lexicographically-first maximal independent column set;
/// length equals rank(m).
inline std::vector<int> pivot_columns(const RationalMatrix& m) {
  return detail::fraction_free_eliminate(m).pivot_columns;
}

/// Solve A x = b exactly for a consistent system whose columns are
/// independent.  Plain rational Gaussian elimination; systems here are small.
inline std::vector<Rational> solve_exact(const RationalMatrix& a,
                                         const std::vector<Rational>& b) {
  const int rows = a.rows(), cols = a.cols();
  if (static_cast<int>(b.size()) != rows)
    throw std::invalid_argument("solve_exact: right-hand side length mismatch");
  RationalMatrix work = a;
  std::vector<Rational> rhs = b;

  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (work.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int cc = c; cc < cols; ++cc) std::swap(work.at(pivot, cc), work.at(rank, cc));
      std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(rank)]);
    }
    for (int r = rank + 1; r < rows; ++r) {
      if (work.at(r, c) == 0) continue;
      Rational factor = work.at(r, c) / work.at(rank, c);
      for (int cc = c; cc < cols; ++cc) work.at(r, cc) -= factor * work.at(rank, cc);
      rhs[static_cast<std::size_t>(r)] -= factor * rhs[static_cast<std::size_t>(rank)];
    }
    pivot_row_of_col[static_cast<std::size_t>(c)] = rank;
    ++rank;
  }
  if (rank != cols) throw std::domain_error("solve_exact: columns are not independent");
  for (int r = rank; r < rows; ++r)
    if (rhs[static_cast<std::size_t>(r)] != 0)
      throw std::domain_error("solve_exact: inconsistent system");

  std::vector<Rational> x(static_cast<std::size_t>(cols));
  for (int c = cols - 1; c >= 0; --c) {
    const int pr = pivot_row_of_col[static_cast<std::size_t>(c)];
    Rational acc = rhs[static_cast<std::size_t>(pr)];
    for (int cc = c + 1; cc < cols; ++cc) acc -= work.at(pr, cc) * x[static_cast<std::size_t>(cc)];
    x[static_cast<std::size_t>(c)] = acc / work.at(pr, c);
  }
  return x;
}

}  // namespace gjt
