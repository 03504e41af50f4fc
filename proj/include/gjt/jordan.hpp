#pragma once

// Rank matrices of a linear form acting on an Artinian Gorenstein algebra,
// the bidirectional conversion to Jordan-degree-type matrices, Jordan type
// partitions, and an independent nilpotent-matrix oracle.

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gjt/apolarity.hpp"
#include "gjt/matrix.hpp"
#include "gjt/polynomial.hpp"

namespace gjt {

/// Square integer matrix of size d+1, zero strictly below the diagonal.
/// Used both for rank matrices M and Jordan-degree-type matrices J.
class TriangularIntMatrix {
 public:
  explicit TriangularIntMatrix(int size)
      : size_(size),
        entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
    if (size < 1) throw std::invalid_argument("triangular matrix: size must be positive");
  }

  int size() const { return size_; }

  int& at(int r, int c) { return entries_[index(r, c)]; }
  int at(int r, int c) const { return entries_[index(r, c)]; }

  /// Entry with out-of-range indices read as zero.
  int at_or_zero(int r, int c) const {
    if (r < 0 || c < 0 || r >= size_ || c >= size_) return 0;
    return entries_[index(r, c)];
  }

  bool is_upper_triangular() const {
    for (int r = 1; r < size_; ++r)
      for (int c = 0; c < r; ++c)
        if (at(r, c) != 0) return false;
    return true;
  }

  /// diag(k): the vector (M_{0,k}, M_{1,k+1}, ..., M_{d-k,d}).
  std::vector<int> diagonal(int k) const {
    if (k < 0 || k >= size_) throw std::out_of_range("triangular matrix: diagonal out of range");
    std::vector<int> out;
    for (int i = 0; i + k < size_; ++i) out.push_back(at(i, i + k));
    return out;
  }

  void set_diagonal(int k, const std::vector<int>& values) {
    if (k < 0 || k >= size_ || static_cast<int>(values.size()) != size_ - k)
      throw std::invalid_argument("triangular matrix: bad diagonal");
    for (int i = 0; i + k < size_; ++i) at(i, i + k) = values[static_cast<std::size_t>(i)];
  }

  friend bool operator==(const TriangularIntMatrix& a, const TriangularIntMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const TriangularIntMatrix& a, const TriangularIntMatrix& b) {
    return !(a == b);
  }

  /// Column-aligned rows in parentheses, one matrix row per line.
  std::string to_string() const {
    int width = 1;
    for (int v : entries_) width = std::max(width, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    for (int r = 0; r < size_; ++r) {
      os << '(';
      for (int c = 0; c < size_; ++c) {
        const std::string s = std::to_string(at(r, c));
        os << (c ? " " : "") << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
      }
      os << ")\n";
    }
    return os.str();
  }

 private:
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= size_ || c < 0 || c >= size_)
      throw std::out_of_range("triangular matrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(c);
  }

  int size_;
  std::vector<int> entries_;
};

using RankMatrix = TriangularIntMatrix;
using JdtMatrix = TriangularIntMatrix;

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
      if (p <= 0) throw std::invalid_argument("partition: parts must be positive");
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t count() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  long sum() const {
    long s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// Conjugate partition: k-th part counts parts >= k+1.
  Partition conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition(std::move(out));
    for (int k = 1; k <= parts_.front(); ++k) {
      int c = 0;
      for (int p : parts_)
        if (p >= k) ++c;
      out.push_back(c);
    }
    return Partition(std::move(out));
  }

  /// Dominance order: every prefix sum of *this is <= the one of other.
  /// Comparable only for equal sums.
  bool dominated_by(const Partition& other) const {
    if (sum() != other.sum()) return false;
    long mine = 0, theirs = 0;
    const std::size_t len = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < len; ++i) {
      mine += i < parts_.size() ? parts_[i] : 0;
      theirs += i < other.parts_.size() ? other.parts_[i] : 0;
      if (mine > theirs) return false;
    }
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

  /// Compact form with multiplicities, e.g. "(4^8, 2^3)".
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (!first) os << ", ";
      os << parts_[i];
      if (j - i > 1) os << '^' << (j - i);
      first = false;
      i = j;
    }
    os << ')';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
  }

 private:
  std::vector<int> parts_;
};

/// Indexed partition: each part carries the starting degree of its string.
/// Canonical order is parts descending, ties by ascending degree.
struct JordanDegreeType {
  std::vector<std::pair<int, int>> entries;  // (part, degree)

  long sum() const {
    long s = 0;
    for (const auto& [p, deg] : entries) s += p;
    return s;
  }

  Partition partition() const {
    std::vector<int> parts;
    parts.reserve(entries.size());
    for (const auto& [p, deg] : entries) parts.push_back(p);
    return Partition(std::move(parts));
  }

  friend bool operator==(const JordanDegreeType& a, const JordanDegreeType& b) {
    return a.entries == b.entries;
  }

  /// e.g. "(3_0, 3_1, 3_1, 3_2)".
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries.size(); ++i)
      os << (i ? ", " : "") << entries[i].first << '_' << entries[i].second;
    os << ')';
    return os.str();
  }
};

/// Rank matrix of (A, ell): entry (i,j) is the rank of multiplication by
/// ell^(j-i) from A_i to A_j, read off as the Hilbert function of the
/// derived algebra A^(j-i) in degree i.
inline RankMatrix rank_matrix(const DualGenerator& f, const LinearForm& ell) {
  const int d = f.degree();
  RankMatrix m(d + 1);
  const auto chain = derived_chain(f, ell);
  for (std::size_t k = 0; k < chain.size() && k <= static_cast<std::size_t>(d); ++k) {
    const HilbertFunction h = hilbert_function(chain[k]);
    for (int i = 0; i + static_cast<int>(k) <= d; ++i)
      m.at(i, i + static_cast<int>(k)) =
          i < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(i)] : 0;
  }
  return m;
}

/// J' and J computed from M by the two defining recurrences, indices outside
/// the matrix reading as zero.  A negative entry in either intermediate
/// means M is not a valid rank matrix.
inline std::pair<JdtMatrix, JdtMatrix> jdt_with_intermediate(const RankMatrix& m) {
  if (!m.is_upper_triangular())
    throw std::invalid_argument("jdt_from_rank: matrix is not upper triangular");
  const int n = m.size();
  JdtMatrix jp(n), j(n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const int v = m.at(r, c) - m.at_or_zero(r, c + 1);
      if (v < 0)
        throw std::domain_error(
            "jdt_from_rank: negative entry in J' at (" + std::to_string(r) + "," +
            std::to_string(c) + "); ranks of successive powers must be non-increasing");
      jp.at(r, c) = v;
    }
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      const int v = jp.at(r, c) - jp.at_or_zero(r - 1, c);
      if (v < 0)
        throw std::domain_error(
            "jdt_from_rank: negative entry in J at (" + std::to_string(r) + "," +
            std::to_string(c) + "); the 2x2 rank inequality fails");
      j.at(r, c) = v;
    }
  return {std::move(jp), std::move(j)};
}

inline JdtMatrix jdt_from_rank(const RankMatrix& m) {
  return jdt_with_intermediate(m).second;
}

/// Exact inverse of jdt_from_rank: J' is the running column sum of J from
/// the top, M the running row sum of J' from the right.
inline RankMatrix rank_from_jdt(const JdtMatrix& j) {
  const int n = j.size();
  TriangularIntMatrix jp(n);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) jp.at(r, c) = j.at(r, c) + jp.at_or_zero(r - 1, c);
  RankMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = n - 1; c >= r; --c) m.at(r, c) = jp.at(r, c) + m.at_or_zero(r, c + 1);
  return m;
}

/// Partition whose number of parts of size k+1 is the second difference of
/// the derived-algebra dimension vector at k.
inline Partition partition_from_dimension_vector(const std::vector<long>& dims) {
  std::vector<int> parts;
  const auto dim_at = [&](std::size_t i) -> long { return i < dims.size() ? dims[i] : 0; };
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const long n_i = dim_at(i) + dim_at(i + 2) - 2 * dim_at(i + 1);
    assert(n_i >= 0);
    for (long c = 0; c < n_i; ++c) parts.push_back(static_cast<int>(i) + 1);
  }
  return Partition(std::move(parts));
}

/// Jordan type of multiplication by ell on A, via the second difference of
/// (dim A^(0), ..., dim A^(d)).  Cross-checked in debug builds against the
/// dual partition of the successive rank differences.
inline Partition jordan_type(const DualGenerator& f, const LinearForm& ell) {
  const auto chain = derived_chain(f, ell);
  std::vector<long> dims(chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i) dims[i] = algebra_dimension(chain[i]);
  Partition p = partition_from_dimension_vector(dims);
#ifndef NDEBUG
  {
    std::vector<int> diffs;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const long next = i + 1 < dims.size() ? dims[i + 1] : 0;
      if (dims[i] - next > 0) diffs.push_back(static_cast<int>(dims[i] - next));
    }
    assert(p == Partition(diffs).conjugate());
  }
#endif
  return p;
}

/// For each non-zero J_{i,j}, that many strings of length j-i+1 starting in
/// degree i.
inline JordanDegreeType jordan_degree_type(const JdtMatrix& j) {
  JordanDegreeType out;
  for (int r = 0; r < j.size(); ++r)
    for (int c = r; c < j.size(); ++c)
      for (int k = 0; k < j.at(r, c); ++k) out.entries.emplace_back(c - r + 1, r);
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  return out;
}

inline JordanDegreeType jordan_degree_type(const DualGenerator& f, const LinearForm& ell) {
  return jordan_degree_type(jdt_from_rank(rank_matrix(f, ell)));
}

/// Block sizes of a nilpotent matrix from the ranks of its powers: the
/// number of parts >= k is rank(N^(k-1)) - rank(N^k).
inline Partition partition_from_power_ranks(const std::vector<int>& ranks) {
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int at_least_k = ranks[k - 1] - ranks[k];
    const int at_least_k1 =
        k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : ranks[k];
    const int exactly_k = at_least_k - at_least_k1;
    if (exactly_k < 0) throw std::domain_error("power ranks are not those of a nilpotent matrix");
    for (int c = 0; c < exactly_k; ++c) parts.push_back(static_cast<int>(k));
  }
  return Partition(std::move(parts));
}

/// Independent brute-force route: build the multiplication matrix of ell on
/// A, take exact ranks of its powers, and read the Jordan block sizes off
/// the rank differences.
inline Partition jordan_type_oracle(const DualGenerator& f, const LinearForm& ell) {
  const RationalMatrix big = multiplication_matrix(f, ell);
  std::vector<int> ranks{big.rows()};  // rank of the identity power
  RationalMatrix power = big;
  while (true) {
    const int r = rank(power);
    ranks.push_back(r);
    if (r == 0) break;
    power = power * big;
  }
  return partition_from_power_ranks(ranks);
}

}  // namespace gjt
