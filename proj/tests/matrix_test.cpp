#include "gjt/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gjt/serialization.hpp"
#include "test_support.hpp"

using namespace gjt;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

RationalMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Rational q(testsupport::draw(rng, -6, 6), testsupport::draw(rng, 1, 4));
      q.canonicalize();
      m.at(r, c) = q;
    }
  return m;
}

}  // namespace

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RationalMatrix::identity(7)), 7);
  EXPECT_EQ(rank(RationalMatrix(4, 5)), 0);
  EXPECT_EQ(rank(from_rows({{1, 2}, {2, 4}})), 1);
}

TEST(PivotColumns, Examples) {
  EXPECT_EQ(pivot_columns(from_rows({{1, 2}, {2, 4}})), (std::vector<int>{0}));
  EXPECT_EQ(pivot_columns(RationalMatrix::identity(3)), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(pivot_columns(from_rows({{0, 1}, {0, 0}})), (std::vector<int>{1}));
}

TEST(Rank, RationalEntriesAreExact) {
  // Rows proportional over Q but not over any float rounding.
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 3);
  m.at(0, 1) = Rational(1, 7);
  m.at(1, 0) = Rational(2, 3);
  m.at(1, 1) = Rational(2, 7);
  EXPECT_EQ(rank(m), 1);
}

TEST(RankProperties, TransposePermutationScaling) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 60; ++iter) {
    const int rows = static_cast<int>(testsupport::draw(rng, 1, 8));
    const int cols = static_cast<int>(testsupport::draw(rng, 1, 8));
    RationalMatrix m = random_matrix(rng, rows, cols);
    const int r = rank(m);
    EXPECT_LE(r, std::min(rows, cols));
    EXPECT_EQ(r, rank(m.transpose()));
    EXPECT_EQ(pivot_columns(m).size(), static_cast<std::size_t>(r));

    // Swap two rows and scale another; the rank must not move.
    RationalMatrix p = m;
    if (rows >= 2) {
      for (int c = 0; c < cols; ++c) std::swap(p.at(0, c), p.at(rows - 1, c));
      for (int c = 0; c < cols; ++c) p.at(rows / 2, c) *= Rational(-7, 3);
    }
    EXPECT_EQ(rank(p), r);
  }
}

TEST(SolveExact, RecoversSolution) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    const int cols = static_cast<int>(testsupport::draw(rng, 1, 5));
    const int rows = cols + static_cast<int>(testsupport::draw(rng, 0, 3));
    RationalMatrix a = random_matrix(rng, rows, cols);
    if (rank(a) != cols) continue;
    std::vector<Rational> x(static_cast<std::size_t>(cols));
    for (auto& v : x) v = Rational(testsupport::draw(rng, -5, 5));
    std::vector<Rational> b(static_cast<std::size_t>(rows), Rational(0));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) b[static_cast<std::size_t>(r)] += a.at(r, c) * x[static_cast<std::size_t>(c)];
    EXPECT_EQ(solve_exact(a, b), x);
  }
}

TEST(MatrixJson, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    RationalMatrix m = random_matrix(rng, static_cast<int>(testsupport::draw(rng, 1, 5)),
                                     static_cast<int>(testsupport::draw(rng, 1, 5)));
    const json j = to_json(m);
    EXPECT_EQ(rational_matrix_from_json(j), m);
  }
  // Schema shape: rationals as ["num","den"] decimal strings.
  RationalMatrix one(1, 1);
  one.at(0, 0) = Rational(-3, 7);
  const json j = to_json(one);
  EXPECT_EQ(j["rows"], 1);
  EXPECT_EQ(j["entries"][0][0], "-3");
  EXPECT_EQ(j["entries"][0][1], "7");
}
