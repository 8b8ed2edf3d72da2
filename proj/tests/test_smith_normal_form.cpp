#include <gtest/gtest.h>

#include <random>

#include "bracketlab/smith_normal_form.hpp"

using namespace bracketlab;

namespace {

IntMatrix to_big(const std::vector<std::vector<std::int64_t>>& m) {
  IntMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
  for (auto& row : m) {
    for (auto& v : row) v = dist(rng);
  }
  return m;
}

BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

}  // namespace

TEST(SmithNormalForm, DecompositionHolds) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    const auto m = to_big(random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 9));
    const auto s = smith_normal_form(m);
    EXPECT_EQ(multiply(multiply(s.U, m), s.V), s.S);
    EXPECT_EQ(abs_big(determinant(s.U)), 1);
    EXPECT_EQ(abs_big(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) EXPECT_EQ(s.S[i][j], 0);
      }
    }
    for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k) {
      EXPECT_EQ(s.invariant_factors[k + 1] % s.invariant_factors[k], 0);
    }
    if (r == c) {
      BigInt product = 1;
      for (const auto& f : s.invariant_factors) product *= f;
      EXPECT_EQ(s.rank() == r ? product : BigInt(0), abs_big(determinant(m)));
    }
  }
}

TEST(SmithNormalForm, FastPathAgreesWithExactPath) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 2 + trial % 6, 2 + trial % 4, 50);
    EXPECT_EQ(invariant_factors(m), smith_normal_form(to_big(m)).invariant_factors);
  }
}

TEST(SmithNormalForm, OverflowFallsBackToBigIntegers) {
  const std::int64_t big = 3037000499;  // about sqrt(2^63)
  const std::vector<std::vector<std::int64_t>> m{{big, big - 1, 7}, {big - 2, big, 11}, {5, big, big - 3}};
  EXPECT_EQ(invariant_factors(m), smith_normal_form(to_big(m)).invariant_factors);
}

TEST(SmithNormalForm, KnownExamples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors,
            (std::vector<BigInt>{2, 6, 12}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank(), 0u);
  const auto empty = smith_normal_form(IntMatrix{}, 0, 3);
  EXPECT_EQ(empty.V.size(), 3u);
  EXPECT_EQ(combine_torsion({2, 3, 1, 0, 4}), (std::vector<BigInt>{2, 12}));
}
