#include <gtest/gtest.h>

#include "bracketlab/errors.hpp"
#include "bracketlab/graded_algebra.hpp"

using namespace bracketlab;

namespace {

// 0 -> Z --(factor)--> Z -> 0, both basis vectors in degree q^0.
GradedComplex two_term(std::int64_t factor) {
  GradedComplex c;
  c.group = GradingGroup::infinite_cyclic();
  c.global_shift = std::int64_t{0};
  c.basis_degrees = {{std::int64_t{0}}, {std::int64_t{0}}};
  SparseMatrix d(1, 1);
  d.add(0, 0, factor);
  c.differentials = {d};
  return c;
}

}  // namespace

TEST(GradedAlgebra, CohomologyOfTwoTermComplexes) {
  const auto zero_map = cohomology(two_term(0));
  EXPECT_EQ(zero_map.entries.size(), 2u);
  const auto iso = cohomology(two_term(1));
  EXPECT_TRUE(iso.entries.empty());
  const auto torsion = cohomology(two_term(2));
  ASSERT_EQ(torsion.entries.size(), 1u);
  const auto& [key, entry] = *torsion.entries.begin();
  EXPECT_EQ(key.first, 1);
  EXPECT_EQ(entry.rank, 0u);
  EXPECT_EQ(entry.torsion, std::vector<BigInt>{2});
}

TEST(GradedAlgebra, DetectsBrokenComplexes) {
  GradedComplex c;
  c.group = GradingGroup::infinite_cyclic();
  c.global_shift = std::int64_t{0};
  c.basis_degrees = {{std::int64_t{0}}, {std::int64_t{0}}, {std::int64_t{0}}};
  SparseMatrix d(1, 1);
  d.add(0, 0, 1);
  c.differentials = {d, d};
  EXPECT_FALSE(check_d_squared(c).ok());
  EXPECT_THROW(cohomology(c), InputError);

  auto wrong_degree = two_term(1);
  wrong_degree.basis_degrees[1][0] = std::int64_t{2};
  EXPECT_FALSE(check_degree_preserving(wrong_degree).ok());
}

TEST(GradedAlgebra, EulerCharacteristicAndShifts) {
  auto c = two_term(3);
  c.basis_degrees = {{std::int64_t{1}}, {std::int64_t{1}}};
  EXPECT_EQ(graded_euler_characteristic(c), graded_euler_characteristic(cohomology(c)));
  const auto s = shifted(c, 2, std::int64_t{5});
  const auto h = cohomology(s);
  ASSERT_EQ(h.entries.size(), 1u);
  EXPECT_EQ(h.entries.begin()->first, (std::pair<int, Degree>{3, std::int64_t{6}}));
}

TEST(GradedAlgebra, FiniteUnitGrading) {
  const auto R = make_ring(RingDescriptor::zmod(7));
  const auto g = GradingGroup::finite_units(R);
  const Degree three = R->from_integer(3);
  EXPECT_EQ(g.multiply(three, g.inverse(three)), g.identity());
  EXPECT_EQ(g.power(three, 6), g.identity());
  FormalSum s;
  add_term(s, three, 2);
  add_term(s, g.identity(), -1);
  EXPECT_EQ(evaluate_formal_sum(g, s), R->from_integer(5));
  EXPECT_THROW(evaluate_formal_sum(GradingGroup::infinite_cyclic(), s), InputError);
}

TEST(GradedAlgebra, AddEntryMergesTorsion) {
  HomologyTable t;
  t.group = GradingGroup::infinite_cyclic();
  add_entry(t, 0, std::int64_t{1}, {1, {2}});
  add_entry(t, 0, std::int64_t{1}, {0, {3}});
  const auto& e = t.entries.at({0, std::int64_t{1}});
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.torsion, std::vector<BigInt>{6});
}
