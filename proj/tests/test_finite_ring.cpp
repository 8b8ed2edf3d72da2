#include <gtest/gtest.h>

#include <set>

#include "bracketlab/errors.hpp"
#include "bracketlab/finite_ring.hpp"

using namespace bracketlab;

namespace {

RingPtr gf8() { return make_ring(RingDescriptor::poly_quotient(2, {1, 1, 0, 1})); }

}  // namespace

TEST(FiniteRing, ZmodArithmetic) {
  const auto R = make_ring(RingDescriptor::zmod(9));
  EXPECT_EQ(R->size(), 9u);
  EXPECT_EQ(R->units().size(), 6u);
  EXPECT_EQ(R->add(R->from_integer(7), R->from_integer(5)), R->from_integer(3));
  EXPECT_EQ(R->neg(R->from_integer(2)), R->from_integer(7));
  EXPECT_EQ(R->mul(R->from_integer(4), R->from_integer(7)), R->one());
  EXPECT_EQ(R->invert(R->from_integer(4)), R->from_integer(7));
  EXPECT_FALSE(R->try_invert(R->from_integer(3)));
  EXPECT_THROW(R->invert(R->from_integer(6)), InputError);
  EXPECT_EQ(R->pow(R->from_integer(2), -1), R->from_integer(5));
  EXPECT_EQ(R->pow(R->from_integer(2), 6), R->one());
  EXPECT_EQ(R->from_integer(-1), R->from_integer(8));
}

TEST(FiniteRing, Gf8IsAField) {
  const auto R = gf8();
  EXPECT_EQ(R->size(), 8u);
  EXPECT_EQ(R->units().size(), 7u);
  const auto t = RingElement({0, 1, 0});
  // t^3 = t + 1
  EXPECT_EQ(R->pow(t, 3), RingElement({1, 1, 0}));
  EXPECT_EQ(R->pow(t, 7), R->one());
  for (const auto& a : R->units()) EXPECT_EQ(R->mul(a, R->invert(a)), R->one());
  EXPECT_EQ(R->to_string(RingElement({1, 0, 1})), "1+t^2");
  EXPECT_EQ(R->to_string(R->zero()), "0");
}

TEST(FiniteRing, RingAxiomsHoldExhaustively) {
  for (const auto& desc : {RingDescriptor::zmod(6), RingDescriptor::poly_quotient(2, {1, 0, 0, 1}),
                           RingDescriptor::poly_quotient(3, {2, 0, 1})}) {
    const Ring R(desc);
    for (const auto& a : R.elements()) {
      for (const auto& b : R.elements()) {
        EXPECT_EQ(R.mul(a, b), R.mul(b, a));
        EXPECT_EQ(R.sub(R.add(a, b), b), a);
        for (const auto& c : R.elements()) {
          EXPECT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
          EXPECT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
        }
      }
    }
  }
}

TEST(FiniteRing, GroupAlgebraOfCyclicGroupOfOrderThree) {
  // (Z/2)[s]/(1+s^3) is F2 x F4, so its only units are the powers of s.
  const auto R = make_ring(RingDescriptor::poly_quotient(2, {1, 0, 0, 1}));
  std::set<std::string> units;
  for (const auto& u : R->units()) units.insert(R->to_string(u));
  EXPECT_EQ(units, (std::set<std::string>{"1", "t", "t^2"}));
}

TEST(FiniteRing, RejectsBadDescriptors) {
  EXPECT_THROW(make_ring(RingDescriptor::zmod(1)), InputError);
  EXPECT_THROW(make_ring(RingDescriptor::poly_quotient(2, {1})), InputError);
  EXPECT_THROW(make_ring(RingDescriptor::poly_quotient(4, {1, 0, 2})), InputError);
  EXPECT_THROW(make_ring(RingDescriptor::zmod(5000)), InputError);
  const auto R = make_ring(RingDescriptor::zmod(5));
  EXPECT_THROW(R->index_of(RingElement({7})), InputError);
}

TEST(UnitSubgroup, GeneratesClosure) {
  const auto R = make_ring(RingDescriptor::zmod(9));
  const auto G = UnitSubgroup::generate(R, {R->from_integer(4)});
  EXPECT_EQ(G.order(), 3u);
  EXPECT_TRUE(G.contains(R->from_integer(7)));
  EXPECT_FALSE(G.contains(R->from_integer(2)));
  EXPECT_TRUE(UnitSubgroup::generate(R, {}).is_trivial());
  EXPECT_THROW(UnitSubgroup::generate(R, {R->from_integer(3)}), InputError);
}

TEST(Coset, QuotientArithmetic) {
  const auto R = make_ring(RingDescriptor::zmod(9));
  const auto G = std::make_shared<const UnitSubgroup>(UnitSubgroup::generate(R, {R->from_integer(4)}));
  const auto cosets = quotient_cosets(G);
  ASSERT_EQ(cosets.size(), 2u);
  const Coset a(G, R->from_integer(2)), b(G, R->from_integer(8));
  EXPECT_EQ(a, b);  // 8 = 2 * 4
  EXPECT_EQ(a.representative(), R->from_integer(2));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_TRUE((a * b).is_identity());  // 16 = 7 lies in G
  EXPECT_THROW(Coset(G, R->from_integer(3)), InputError);
}
