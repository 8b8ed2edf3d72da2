#include <gtest/gtest.h>

#include <map>

#include "bracketlab/cocycle.hpp"
#include "bracketlab/errors.hpp"
#include "support.hpp"

using namespace bracketlab;

TEST(Cocycle, FlipCocycleVerifies) {
  const auto c = support::cocycle("flip_ab");
  EXPECT_TRUE(verify_cocycle(c).ok());
  const auto broken = cocycle_data_from_json(support::corpus_json("cocycles/flip_broken.json"));
  const Cocycle bad{Biquandle(broken.biquandle.under, broken.biquandle.over), broken.target, broken.phi};
  const auto r = verify_cocycle(bad);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failures.front().axiom, "i");
}

TEST(Cocycle, HopfAndTrefoilInvariants) {
  const auto c = support::cocycle("flip_ab");
  const auto one = c.target.identity();
  const auto ab = c.target.parse_word("ab");
  EXPECT_EQ(cocycle_invariant(c, support::diagram("hopf")), (Multiset<CocycleValue>{{one, 2}, {ab, 2}}));
  EXPECT_EQ(cocycle_invariant(c, support::diagram("trefoil")), (Multiset<CocycleValue>{{one, 2}}));
  EXPECT_EQ(cocycle_invariant(c, support::diagram("figure_eight")), (Multiset<CocycleValue>{{one, 2}}));
}

TEST(Cocycle, FreeWordSyntax) {
  const auto t = CocycleTarget::free_abelian({"a", "b"});
  const auto w = t.parse_word("a^2b^-1");
  EXPECT_EQ(std::get<FreeWord>(w).exponents, (std::vector<std::int64_t>{2, -1}));
  EXPECT_EQ(t.to_string(w), "a^2b^-1");
  EXPECT_EQ(t.to_string(t.identity()), "1");
  EXPECT_EQ(t.parse_word("a * b"), t.parse_word("ab"));
  EXPECT_TRUE(t.is_identity(t.multiply(w, t.inverse(w))));
  EXPECT_THROW(t.parse_word("c"), InputError);
  EXPECT_THROW(t.parse_word("a^"), InputError);
}

TEST(Cocycle, CanonicalCocycleOfConstantBracketIsTrivial) {
  for (const auto* name : {"z5_constant", "z7_constant"}) {
    const auto cc = canonical_cocycle(support::bracket(name));
    for (const auto& row : cc.phi.phi) {
      for (const auto& v : row) EXPECT_TRUE(cc.phi.target.is_identity(v)) << name;
    }
  }
}

TEST(Cocycle, GroupRingBracketReproducesItsCocycle) {
  const auto beta = support::bracket("f2_group_ring");
  const auto cc = canonical_cocycle(beta);
  const auto s = RingElement({0, 1, 0});
  const auto pushed = push_forward(support::cocycle("flip_ab"), {{"a", s}, {"b", s}}, cc.G);
  EXPECT_EQ(pushed.phi, cc.phi.phi);
  // The Hopf link values {1, 1, ab, ab} become {1, 1, s^2, s^2}.
  const auto z = z_invariant_multiset(beta, support::diagram("hopf"));
  ASSERT_EQ(z.size(), 2u);
  std::map<RingElement, std::size_t> counts;
  for (const auto& [coset, mult] : z) counts[coset.representative()] = mult;
  EXPECT_EQ(counts[beta.ring().one()], 2u);
  EXPECT_EQ(counts[beta.ring().mul(s, s)], 2u);
}

TEST(Cocycle, GradingSubgroups) {
  EXPECT_EQ(grading_subgroup(support::bracket("gf8_flip"))->order(), 1u);
  EXPECT_EQ(grading_subgroup(support::bracket("z8_flip"))->order(), 2u);
  EXPECT_EQ(grading_subgroup(support::bracket("z9_flip"))->order(), 3u);
  EXPECT_EQ(grading_subgroup(support::bracket("z5_trivial2"))->order(), 2u);
}

TEST(Cocycle, CanonicalCocycleIndependentOfBasePoint) {
  for (const auto& name : support::valid_bracket_names()) {
    const auto beta = support::bracket(name);
    const auto base = canonical_cocycle(beta, 1);
    EXPECT_TRUE(verify_cocycle(base.phi).ok()) << name;
    for (int x0 = 2; x0 <= beta.biquandle().size(); ++x0) {
      const auto other = canonical_cocycle(beta, x0);
      EXPECT_EQ(*other.G, *base.G) << name;
      EXPECT_EQ(other.phi.phi, base.phi.phi) << name;
    }
  }
}

TEST(Cocycle, BasePointMovesQWithinItsCoset) {
  const auto beta = support::bracket("z5_trivial2_asym");
  const auto c1 = canonical_cocycle(beta, 1);
  const auto c2 = canonical_cocycle(beta, 2);
  EXPECT_NE(c1.q, c2.q);
  EXPECT_EQ(Coset(c1.G, c1.q), Coset(c2.G, c2.q));
}

TEST(Cocycle, ZShiftMatchesCocycleInvariant) {
  // Z_beta(f) is the canonical cocycle's state product.
  for (const auto& name : support::valid_bracket_names()) {
    const auto beta = support::bracket(name);
    const auto cc = canonical_cocycle(beta);
    for (const auto* dname : {"trefoil", "hopf", "figure_eight", "unknot_r2_pd"}) {
      const auto d = support::diagram(dname);
      for (const auto& f : enumerate_colorings(beta.biquandle(), d)) {
        EXPECT_EQ(CocycleValue(z_invariant(beta, d, f)), cocycle_value(cc.phi, d, f)) << name << " " << dname;
      }
    }
  }
}
