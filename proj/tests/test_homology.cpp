#include <gtest/gtest.h>

#include "bracketlab/homology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bracketlab;

namespace {

using Expected = std::vector<std::tuple<int, std::int64_t, std::uint64_t, std::vector<BigInt>>>;

Expected flatten(const HomologyTable& t) {
  Expected out;
  for (const auto& [key, e] : t.entries) out.emplace_back(key.first, std::get<std::int64_t>(key.second), e.rank, e.torsion);
  return out;
}

}  // namespace

TEST(Khovanov, KnownTables) {
  EXPECT_EQ(flatten(khovanov_classical(support::diagram("unknot"))), (Expected{{0, -1, 1, {}}, {0, 1, 1, {}}}));
  EXPECT_EQ(flatten(khovanov_classical(support::diagram("trefoil"))),
            (Expected{{0, 1, 1, {}}, {0, 3, 1, {}}, {2, 5, 1, {}}, {3, 7, 0, {2}}, {3, 9, 1, {}}}));
  EXPECT_EQ(flatten(khovanov_classical(support::diagram("hopf"))),
            (Expected{{0, 0, 1, {}}, {0, 2, 1, {}}, {2, 4, 1, {}}, {2, 6, 1, {}}}));
  EXPECT_EQ(flatten(khovanov_classical(support::diagram("figure_eight"))),
            (Expected{{-2, -5, 1, {}}, {-1, -3, 0, {2}}, {-1, -1, 1, {}}, {0, -1, 1, {}}, {0, 1, 1, {}},
                      {1, 1, 1, {}}, {2, 3, 0, {2}}, {2, 5, 1, {}}}));
}

TEST(Khovanov, EulerCharacteristicIsJones) {
  for (const auto& name : support::diagram_names()) {
    const auto d = support::diagram(name);
    oracle::Laurent chi;
    for (const auto& [degree, coefficient] : graded_euler_characteristic(khovanov_classical(d))) {
      chi[static_cast<int>(std::get<std::int64_t>(degree))] = static_cast<std::int64_t>(coefficient);
    }
    EXPECT_EQ(chi, oracle::jones_state_sum(d)) << name;
  }
}

TEST(Khovanov, ComplexStructure) {
  for (const auto& name : support::diagram_names()) {
    const auto cube = classical_cube(support::diagram(name));
    const auto c = assemble(cube);
    EXPECT_TRUE(check_d_squared(c).ok()) << name;
    EXPECT_TRUE(check_degree_preserving(c).ok()) << name;
    EXPECT_TRUE(check_anticommuting_faces(cube).ok()) << name;
    EXPECT_TRUE(check_euler_of_complex(c, cohomology(c)).ok()) << name;
  }
}

TEST(BracketHomology, StructureAndTheoremAcrossCorpus) {
  for (const auto& bname : support::valid_bracket_names()) {
    const auto beta = support::bracket(bname);
    for (const auto* dname : {"unknot_kink_neg", "trefoil", "figure_eight", "hopf", "unknot_r2_pd"}) {
      const auto d = support::diagram(dname);
      for (const auto& f : enumerate_colorings(beta.biquandle(), d)) {
        const auto cube = bracket_cube(beta, d, f);
        const auto c = assemble(cube);
        EXPECT_TRUE(check_d_squared(c).ok()) << bname << " " << dname;
        EXPECT_TRUE(check_degree_preserving(c).ok()) << bname << " " << dname;
        EXPECT_TRUE(check_anticommuting_faces(cube).ok()) << bname << " " << dname;
        EXPECT_TRUE(check_h_membership(beta, c).ok()) << bname << " " << dname;
        EXPECT_TRUE(check_theorem(beta, d, f).equal) << bname << " " << dname;
        EXPECT_TRUE(check_euler_identity(beta, d, f).equal) << bname << " " << dname;
      }
    }
  }
}

TEST(BracketHomology, TrivialGroupRecoversBracketValue) {
  const auto beta = support::bracket("gf8_flip");
  const auto d = support::diagram("trefoil");
  for (const auto& f : enumerate_colorings(beta.biquandle(), d)) {
    const auto e = check_euler_identity(beta, d, f);
    EXPECT_EQ(e.g_sum, beta.ring().one());
    EXPECT_EQ(e.chi, bracket_value(beta, d, f));
  }
}

TEST(BracketHomology, NontrivialGroupMultipliesByGroupSum) {
  // |G| = 2 in Z/8: the group sum 1 + 5 = 6 scales the bracket value.
  const auto beta = support::bracket("z8_flip");
  const auto d = support::diagram("trefoil");
  for (const auto& f : enumerate_colorings(beta.biquandle(), d)) {
    const auto e = check_euler_identity(beta, d, f);
    EXPECT_EQ(e.g_sum, beta.ring().from_integer(6));
    EXPECT_EQ(e.chi, beta.ring().mul(e.g_sum, e.bracket_value));
  }
}

TEST(BracketHomology, RankIsOrderOfGroupTimesKhovanovRank) {
  for (const auto* bname : {"z8_flip", "z9_flip", "z5_trivial2"}) {
    const auto beta = support::bracket(bname);
    const auto order = grading_subgroup(beta)->order();
    const auto d = support::diagram("trefoil");
    std::uint64_t kh_rank = 0, bh_rank = 0;
    for (const auto& [key, e] : khovanov_classical(d).entries) kh_rank += e.rank;
    const auto f = enumerate_colorings(beta.biquandle(), d).front();
    for (const auto& [key, e] : bh_invariant(beta, d, f).entries) bh_rank += e.rank;
    EXPECT_EQ(bh_rank, kh_rank * order) << bname;
  }
}

// Whether bracket homology depends on the base point x0. The record is the
// test output: every bundled bracket gives identical tables for all x0.
TEST(BracketHomology, BasePointRecord) {
  for (const auto& bname : support::valid_bracket_names()) {
    const auto beta = support::bracket(bname);
    for (const auto* dname : {"trefoil", "hopf"}) {
      const auto d = support::diagram(dname);
      for (const auto& f : enumerate_colorings(beta.biquandle(), d)) {
        const auto base = bh_invariant(beta, d, f, 1);
        for (int x0 = 2; x0 <= beta.biquandle().size(); ++x0) {
          EXPECT_EQ(bh_invariant(beta, d, f, x0), base) << bname << " " << dname << " x0=" << x0;
        }
      }
    }
  }
}
