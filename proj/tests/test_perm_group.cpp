#include <gtest/gtest.h>

#include <cstdlib>

#include "altcoh/perm_group.hpp"
#include "oracles.hpp"

using namespace altcoh;

TEST(PermGroup, StandardOrders) {
  EXPECT_EQ(symmetric_group(1).order(), 1u);
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  EXPECT_EQ(alternating_group(5).order(), 60u);
  EXPECT_EQ(alternating_group(9).order(), 181440u);
  EXPECT_EQ(symmetric_group(12).order(), 479001600u);
}

TEST(PermGroup, OrderAgreesWithClosureOracle) {
  const std::vector<std::vector<Perm>> cases{
      {Perm::from_cycles(6, {{0, 1, 2}}), Perm::from_cycles(6, {{3, 4, 5}})},
      {Perm::from_cycles(6, {{0, 1}, {2, 3}}), Perm::from_cycles(6, {{1, 2, 4, 5}})},
      {Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}}), Perm::from_cycles(8, {{1, 7}, {2, 6}, {3, 5}})},
      {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), Perm::from_cycles(7, {{1, 2, 4}, {3, 6, 5}})},
  };
  for (const auto& gens : cases) {
    const PermGroup G(gens.front().degree(), gens);
    const auto els = oracle::closure(G.degree(), gens);
    EXPECT_EQ(G.order(), els.size());
    EXPECT_EQ(G.elements(), els);
    for (const auto& g : els) EXPECT_TRUE(G.contains(g));
  }
}

TEST(PermGroup, ContainsRejectsOutsiders) {
  const PermGroup A = alternating_group(6);
  EXPECT_FALSE(A.contains(Perm::from_cycles(6, {{0, 1}})));
  EXPECT_TRUE(A.contains(Perm::from_cycles(6, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(A.contains(Perm(5)));
}

TEST(PermGroup, ElementsSortedAndCapped) {
  const PermGroup S = symmetric_group(4);
  EXPECT_TRUE(std::is_sorted(S.elements().begin(), S.elements().end()));
  const PermGroup small = symmetric_group(5, 100);
  EXPECT_FALSE(small.enumerable());
  EXPECT_THROW(small.elements(), ResourceLimit);
}

TEST(PermGroup, EnvironmentCapOverride) {
  ::setenv("ALTCOH_ENUMERATION_CAP", "1000", 1);
  EXPECT_EQ(enumeration_cap_from_env(), 1000u);
  ::setenv("ALTCOH_ENUMERATION_CAP", "junk", 1);
  EXPECT_THROW(enumeration_cap_from_env(), std::invalid_argument);
  ::unsetenv("ALTCOH_ENUMERATION_CAP");
  EXPECT_EQ(enumeration_cap_from_env(), kDefaultEnumerationCap);
}

TEST(PermGroup, FromElementsRoundTrip) {
  const auto els = alternating_group(5).elements();
  const PermGroup G = PermGroup::from_elements(5, els);
  EXPECT_EQ(G.order(), 60u);
  EXPECT_LE(G.generators().size(), 3u);
  std::vector<Perm> not_group{Perm(3), Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{1, 2}})};
  EXPECT_THROW(PermGroup::from_elements(3, not_group), std::logic_error);
}

TEST(PermGroup, Orbits) {
  const auto o = orbits(7, {Perm::from_cycles(7, {{0, 3}}), Perm::from_cycles(7, {{3, 5}, {1, 2}})});
  ASSERT_EQ(o.size(), 4u);
  EXPECT_EQ(o[0], (std::vector<Point>{0, 3, 5}));
  EXPECT_EQ(o[1], (std::vector<Point>{1, 2}));
  EXPECT_EQ(o[2], (std::vector<Point>{4}));
}

TEST(Centralizer, MatchesBruteForceInS5) {
  const PermGroup S = symmetric_group(5);
  const auto& els = S.elements();
  for (const auto& x : els) {
    const auto want = oracle::centralizer_size(els, x);
    EXPECT_EQ(centralizer(S, x, SearchMode::kExhaustive).order(), want);
    EXPECT_EQ(centralizer(S, x, SearchMode::kBacktrack).order(), want);
  }
}

TEST(Centralizer, ExamplesAndErrors) {
  const PermGroup A = alternating_group(9);
  const Perm c = Perm::from_cycles(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  // C_{S_9}(c) = C_3 wr S_3 of order 162; half of it is even
  EXPECT_EQ(centralizer(symmetric_group(9), c).order(), 162u);
  EXPECT_EQ(centralizer(A, c).order(), 81u);
  EXPECT_THROW(centralizer(A, Perm::from_cycles(9, {{0, 1}})), std::invalid_argument);
  EXPECT_EQ(centralizer(A, Perm(9)).order(), A.order());
}

TEST(Centralizer, BacktrackBeyondCap) {
  const PermGroup S = symmetric_group(12, 1000);
  const Perm c = Perm::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  EXPECT_EQ(centralizer(S, c).order(), 12u);
  EXPECT_THROW(centralizer(S, c, SearchMode::kExhaustive), ResourceLimit);
}

TEST(Normalizer, Examples) {
  const PermGroup S4 = symmetric_group(4);
  const PermGroup V(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(normalizer(S4, V).order(), 24u);
  const PermGroup C3(4, {Perm::from_cycles(4, {{0, 1, 2}})});
  EXPECT_EQ(normalizer(S4, C3).order(), 6u);
  const PermGroup S5 = symmetric_group(5);
  const PermGroup C5(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  EXPECT_EQ(normalizer(S5, C5, SearchMode::kBacktrack).order(), 20u);
  EXPECT_EQ(normalizer(S5, C5, SearchMode::kExhaustive).order(), 20u);
  EXPECT_THROW(normalizer(alternating_group(4), PermGroup(4, {Perm::from_cycles(4, {{0, 1}})})),
               std::invalid_argument);
}

TEST(Normalizer, MatchesBruteForceOnSubgroupsOfS4) {
  const PermGroup S4 = symmetric_group(4);
  const auto& els = S4.elements();
  for (const auto& a : els)
    for (const auto& b : els) {
      const PermGroup H(4, {a, b});
      const auto hel = H.elements();
      std::size_t want = 0;
      for (const auto& g : els) {
        std::vector<Perm> c;
        for (const auto& h : hel) c.push_back(conjugate(g, h));
        std::sort(c.begin(), c.end());
        if (c == hel) ++want;
      }
      EXPECT_EQ(normalizer(S4, H, SearchMode::kBacktrack).order(), want);
    }
}

TEST(Conjugacy, AgreesWithClassOracleInA5) {
  const PermGroup A = alternating_group(5);
  const auto& els = A.elements();
  const auto ids = oracle::conjugacy_class_ids(els);
  EXPECT_EQ(*std::max_element(ids.begin(), ids.end()) + 1, 5);  // A_5 has 5 classes
  for (std::size_t i = 0; i < els.size(); i += 7)
    for (std::size_t j = 0; j < els.size(); ++j) {
      EXPECT_EQ(are_conjugate(A, els[i], els[j]), ids[i] == ids[j]);
      if (ids[i] == ids[j]) {
        const auto g = element_conjugator(A, els[i], els[j]);
        ASSERT_TRUE(g.has_value());
        EXPECT_EQ(conjugate(*g, els[i]), els[j]);
      }
    }
}

TEST(Conjugacy, SubgroupConjugator) {
  const PermGroup S6 = symmetric_group(6);
  const PermGroup H(6, {Perm::from_cycles(6, {{0, 1, 2}})});
  const PermGroup K(6, {Perm::from_cycles(6, {{3, 5, 4}})});
  const PermGroup L(6, {Perm::from_cycles(6, {{0, 1, 2}, {3, 4, 5}})});
  const auto g = subgroup_conjugator(S6, H, K);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(K.contains(conjugate(*g, H.generators()[0])));
  EXPECT_FALSE(subgroup_conjugator(S6, H, L).has_value());
}
