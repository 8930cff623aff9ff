#include <algorithm>
#include <set>
#include <vector>

#include "gmock/gmock.h"

#include "hge/catalog.hpp"
#include "hge/perm_group.hpp"
#include "hge/small_group.hpp"
#include "hge/worked_example.hpp"

#include "support/oracles.hpp"

using namespace hge;

namespace {

Catalog const &catalog()
{
  static Catalog const c = default_catalog();
  return c;
}

SmallGroup group(int degree, int index)
{
  return SmallGroup(catalog().entry(degree, index).group());
}

oracle::ElementSet element_set(SmallGroup const &g)
{
  return {g.carrier().begin(), g.carrier().end()};
}

} // namespace

TEST(SmallGroupTest, CarrierIsAClosedSubgroup)
{
  auto g = group(8, 22);
  ASSERT_EQ(g.order(), 32u);
  EXPECT_TRUE(g.element(SmallGroup::identity_index()).is_identity());
  std::set<Permutation> elements(g.carrier().begin(), g.carrier().end());
  EXPECT_EQ(elements.size(), g.order()) << "no duplicates";
  for (SmallGroup::Index a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.element(g.inverse(a)), inverse(g.element(a)));
    for (SmallGroup::Index b = 0; b < g.order(); ++b)
      EXPECT_EQ(g.element(g.multiply(a, b)), compose(g.element(a), g.element(b)));
  }
  EXPECT_FALSE(g.index_of(parse_cycles("(1,2)", 8)).has_value());
  EXPECT_THROW(SmallGroup(4, {identity(4), parse_cycles("(1,2,3)", 4)}), std::invalid_argument)
      << "element list that is not closed";
}

TEST(SmallGroupTest, GeneratingSequenceSpansGroup)
{
  for (int degree = 2; degree <= 11; ++degree)
    for (auto const &rep : regular_representatives(catalog(), degree)) {
      SmallGroup g(rep.group());
      auto gens = g.generating_sequence();
      EXPECT_LE(gens.size(), 3u) << rep.name();
      EXPECT_EQ(g.span(gens).size(), g.order()) << rep.name();
    }
}

TEST(SmallGroupTest, SubgroupCountsOfSmallGroups)
{
  EXPECT_EQ(all_subgroups(group(6, 1)).size(), 4u) << "C6";
  EXPECT_EQ(all_subgroups(group(6, 2)).size(), 6u) << "S3";
  EXPECT_EQ(all_subgroups(group(8, 5)).size(), 6u) << "Q8";
  EXPECT_EQ(oracle::subsets_closed_under_product(group(6, 2).carrier()).size(), 6u);
  EXPECT_EQ(oracle::subsets_closed_under_product(group(8, 5).carrier()).size(), 6u);
}

TEST(SmallGroupTest, AllSubgroupsMatchesSubsetClosureOracle)
{
  int compared = 0;
  for (int degree = 2; degree <= 8; ++degree)
    for (auto const &e : catalog().entries(degree)) {
      if (e.claimed_order > 24)
        continue;
      SmallGroup g(e.group());
      auto subgroups = all_subgroups(g);
      std::set<oracle::ElementSet> ours;
      for (auto const &h : subgroups) {
        EXPECT_EQ(g.order() % h.order(), 0u) << e.name() << ": Lagrange";
        ours.insert(element_set(h));
      }
      EXPECT_EQ(ours.size(), subgroups.size()) << e.name() << ": duplicates";
      auto oracle_list = oracle::subsets_closed_under_product(g.carrier());
      std::set<oracle::ElementSet> expected(oracle_list.begin(), oracle_list.end());
      EXPECT_EQ(ours, expected) << e.name();
      ++compared;
    }
  EXPECT_GT(compared, 30);
}

TEST(SmallGroupTest, AutomorphismCounts)
{
  EXPECT_EQ(automorphisms(group(8, 1)).size(), 4u) << "C8";
  EXPECT_EQ(automorphisms(group(8, 3)).size(), 168u) << "C2^3";
  EXPECT_EQ(automorphisms(group(9, 2)).size(), 48u) << "C3xC3";
}

TEST(SmallGroupTest, AutomorphismCountsMatchBruteForce)
{
  for (int degree = 2; degree <= 9; ++degree)
    for (auto const &rep : regular_representatives(catalog(), degree)) {
      SmallGroup g(rep.group());
      auto expected = oracle::count_isomorphisms(element_set(g), element_set(g));
      EXPECT_EQ(static_cast<int>(automorphisms(g).size()), expected) << rep.name();
    }
}

TEST(SmallGroupTest, AutomorphismsAreClosedHomomorphisms)
{
  for (auto [degree, index] : {std::pair{8, 2}, {8, 4}, {8, 5}, {6, 2}, {9, 2}}) {
    auto g = group(degree, index);
    auto autos = automorphisms(g);
    std::set<std::vector<SmallGroup::Index>> maps;
    for (auto const &a : autos)
      maps.insert(a.map);
    EXPECT_EQ(maps.size(), autos.size());
    for (auto const &a : autos) {
      EXPECT_EQ(a(SmallGroup::identity_index()), SmallGroup::identity_index());
      for (SmallGroup::Index x = 0; x < g.order(); ++x) {
        EXPECT_EQ(g.order_of(a(x)), g.order_of(x));
        for (SmallGroup::Index y = 0; y < g.order(); ++y)
          ASSERT_EQ(a(g.multiply(x, y)), g.multiply(a(x), a(y)));
      }
    }
    for (auto const &a : autos)
      for (auto const &b : autos) {
        std::vector<SmallGroup::Index> composed(g.order());
        for (SmallGroup::Index x = 0; x < g.order(); ++x)
          composed[x] = a(b(x));
        EXPECT_TRUE(maps.count(composed)) << "closure under composition";
      }
  }
}

TEST(SmallGroupTest, AutomorphismCountIsHolomorphIndex)
{
  for (int degree = 2; degree <= 11; ++degree)
    for (auto const &rep : regular_representatives(catalog(), degree)) {
      SmallGroup n(rep.group());
      auto hol = holomorph(n);
      EXPECT_EQ(automorphisms(n).size() * n.order(), hol.order()) << rep.name();
      EXPECT_EQ(automorphism_realizers(n).size(), automorphisms(n).size()) << rep.name();
      for (auto const &r : automorphism_realizers(n))
        EXPECT_EQ(r(1), 1) << rep.name();
    }
}

TEST(SmallGroupTest, FindIsomorphism)
{
  EXPECT_FALSE(find_isomorphism(group(4, 1), group(4, 2)).has_value()) << "C4 vs C2xC2";
  auto self = find_isomorphism(group(8, 4), group(8, 4));
  ASSERT_TRUE(self.has_value());

  auto subgroups = worked_example_subgroups();
  SmallGroup n1(subgroups[0]);
  SmallGroup n2(subgroups[1]);
  auto iso = find_isomorphism(n1, n2);
  ASSERT_TRUE(iso.has_value());
  for (SmallGroup::Index x = 0; x < n1.order(); ++x)
    for (SmallGroup::Index y = 0; y < n1.order(); ++y)
      ASSERT_EQ((*iso)(n1.multiply(x, y)), n2.multiply((*iso)(x), (*iso)(y)));
}

TEST(SmallGroupTest, DistinctTypesAreNotIsomorphic)
{
  for (int degree = 2; degree <= 11; ++degree) {
    auto reps = regular_representatives(catalog(), degree);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = 0; b < reps.size(); ++b) {
        SmallGroup ga(reps[a].group());
        SmallGroup gb(reps[b].group());
        auto iso = find_isomorphism(ga, gb);
        EXPECT_EQ(iso.has_value(), a == b) << reps[a].name() << " vs " << reps[b].name();
        if (a != b && ga.order_profile() != gb.order_profile()) {
          EXPECT_FALSE(iso.has_value());
        }
      }
  }
}

TEST(SmallGroupTest, HolomorphOrders)
{
  EXPECT_EQ(holomorph(group(9, 1)).order(), 54u) << "C9";
  EXPECT_EQ(holomorph(group(8, 3)).order(), 1344u) << "C2^3";
  EXPECT_THROW(holomorph(group(4, 3)), std::invalid_argument) << "D4 on 4 points is not regular";
}

TEST(SmallGroupTest, HolomorphNormalizesAndOppositeCentralizes)
{
  for (int degree = 2; degree <= 11; ++degree)
    for (auto const &rep : regular_representatives(catalog(), degree)) {
      SmallGroup n(rep.group());
      auto n_group = rep.group();
      for (auto const &h : holomorph(n).generators())
        for (auto const &x : n_group.generators())
          EXPECT_TRUE(n_group.contains(conjugate(x, h))) << rep.name();
      auto opposite = opposite_regular(n);
      EXPECT_EQ(opposite.order(), n.order()) << rep.name();
      EXPECT_TRUE(is_regular(opposite)) << rep.name();
      for (auto const &r : opposite.generators())
        for (auto const &x : n.carrier())
          EXPECT_EQ(compose(r, x), compose(x, r)) << rep.name();
    }
}

TEST(SmallGroupTest, OppositeRegularIsTheCentralizer)
{
  for (int degree : {4, 6, 8}) {
    for (auto const &rep : regular_representatives(catalog(), degree)) {
      SmallGroup n(rep.group());
      auto expected = oracle::centralizer_in_symmetric(element_set(n), degree);
      SmallGroup opposite(opposite_regular(n));
      EXPECT_EQ(element_set(opposite), expected) << rep.name();
    }
  }
}

TEST(SmallGroupTest, OppositeRegularOfAbelianAndS3)
{
  auto c6 = group(6, 1);
  EXPECT_EQ(element_set(SmallGroup(opposite_regular(c6))), element_set(c6));
  auto s3 = group(6, 2);
  auto opposite = element_set(SmallGroup(opposite_regular(s3)));
  auto own = element_set(s3);
  std::vector<Permutation> common;
  std::set_intersection(own.begin(), own.end(), opposite.begin(), opposite.end(),
                        std::back_inserter(common));
  EXPECT_EQ(common.size(), 1u) << "trivial center of S3";
}
