#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "gmock/gmock.h"

#include "hge/catalog.hpp"
#include "hge/conjugation_orbit.hpp"
#include "hge/enumerator.hpp"
#include "hge/render.hpp"
#include "hge/small_group.hpp"
#include "hge/worked_example.hpp"

#include "support/oracles.hpp"

using namespace hge;
using testing::ElementsAre;

namespace {

Catalog const &catalog()
{
  static Catalog const c = default_catalog();
  return c;
}

DegreeReport const &report(int degree)
{
  static std::map<int, DegreeReport> cache;
  auto it = cache.find(degree);
  if (it == cache.end())
    it = cache.emplace(degree, enumerate(degree, catalog())).first;
  return it->second;
}

PermutationGroup group(int degree, int index)
{
  return catalog().entry(degree, index).group();
}

std::vector<PermutationGroup> candidates(int degree, int k, int type)
{
  auto orbit = conjugation_orbit(group(degree, type));
  return normalized_candidates(group(degree, k), orbit);
}

std::vector<StructureRecord> cell(DegreeReport const &r, int k, int type)
{
  std::vector<StructureRecord> out;
  for (auto const &rec : r.records)
    if (rec.group_index == k && rec.type_index == type)
      out.push_back(rec);
  return out;
}

oracle::ElementSet elements_of(PermutationGroup const &g)
{
  return oracle::closure(g.degree(), g.generators());
}

} // namespace

TEST(EnumeratorTest, NormalizedCandidateCounts)
{
  EXPECT_EQ(candidates(4, 1, 1).size(), 1u) << "4T1, type C4";
  EXPECT_EQ(candidates(6, 2, 1).size(), 3u) << "6T2, type C6";
  EXPECT_EQ(candidates(8, 3, 4).size(), 42u) << "8T3, type D4";
  EXPECT_THROW(normalized_candidates(group(6, 2), conjugation_orbit(group(4, 1))),
               std::invalid_argument);
}

TEST(EnumeratorTest, CandidatesAreRegularAndNormalized)
{
  for (int k = 1; k <= 10; ++k) {
    auto g = group(8, k);
    for (int type = 1; type <= 5; ++type)
      for (auto const &n : candidates(8, k, type)) {
        EXPECT_TRUE(is_regular(n));
        EXPECT_TRUE(is_normalized_by(n, g)) << "8T" << k << " type " << type;
      }
  }
}

TEST(EnumeratorTest, AlmostClassical)
{
  auto c4 = candidates(4, 1, 1);
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_TRUE(is_almost_classical(c4[0], group(4, 1)));

  auto on_v4 = candidates(4, 2, 1);
  ASSERT_EQ(on_v4.size(), 3u);
  for (auto const &n : on_v4)
    EXPECT_FALSE(is_almost_classical(n, group(4, 2)));

  auto g22 = group(8, 22);
  int structures = 0;
  for (int type = 1; type <= 5; ++type)
    for (auto const &n : candidates(8, 22, type)) {
      EXPECT_TRUE(is_almost_classical(n, g22)) << "type " << type;
      ++structures;
    }
  EXPECT_EQ(structures, 16);
}

TEST(EnumeratorTest, AlmostClassicalMeansCentralizerInsideG)
{
  for (int degree : {4, 6}) {
    for (auto const &rec : report(degree).records) {
      auto g = elements_of(group(degree, rec.group_index));
      auto centralizer = oracle::centralizer_in_symmetric(elements_of(rec.n), degree);
      bool inside = std::includes(g.begin(), g.end(), centralizer.begin(), centralizer.end());
      EXPECT_EQ(rec.almost_classical, inside) << "record " << rec.id;
    }
  }
}

TEST(EnumeratorTest, ContainedInG)
{
  auto a4 = group(4, 4);
  auto v4 = candidates(4, 4, 2);
  ASSERT_EQ(v4.size(), 1u);
  EXPECT_TRUE(contained_in_g(v4[0], a4));
  auto c4 = group(4, 1);
  EXPECT_TRUE(contained_in_g(c4, c4));
  auto on_v4 = candidates(4, 2, 1);
  EXPECT_FALSE(contained_in_g(on_v4[0], group(4, 2)));
}

TEST(EnumeratorTest, IntermediateFieldCounts)
{
  EXPECT_EQ(count_intermediate_fields(group(4, 1)), 3);
  EXPECT_EQ(count_intermediate_fields(group(6, 2)), 6);
  EXPECT_EQ(count_intermediate_fields(group(9, 1)), 3);
  EXPECT_EQ(count_intermediate_fields(group(4, 2)), 5);
  EXPECT_THROW(count_intermediate_fields(PermutationGroup(4, {parse_cycles("(1,2)", 4)})),
               std::invalid_argument);
}

TEST(EnumeratorTest, IntermediateFieldsMatchOvergroupOracle)
{
  int compared = 0;
  for (int degree = 2; degree <= 10; ++degree)
    for (auto const &e : catalog().entries(degree)) {
      if (e.claimed_order > 200)
        continue;
      auto g = e.group();
      EXPECT_EQ(count_intermediate_fields(g), oracle::count_overgroups_of_stabilizer(elements_of(g)))
          << e.name();
      ++compared;
    }
  EXPECT_GT(compared, 80);
}

TEST(EnumeratorTest, GStableSubgroups)
{
  auto c4 = group(4, 1);
  EXPECT_EQ(count_g_stable_subgroups(c4, c4), 3);

  auto v4 = group(4, 2);
  for (auto const &n : candidates(4, 2, 1))
    EXPECT_NE(count_g_stable_subgroups(n, v4), count_intermediate_fields(v4));

  auto q8 = group(8, 5);
  auto cands = candidates(8, 5, 2);
  ASSERT_EQ(cands.size(), 6u);
  for (auto const &n : cands)
    EXPECT_EQ(count_g_stable_subgroups(n, q8), count_intermediate_fields(q8));

  EXPECT_THROW(count_g_stable_subgroups(group(4, 1), group(4, 5)), std::invalid_argument)
      << "C4 is not normal in S4";
}

TEST(EnumeratorTest, GStableCountsMatchBruteForce)
{
  for (int degree : {4, 6, 8}) {
    for (auto const &rec : report(degree).records) {
      auto g = elements_of(group(degree, rec.group_index));
      EXPECT_EQ(rec.sub_g_stable_count, oracle::count_invariant_subgroups(elements_of(rec.n), g))
          << degree << "T" << rec.group_index << " record " << rec.id;
    }
  }
}

TEST(EnumeratorTest, GIsomorphism)
{
  auto g = group(6, 2);
  auto cyclic = candidates(6, 2, 1);
  ASSERT_EQ(cyclic.size(), 3u);
  for (auto const &a : cyclic)
    for (auto const &b : cyclic)
      EXPECT_TRUE(are_g_isomorphic(a, b, g));

  auto subgroups = worked_example_subgroups();
  auto g83 = group(8, 3);
  EXPECT_TRUE(are_g_isomorphic(subgroups[0], subgroups[0], g83));
  EXPECT_TRUE(are_g_isomorphic(subgroups[0], subgroups[1], g83));

  auto c4 = group(4, 1);
  EXPECT_FALSE(are_g_isomorphic(c4, group(4, 2), group(4, 2))) << "non-isomorphic groups";
}

TEST(EnumeratorTest, GIsomorphismMatchesExhaustiveSearch)
{
  for (int degree : {4, 6}) {
    auto const &r = report(degree);
    for (int k : r.useful) {
      auto g = elements_of(group(degree, k));
      for (auto const &t : r.types) {
        auto records = cell(r, k, t.type_index);
        for (auto const &a : records)
          for (auto const &b : records) {
            bool const expected = oracle::g_isomorphic_exhaustive(elements_of(a.n), elements_of(b.n), g);
            EXPECT_EQ(are_g_isomorphic(a.n, b.n, group(degree, k)), expected)
                << degree << "T" << k << " records " << a.id << ", " << b.id;
          }
      }
    }
  }
}

TEST(EnumeratorTest, GIsomorphismIsAnEquivalenceOnDegreeSixCells)
{
  auto const &r = report(6);
  for (int k : r.useful) {
    auto g = group(6, k);
    for (auto const &t : r.types) {
      auto records = cell(r, k, t.type_index);
      std::size_t const n = records.size();
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          rel[a][b] = are_g_isomorphic(records[a].n, records[b].n, g);
      for (std::size_t a = 0; a < n; ++a) {
        EXPECT_TRUE(rel[a][a]);
        for (std::size_t b = 0; b < n; ++b) {
          EXPECT_EQ(rel[a][b], rel[b][a]) << "symmetry in 6T" << k;
          for (std::size_t c = 0; c < n; ++c)
            if (rel[a][b] && rel[b][c]) {
              EXPECT_TRUE(rel[a][c]) << "transitivity in 6T" << k;
            }
        }
      }
    }
  }
}

TEST(EnumeratorTest, PartitionsOfDegreeEightCells)
{
  auto const &r = report(8);
  EXPECT_THAT(r.partition(3, 4), ElementsAre(6, 6, 6, 6, 6, 6, 6));
  EXPECT_THAT(r.partition(2, 2), ElementsAre(1, 1, 1, 1, 1, 2, 3));

  auto records = cell(r, 3, 4);
  auto classes = partition_iso_classes(records, group(8, 3));
  EXPECT_EQ(classes.size(), 7u);
  auto single = cell(report(4), 1, 1);
  ASSERT_EQ(single.size(), 1u);
  auto one = partition_iso_classes(single, group(4, 1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].member_ids.size(), 1u);
}

TEST(EnumeratorTest, PartitionSanity)
{
  for (int degree : {4, 6, 8, 9, 10}) {
    auto const &r = report(degree);
    std::map<int, StructureRecord const *> by_id;
    for (auto const &rec : r.records)
      by_id[rec.id] = &rec;
    for (auto const &s : r.summaries) {
      int total = 0;
      int classes = 0;
      for (auto const &c : r.classes) {
        if (c.group_index != s.group_index || c.type_index != s.type_index)
          continue;
        ++classes;
        total += static_cast<int>(c.member_ids.size());
        for (int id : c.member_ids) {
          auto const *rec = by_id.at(id);
          EXPECT_EQ(rec->group_index, c.group_index);
          EXPECT_EQ(rec->type_index, c.type_index);
          EXPECT_EQ(rec->sub_g_stable_count, by_id.at(c.member_ids.front())->sub_g_stable_count);
        }
      }
      EXPECT_EQ(total, s.t) << degree << "T" << s.group_index << " type " << s.type_index;
      EXPECT_EQ(classes, s.gi);
    }
  }
}

TEST(EnumeratorTest, PartitionRejectsMixedCells)
{
  auto const &r = report(4);
  std::vector<StructureRecord> mixed{r.records.front(), r.records.back()};
  ASSERT_NE(mixed[0].group_index, mixed[1].group_index);
  EXPECT_THROW(partition_iso_classes(mixed, group(4, mixed[0].group_index)),
               std::invalid_argument);
}

TEST(EnumeratorTest, StepOneMatchesRegularSubgroupScan)
{
  for (int degree : {4, 6}) {
    auto regular = oracle::regular_subgroups_two_generated(degree);
    auto const &r = report(degree);
    std::size_t orbit_total = 0;
    for (auto const &t : r.types)
      orbit_total += t.orbit_size;
    EXPECT_EQ(regular.size(), orbit_total) << "all regular subgroups of S" << degree;

    for (auto const &e : catalog().entries(degree)) {
      auto g = elements_of(e.group());
      std::set<oracle::ElementSet> expected;
      for (auto const &n : regular)
        if (oracle::normalized_by_all(n, g))
          expected.insert(n);
      std::set<oracle::ElementSet> found;
      for (auto const &rec : r.records)
        if (rec.group_index == e.index)
          found.insert(elements_of(rec.n));
      EXPECT_EQ(found, expected) << e.name();
    }
  }
}

TEST(EnumeratorTest, DegreeTotals)
{
  EXPECT_EQ(report(4).degree_totals, (DegreeTotals{10, 6, 7, 1, 10, 6}));
  EXPECT_EQ(report(9).degree_totals, (DegreeTotals{38, 26, 28, 2, 33, 8}));
  auto const *s = report(8).summary(3, 3);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->t, 8);
  EXPECT_EQ(s->ac, 1);
  EXPECT_EQ(s->bc, 1);
  EXPECT_EQ(s->gi, 8);
}

TEST(EnumeratorTest, TotalsAreSumsOfCells)
{
  for (int degree = 2; degree <= 10; ++degree) {
    auto const &r = report(degree);
    DegreeTotals sum;
    for (auto const &s : r.summaries) {
      sum.total += s.t;
      sum.ac += s.ac;
      sum.bc += s.bc;
      sum.gi += s.gi;
    }
    sum.bc_not_ac = sum.bc - sum.ac;
    sum.galois_gi = r.degree_totals.galois_gi;
    EXPECT_EQ(sum, r.degree_totals) << "degree " << degree;
    EXPECT_EQ(r.records.size(), static_cast<std::size_t>(r.degree_totals.total));
    for (std::size_t i = 0; i < r.records.size(); ++i)
      EXPECT_EQ(r.records[i].id, static_cast<int>(i) + 1) << "ids are consecutive";
  }
}

TEST(EnumeratorTest, AlmostClassicalImpliesBijective)
{
  for (int degree = 2; degree <= 11; ++degree)
    for (auto const &rec : report(degree).records)
      if (rec.almost_classical) {
        EXPECT_TRUE(rec.bijective) << degree << "T" << rec.group_index << " record " << rec.id;
      }
}

TEST(EnumeratorTest, GaloisCaseContainsClassicalStructure)
{
  for (int degree = 2; degree <= 10; ++degree) {
    auto const &r = report(degree);
    for (auto const &t : r.types) {
      int const k = t.type_index;
      EXPECT_TRUE(std::find(r.useful.begin(), r.useful.end(), k) != r.useful.end());
      auto g = group(degree, k);
      auto opposite = elements_of(opposite_regular(SmallGroup(g)));
      auto own = elements_of(g);
      bool found_opposite = false;
      bool found_self = false;
      for (auto const &rec : cell(r, k, k)) {
        auto n = elements_of(rec.n);
        found_opposite = found_opposite || n == opposite;
        found_self = found_self || n == own;
      }
      EXPECT_TRUE(found_opposite) << degree << "T" << k;
      if (opposite == own) {
        EXPECT_TRUE(found_self) << degree << "T" << k << " is abelian";
      }
    }
  }
}

TEST(EnumeratorTest, PruningDoesNotChangeResults)
{
  for (int degree = 2; degree <= 6; ++degree) {
    EnumerateOptions all;
    all.prune = false;
    auto full = enumerate(degree, catalog(), all);
    auto const &pruned = report(degree);
    EXPECT_EQ(full.processed.size(), catalog().entries(degree).size());
    EXPECT_EQ(full.useful, pruned.useful);
    EXPECT_EQ(full.degree_totals, pruned.degree_totals);
    ASSERT_EQ(full.records.size(), pruned.records.size());
    for (std::size_t i = 0; i < full.records.size(); ++i) {
      EXPECT_EQ(full.records[i].group_index, pruned.records[i].group_index);
      EXPECT_EQ(full.records[i].type_index, pruned.records[i].type_index);
      EXPECT_EQ(full.records[i].orbit_member, pruned.records[i].orbit_member);
      EXPECT_EQ(full.records[i].almost_classical, pruned.records[i].almost_classical);
      EXPECT_EQ(full.records[i].bijective, pruned.records[i].bijective);
    }
    ASSERT_EQ(full.summaries.size(), pruned.summaries.size());
    for (std::size_t i = 0; i < full.summaries.size(); ++i) {
      EXPECT_EQ(full.summaries[i].t, pruned.summaries[i].t);
      EXPECT_EQ(full.summaries[i].gi, pruned.summaries[i].gi);
    }
  }
}

TEST(EnumeratorTest, DegreeNineHasOneTypePerGroup)
{
  auto const &r = report(9);
  for (int k : r.useful) {
    int nonzero = 0;
    for (auto const &t : r.types)
      if (auto const *s = r.summary(k, t.type_index); s && s->t > 0)
        ++nonzero;
    EXPECT_EQ(nonzero, 1) << "9T" << k;
  }
}

TEST(EnumeratorTest, PrimeSquareWitnesses)
{
  auto p3 = p2_witness_check(3, false);
  EXPECT_TRUE(p3.ok()) << p3.transitive_with_witness << "/" << p3.transitive_subgroups;
  EXPECT_EQ(p3.transitive_subgroups, 6);
  EXPECT_EQ(p3.cyclic_holomorph_order, 54u);
  EXPECT_EQ(p3.elementary_max_element_order, 8);
  EXPECT_THROW(p2_witness_check(5, false), std::invalid_argument) << "opt-in for p = 5";
  EXPECT_THROW(p2_witness_check(7, true), std::invalid_argument);
}

TEST(EnumeratorTest, RegularModels)
{
  EXPECT_TRUE(is_regular(regular_cyclic(9)));
  EXPECT_EQ(regular_cyclic(9).order(), 9u);
  auto e = regular_elementary(3);
  EXPECT_TRUE(is_regular(e));
  EXPECT_EQ(e.order(), 9u);
  EXPECT_EQ(SmallGroup(e).order_profile(), (std::vector<int>{1, 3, 3, 3, 3, 3, 3, 3, 3}));
}

TEST(EnumeratorTest, ParallelRunsAreIdentical)
{
  EnumerateOptions parallel;
  parallel.parallel = 4;
  for (int degree : {6, 8, 10})
    EXPECT_EQ(render(enumerate(degree, catalog(), parallel), Format::json),
              render(report(degree), Format::json))
        << "degree " << degree;
}

TEST(EnumeratorTest, RejectsUnsupportedDegrees)
{
  EXPECT_THROW(enumerate(12, catalog()), std::out_of_range);
  EXPECT_THROW(enumerate(1, catalog()), std::out_of_range);
  auto partial = load_catalog_text("4 1 4 (1,2,3,4)\n");
  EXPECT_THROW(enumerate(4, partial), std::invalid_argument) << "incomplete catalog";
}

TEST(EnumeratorTest, WorkedExample)
{
  auto result = check_worked_example(catalog());
  EXPECT_TRUE(result.ok()) << result.to_string();
  EXPECT_EQ(result.regular, 6);
  EXPECT_EQ(result.dihedral, 6);
  EXPECT_EQ(result.normalized, 6);
  EXPECT_EQ(result.g_isomorphic_pairs, 15);
  EXPECT_EQ(result.dihedral_structures, 42);
  EXPECT_EQ(result.listed_found, 6);
  EXPECT_THAT(result.class_sizes, ElementsAre(6, 6, 6, 6, 6, 6, 6));
}
