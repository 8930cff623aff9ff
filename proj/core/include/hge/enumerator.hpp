#ifndef HGE_ENUMERATOR_HPP
#define HGE_ENUMERATOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hge/catalog.hpp"
#include "hge/conjugation_orbit.hpp"
#include "hge/perm_group.hpp"
#include "hge/small_group.hpp"

namespace hge {

/// Degrees the enumerator accepts.
inline constexpr int kMinEnumerationDegree = 2;
inline constexpr int kMaxEnumerationDegree = 11;

struct EnumerateOptions
{
  /// Skip transitive groups and (group, type) pairs whose order exceeds the
  /// relevant holomorph order; such pairs provably carry no structure.
  bool prune = true;
  /// Worker threads for the per-group work items (results are merged in a
  /// fixed order, so the output does not depend on this value).
  int parallel = 1;
  std::uint64_t element_cap = kDefaultElementCap;
};

/// One regular type N_i, taken from the catalog entry of index i.
struct TypeInfo
{
  int type_index = 0;
  std::string label;
  PermutationGroup representative;
  std::uint64_t holomorph_order = 0;
  std::size_t orbit_size = 0;
};

/// One Hopf Galois structure: a regular subgroup N normalized by G.
struct StructureRecord
{
  int id = 0;           // 1-based, in (k, type, orbit discovery) order
  int group_index = 0;  // k
  int type_index = 0;   // i
  std::size_t orbit_member = 0;
  PermutationGroup n;
  bool almost_classical = false;
  bool bijective = false;
  bool contained_in_g = false;
  int sub_g_stable_count = 0;
};

/// Counts for one (group, type) cell.
struct TypeSummary
{
  int group_index = 0;
  int type_index = 0;
  int t = 0;
  int ac = 0;
  int bc = 0;
  int gi = 0;
};

/// One G-isomorphism class within a (group, type) cell.
struct IsoClass
{
  int group_index = 0;
  int type_index = 0;
  std::vector<int> member_ids;
};

/// Per-group sums over all types.
struct GroupTotals
{
  int group_index = 0;
  int t = 0;
  int ac = 0;
  int bc = 0;
  int gi = 0;
};

/// The six degree-level aggregates.
struct DegreeTotals
{
  int total = 0;
  int ac = 0;
  int bc = 0;
  int bc_not_ac = 0;
  int gi = 0;
  int galois_gi = 0;  // classes belonging to groups of order g

  friend bool operator==(DegreeTotals const &, DegreeTotals const &) = default;
};

struct DegreeReport
{
  int degree = 0;
  int transitive_total = 0;
  std::uint64_t holomorph_bound = 0;
  int count_max = 0;
  int triv = 0;  // number of regular types
  bool pruned = true;
  std::vector<TypeInfo> types;
  std::vector<int> processed;  // group indices that were examined
  std::vector<StructureRecord> records;
  /// One row per (useful group, type), zero rows included.
  std::vector<TypeSummary> summaries;
  std::vector<IsoClass> classes;
  std::vector<GroupTotals> group_totals;
  DegreeTotals degree_totals;
  std::vector<int> useful;  // groups with at least one structure
  std::map<int, int> intermediate_field_counts;
  std::map<int, std::string> group_labels;

  TypeSummary const *summary(int group_index, int type_index) const;
  GroupTotals const *group(int group_index) const;
  /// Class sizes of one cell, sorted ascending.
  std::vector<int> partition(int group_index, int type_index) const;
};

/// The four-step algorithm for one degree. Throws std::out_of_range for a
/// degree outside 2..11 and std::invalid_argument when the catalog fails
/// basic verification at that degree.
DegreeReport enumerate(int degree, Catalog const &catalog,
                       EnumerateOptions const &options = {});

/// Step 1: orbit members N with x^-1 n x in N for all generators x of G and n
/// of N.
std::vector<std::size_t> normalized_member_indices(PermutationGroup const &g,
                                                   SubgroupConjugationOrbit const &orbit);
std::vector<PermutationGroup> normalized_candidates(PermutationGroup const &g,
                                                    SubgroupConjugationOrbit const &orbit);

/// The centralizer of N in S_g (its opposite regular representation) lies
/// in G.
bool is_almost_classical(PermutationGroup const &n, PermutationGroup const &g);

/// Every generator of N lies in G.
bool contained_in_g(PermutationGroup const &n, PermutationGroup const &g);

/// Step 2: number of subgroups of G containing the stabilizer of point 1,
/// counted as blocks of imprimitivity through point 1.
int count_intermediate_fields(PermutationGroup const &g,
                              std::uint64_t cap = kDefaultElementCap);

/// Step 3: number of subgroups of N normalized by G.
int count_g_stable_subgroups(PermutationGroup const &n, PermutationGroup const &g);

/// Step 4: whether some isomorphism N1 -> N2 commutes with conjugation by G.
bool are_g_isomorphic(PermutationGroup const &n1, PermutationGroup const &n2,
                      PermutationGroup const &g);

/// Partition of the records of one (group, type) cell into G-isomorphism
/// classes. Pairs with different sub_g_stable_count are never compared. Each
/// record is compared with the first member of every earlier class, in
/// record order, which is exact because G-isomorphism is an equivalence.
std::vector<IsoClass> partition_iso_classes(std::span<const StructureRecord> records,
                                            PermutationGroup const &g);

/// Result of the order-p^2 witness checks.
struct P2WitnessReport
{
  int p = 0;
  std::uint64_t cyclic_holomorph_order = 0;
  int subgroups_checked = 0;          // all subgroups of Hol(C_{p^2})
  int transitive_subgroups = 0;       // of which transitive
  int transitive_with_witness = 0;    // containing an element of order p^2
  std::uint64_t elementary_holomorph_order = 0;
  int elementary_max_element_order = 0;

  bool cyclic_ok() const { return transitive_with_witness == transitive_subgroups; }
  bool elementary_ok() const { return elementary_max_element_order != p * p; }
  bool ok() const { return cyclic_ok() && elementary_ok(); }
};

/// (a) every transitive subgroup of Hol(C_{p^2}) contains an element of order
/// p^2; (b) Hol(C_p x C_p) has no element of order p^2. p must be 3, or 5
/// when `allow_large` is set. Throws std::invalid_argument otherwise.
P2WitnessReport p2_witness_check(int p, bool allow_large = false);

/// Regular C_n on points 1..n, generated by (1,2,...,n).
PermutationGroup regular_cyclic(int n);

/// Regular C_p x C_p on the p^2 points a + p*b + 1.
PermutationGroup regular_elementary(int p);

} // namespace hge

#endif // HGE_ENUMERATOR_HPP
