#ifndef HGE_SMALL_GROUP_HPP
#define HGE_SMALL_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hge/perm_group.hpp"

namespace hge {

/// A finite group held as its full, sorted element list together with a
/// multiplication table. Indices refer to positions in carrier(); the
/// identity is always index 0. Cheap to copy (shared, immutable state).
class SmallGroup
{
public:
  using Index = std::uint32_t;

  explicit SmallGroup(PermutationGroup const &group,
                      std::uint64_t cap = kDefaultElementCap);

  /// From an explicit element list; throws std::invalid_argument unless the
  /// list is a duplicate-free subgroup.
  SmallGroup(int degree, std::vector<Permutation> elements);

  int degree() const;
  std::size_t order() const;
  std::vector<Permutation> const &carrier() const;
  Permutation const &element(Index i) const { return carrier()[i]; }
  static constexpr Index identity_index() { return 0; }

  /// Index of an element, or nullopt when it is not in the group.
  std::optional<Index> index_of(Permutation const &p) const;

  /// Index of compose(element(a), element(b)).
  Index multiply(Index a, Index b) const;
  Index inverse(Index a) const;
  int order_of(Index a) const;

  /// Greedy generating sequence: repeatedly add an element outside the span,
  /// preferring maximal element order, ties broken by carrier order.
  std::vector<Index> generating_sequence() const;

  /// Index set of the subgroup generated by `gens`.
  std::vector<Index> span(std::vector<Index> const &gens) const;

  PermutationGroup as_permutation_group() const;

  /// Sorted multiset of element orders.
  std::vector<int> order_profile() const;

private:
  struct State;
  std::shared_ptr<State const> state_;
};

/// Isomorphism between two small groups, stored as an index map.
struct GroupIsomorphism
{
  SmallGroup source;
  SmallGroup target;
  std::vector<SmallGroup::Index> map;

  Permutation const &operator()(Permutation const &x) const;
  SmallGroup::Index operator()(SmallGroup::Index i) const { return map[i]; }
};

/// Every subgroup, each once, ordered by (order, element indices). Seeds with
/// the cyclic subgroups and closes under joins to a fixed point.
std::vector<SmallGroup> all_subgroups(SmallGroup const &group);

/// Index sets of every subgroup, same order as all_subgroups.
std::vector<std::vector<SmallGroup::Index>> subgroup_index_sets(SmallGroup const &group);

/// Full automorphism group by backtracking on the images of the generating
/// sequence (images restricted to elements of equal order).
std::vector<GroupIsomorphism> automorphisms(SmallGroup const &n);

/// Some isomorphism, or nullopt. Candidates are tried in carrier order, so
/// the result is reproducible.
std::optional<GroupIsomorphism> find_isomorphism(SmallGroup const &a,
                                                 SmallGroup const &b);

/// Normalizer of a regular N in S_g, built as N together with the
/// permutations induced by Aut(N) through the identification of point i with
/// the element of N sending 1 to i. Throws std::invalid_argument if N is not
/// regular.
PermutationGroup holomorph(SmallGroup const &n);

/// Centralizer of a regular N in S_g: the right translations
/// i -> point of (n_i * m). Throws std::invalid_argument if N is not regular.
PermutationGroup opposite_regular(SmallGroup const &n);

/// Conjugators realizing Aut(N): the point-1 stabilizer of holomorph(N),
/// obtained directly from automorphisms(n).
std::vector<Permutation> automorphism_realizers(SmallGroup const &n);

} // namespace hge

#endif // HGE_SMALL_GROUP_HPP
