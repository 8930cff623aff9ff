#ifndef HGE_PERM_GROUP_HPP
#define HGE_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "hge/permutation.hpp"

namespace hge {

/// Largest group that elements() and friends will enumerate by default.
inline constexpr std::uint64_t kDefaultElementCap = 5000;

/// Thrown when an operation would enumerate more elements than allowed.
class ElementCapExceeded : public std::length_error
{
public:
  using std::length_error::length_error;
};

/// A permutation group given by generators.
///
/// The stabilizer chain (base 1, 2, ..., g) is built once at construction
/// with the deterministic Schreier-Sims algorithm; the sorted element list is
/// built on first request. Copies share that state, so copying is cheap and
/// concurrent const use is safe.
class PermutationGroup
{
public:
  /// Trivial group of the given degree.
  explicit PermutationGroup(int degree = 1);

  /// Throws std::invalid_argument when the generators disagree on degree.
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const;
  std::vector<Permutation> const &generators() const &;
  /// By value on temporaries, so `for (x : f().generators())` stays valid.
  std::vector<Permutation> generators() &&;

  std::uint64_t order() const;

  /// Membership by sifting through the stabilizer chain.
  bool contains(Permutation const &p) const;

  /// All elements, sorted lexicographically by image array (identity first).
  std::vector<Permutation> const &
  elements(std::uint64_t cap = kDefaultElementCap) const &;
  std::vector<Permutation> elements(std::uint64_t cap = kDefaultElementCap) &&;

  /// Basic orbit lengths along the base 1, 2, ..., g; their product is the order.
  std::vector<int> basic_orbit_sizes() const;

private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Orbit of a 1-based point.
std::set<int> orbit(PermutationGroup const &group, int point);

bool is_transitive(PermutationGroup const &group);

/// Transitive with order equal to the degree.
bool is_regular(PermutationGroup const &group);

/// Subgroup of elements fixing `point`; enumerates the group (cap applies).
PermutationGroup point_stabilizer(PermutationGroup const &group, int point,
                                  std::uint64_t cap = kDefaultElementCap);

/// Full symmetric group on `degree` points, generated by (1,2) and (1,...,g).
PermutationGroup symmetric_group(int degree);

/// True when t^-1 n t lies in `group` for every generator n and t of
/// `by`'s generators; sufficient for normalization.
bool is_normalized_by(PermutationGroup const &group, PermutationGroup const &by);

} // namespace hge

#endif // HGE_PERM_GROUP_HPP
