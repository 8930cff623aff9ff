#ifndef HGE_CONJUGATION_ORBIT_HPP
#define HGE_CONJUGATION_ORBIT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hge/perm_group.hpp"

namespace hge {

/// Canonical key of a subgroup: the sorted image arrays of all its elements,
/// concatenated. Two subgroups are equal iff their keys are equal.
std::string canonical_key(PermutationGroup const &group);

/// All conjugates t^-1 N t (t in S_g) of a regular subgroup N.
///
/// Members are kept in a flat buffer: for a regular group the element sending
/// point 1 to point j is unique, so member m is stored as g permutations
/// indexed by the image of point 1. That ordering coincides with the
/// lexicographic order of image arrays, so the stored bytes are exactly the
/// canonical key. Members are numbered in breadth-first discovery order.
class SubgroupConjugationOrbit
{
public:
  SubgroupConjugationOrbit() = default;

  int ambient_degree() const { return degree_; }
  PermutationGroup const &representative() const { return representative_; }
  std::size_t size() const { return count_; }

  /// Member `index` as a group generated by the conjugated representative
  /// generators.
  PermutationGroup member(std::size_t index) const;

  /// Generators of member `index`.
  std::vector<Permutation> member_generators(std::size_t index) const;

  /// Canonical key of member `index` (g*g bytes).
  std::string_view canonical_key(std::size_t index) const;

  /// Element of member `index` mapping point 1 to the 1-based `point`.
  Permutation element_at(std::size_t index, int point) const;

  /// Membership in member `index`; O(g) because the member is regular.
  bool member_contains(std::size_t index, Permutation const &p) const;

  /// True when every generator of `by`, acting by conjugation, maps every
  /// generator of member `index` back into that member.
  bool member_normalized_by(std::size_t index,
                            std::span<const Permutation> by) const;

  friend SubgroupConjugationOrbit conjugation_orbit(PermutationGroup const &n);

private:
  int degree_ = 0;
  PermutationGroup representative_;
  std::size_t count_ = 0;
  std::size_t gens_per_member_ = 0;
  std::vector<std::uint8_t> elements_;   // count * g * g
  std::vector<std::uint8_t> generators_; // count * gens_per_member * g

  std::uint8_t const *member_data(std::size_t index) const
  {
    return elements_.data() + index * degree_ * degree_;
  }
};

/// Conjugation orbit of a regular subgroup under S_g, computed by closing the
/// canonical key of N under conjugation by (1,2) and (1,2,...,g).
/// Throws std::invalid_argument unless N is regular of degree 2..11.
SubgroupConjugationOrbit conjugation_orbit(PermutationGroup const &n);

} // namespace hge

#endif // HGE_CONJUGATION_ORBIT_HPP
