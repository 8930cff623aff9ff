#ifndef HGE_TESTS_ORACLES_HPP
#define HGE_TESTS_ORACLES_HPP

// Brute-force reference implementations. They share nothing with the library
// beyond the Permutation type and are only fast enough for small inputs.

#include <cstdint>
#include <set>
#include <vector>

#include "hge/permutation.hpp"

namespace hge::oracle {

using ElementSet = std::set<Permutation>;

/// Every product of the generators, by breadth-first closure.
ElementSet closure(int degree, std::vector<Permutation> const &generators);

/// All permutations of `degree` points.
std::vector<Permutation> all_permutations(int degree);

/// Every subgroup of the group with the given elements, found by a
/// backtracking search over subsets that are closed under multiplication.
std::vector<ElementSet> subsets_closed_under_product(std::vector<Permutation> const &elements);

/// Number of bijections elements(a) -> elements(b) preserving products.
int count_isomorphisms(ElementSet const &a, ElementSet const &b);

/// Elements of S_g that map `n` onto itself by conjugation.
std::uint64_t normalizer_order_in_symmetric(ElementSet const &n, int degree);

/// True when x^-1 N x = N for every x in `g`.
bool normalized_by_all(ElementSet const &n, ElementSet const &g);

/// All regular subgroups of S_g generated by at most two elements (enough for
/// every group of order 4 or 6).
std::set<ElementSet> regular_subgroups_two_generated(int degree);

/// Subgroups of G containing the stabilizer of point 1, grown one element at a
/// time from the stabilizer.
int count_overgroups_of_stabilizer(ElementSet const &g);

/// Whether some bijective homomorphism phi: N1 -> N2 satisfies
/// phi(x^-1 n x) = x^-1 phi(n) x for all x in G, n in N1; exhaustive.
bool g_isomorphic_exhaustive(ElementSet const &n1, ElementSet const &n2, ElementSet const &g);

/// Number of subgroups of N invariant under conjugation by all of G.
int count_invariant_subgroups(ElementSet const &n, ElementSet const &g);

/// Centralizer of N in S_g by scanning all of S_g.
ElementSet centralizer_in_symmetric(ElementSet const &n, int degree);

} // namespace hge::oracle

#endif // HGE_TESTS_ORACLES_HPP
