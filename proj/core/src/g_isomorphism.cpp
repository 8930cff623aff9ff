#include <stdexcept>

#include "hge/enumerator.hpp"

namespace hge {

namespace {

// Per-subgroup data reused across pairwise G-isomorphism tests.
struct IsoContext
{
  PermutationGroup group;
  SmallGroup small;
  std::vector<Permutation> realizers;          // Stab_1(Hol(N)) realizing Aut(N)
  std::vector<Permutation> realizer_inverses;

  explicit IsoContext(PermutationGroup const &n)
    : group(n), small(n), realizers(automorphism_realizers(small))
  {
    for (auto const &u : realizers)
      realizer_inverses.push_back(u.inverse());
  }
};

// Looks for u in Stab_1(Hol(N2)) such that n -> u h(n) u^-1 commutes with
// conjugation by every generator of G, tested on the generators of N1.
bool g_isomorphic(IsoContext const &a, IsoContext const &b, PermutationGroup const &g)
{
  auto h = find_isomorphism(a.small, b.small);
  if (!h)
    return false;

  struct Pair
  {
    Permutation image_of_conjugate;  // h(x^-1 n x)
    Permutation image;               // h(n)
    Permutation const *x;
  };
  std::vector<Pair> pairs;
  for (auto const &n : a.group.generators())
    for (auto const &x : g.generators())
      pairs.push_back({(*h)(conjugate(n, x)), (*h)(n), &x});

  for (std::size_t u = 0; u < b.realizers.size(); ++u) {
    auto const &uu = b.realizers[u];
    auto const &ui = b.realizer_inverses[u];
    bool all = true;
    for (auto const &p : pairs) {
      auto lhs = compose(uu, compose(p.image_of_conjugate, ui));
      auto rhs = conjugate(compose(uu, compose(p.image, ui)), *p.x);
      if (lhs != rhs) {
        all = false;
        break;
      }
    }
    if (all)
      return true;
  }
  return false;
}

} // namespace

bool are_g_isomorphic(PermutationGroup const &n1, PermutationGroup const &n2,
                      PermutationGroup const &g)
{
  if (n1.degree() != n2.degree() || n1.degree() != g.degree())
    throw std::invalid_argument("are_g_isomorphic: degree mismatch");
  return g_isomorphic(IsoContext(n1), IsoContext(n2), g);
}

std::vector<IsoClass> partition_iso_classes(std::span<const StructureRecord> records,
                                            PermutationGroup const &g)
{
  std::vector<IsoClass> classes;
  if (records.empty())
    return classes;
  int const k = records.front().group_index;
  int const i = records.front().type_index;
  for (auto const &r : records)
    if (r.group_index != k || r.type_index != i)
      throw std::invalid_argument("partition_iso_classes: records span several cells");

  std::vector<IsoContext> contexts;
  contexts.reserve(records.size());
  for (auto const &r : records)
    contexts.emplace_back(r.n);

  std::vector<std::size_t> representative;  // record position of each class's first member
  for (std::size_t r = 0; r < records.size(); ++r) {
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      auto const rep = representative[c];
      if (records[rep].sub_g_stable_count != records[r].sub_g_stable_count)
        continue;
      if (g_isomorphic(contexts[rep], contexts[r], g)) {
        classes[c].member_ids.push_back(records[r].id);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({k, i, {records[r].id}});
      representative.push_back(r);
    }
  }
  return classes;
}

} // namespace hge
