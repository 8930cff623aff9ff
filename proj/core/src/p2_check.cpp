#include <algorithm>
#include <stdexcept>

#include "hge/enumerator.hpp"

namespace hge {

PermutationGroup regular_cyclic(int n)
{
  return PermutationGroup(n, {long_cycle(n)});
}

PermutationGroup regular_elementary(int p)
{
  int const n = p * p;
  std::vector<int> shift_a(n), shift_b(n);
  for (int b = 0; b < p; ++b)
    for (int a = 0; a < p; ++a) {
      int const point = a + p * b;
      shift_a[point] = (a + 1) % p + p * b + 1;
      shift_b[point] = a + p * ((b + 1) % p) + 1;
    }
  return PermutationGroup(n, {Permutation::from_images(shift_a),
                              Permutation::from_images(shift_b)});
}

P2WitnessReport p2_witness_check(int p, bool allow_large)
{
  if (p != 3 && !(p == 5 && allow_large))
    throw std::invalid_argument("p2_witness_check supports p = 3, and p = 5 when enabled");
  int const n = p * p;
  // Hol(C_p x C_p) has order p^2 (p^2 - 1)(p^2 - p): 432 for p = 3, 12000 for p = 5
  std::uint64_t const cap = std::max<std::uint64_t>(kDefaultElementCap, 20000);

  P2WitnessReport report;
  report.p = p;

  // (a) transitive subgroups of Hol(C_{p^2})
  SmallGroup const hol_cyclic(holomorph(SmallGroup(regular_cyclic(n))), cap);
  report.cyclic_holomorph_order = hol_cyclic.order();
  for (auto const &subgroup : subgroup_index_sets(hol_cyclic)) {
    ++report.subgroups_checked;
    std::vector<bool> reached(n, false);
    bool witness = false;
    for (auto i : subgroup) {
      reached[hol_cyclic.element(i).image0(0)] = true;
      witness = witness || hol_cyclic.order_of(i) == n;
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
      continue;
    ++report.transitive_subgroups;
    report.transitive_with_witness += witness;
  }

  // (b) element orders in Hol(C_p x C_p)
  auto const hol_elementary = holomorph(SmallGroup(regular_elementary(p)));
  report.elementary_holomorph_order = hol_elementary.order();
  for (auto const &x : hol_elementary.elements(cap))
    report.elementary_max_element_order =
        std::max(report.elementary_max_element_order, element_order(x));
  return report;
}

} // namespace hge
