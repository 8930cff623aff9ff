#ifndef HGE_WORKED_EXAMPLE_HPP
#define HGE_WORKED_EXAMPLE_HPP

#include <string>
#include <vector>

#include "hge/catalog.hpp"
#include "hge/perm_group.hpp"

namespace hge {

/// The six dihedral regular subgroups of S_8 normalized by the elementary
/// abelian 8T3, each given by a reflection s_i and a rotation r_i (r_i is the
/// product of the two displayed 4-cycles).
std::vector<PermutationGroup> worked_example_subgroups();

struct WorkedExampleReport
{
  int regular = 0;                 // of the six
  int dihedral = 0;                // isomorphic to the catalog's 8T4
  int normalized = 0;              // normalized by 8T3
  int g_isomorphic_pairs = 0;      // of the 15 pairs
  int dihedral_structures = 0;     // found by Step 1 for 8T3
  int listed_found = 0;            // of the six, among those structures
  std::vector<int> class_sizes;    // partition of the dihedral cell

  bool ok() const;
  std::string to_string() const;
};

/// Checks the six subgroups against G = 8T3 and reruns Steps 1-4 for the
/// dihedral cell of 8T3.
WorkedExampleReport check_worked_example(Catalog const &catalog);

} // namespace hge

#endif // HGE_WORKED_EXAMPLE_HPP
