#include "hge/worked_example.hpp"

#include <algorithm>
#include <sstream>

#include "hge/conjugation_orbit.hpp"
#include "hge/enumerator.hpp"
#include "hge/small_group.hpp"

namespace hge {

std::vector<PermutationGroup> worked_example_subgroups()
{
  static constexpr char const *kGenerators[6][2] = {
      {"(1,8)(2,3)(4,5)(6,7)", "(1,6,5,2)(3,4,7,8)"},
      {"(1,8)(2,3)(4,5)(6,7)", "(1,4,7,2)(3,6,5,8)"},
      {"(1,6)(2,5)(3,4)(7,8)", "(1,4,5,8)(2,3,6,7)"},
      {"(1,2)(3,8)(4,7)(5,6)", "(1,4,3,6)(2,5,8,7)"},
      {"(1,6)(2,5)(3,4)(7,8)", "(1,2,3,8)(4,5,6,7)"},
      {"(1,4)(2,7)(3,6)(5,8)", "(1,6,7,8)(2,3,4,5)"},
  };
  std::vector<PermutationGroup> out;
  for (auto const &[s, r] : kGenerators)
    out.emplace_back(8, std::vector{parse_cycles(s, 8), parse_cycles(r, 8)});
  return out;
}

bool WorkedExampleReport::ok() const
{
  return regular == 6 && dihedral == 6 && normalized == 6 && g_isomorphic_pairs == 15 &&
         dihedral_structures == 42 && listed_found == 6 &&
         class_sizes == std::vector<int>(7, 6);
}

std::string WorkedExampleReport::to_string() const
{
  std::ostringstream os;
  os << "regular: " << regular << "/6\n"
     << "dihedral: " << dihedral << "/6\n"
     << "normalized by 8T3: " << normalized << "/6\n"
     << "G-isomorphic pairs: " << g_isomorphic_pairs << "/15\n"
     << "dihedral structures of 8T3: " << dihedral_structures << '\n'
     << "listed subgroups among them: " << listed_found << "/6\n"
     << "class sizes:";
  for (int s : class_sizes)
    os << ' ' << s;
  os << '\n';
  return os.str();
}

WorkedExampleReport check_worked_example(Catalog const &catalog)
{
  WorkedExampleReport report;
  auto const g = catalog.entry(8, 3).group();
  auto const dihedral = catalog.entry(8, 4).group();
  SmallGroup const dihedral_small(dihedral);
  auto const subgroups = worked_example_subgroups();

  for (auto const &n : subgroups) {
    report.regular += is_regular(n);
    report.dihedral += find_isomorphism(SmallGroup(n), dihedral_small).has_value();
    report.normalized += is_normalized_by(n, g);
  }
  for (std::size_t a = 0; a < subgroups.size(); ++a)
    for (std::size_t b = a + 1; b < subgroups.size(); ++b)
      report.g_isomorphic_pairs += are_g_isomorphic(subgroups[a], subgroups[b], g);

  auto const orbit = conjugation_orbit(dihedral);
  int const fields = count_intermediate_fields(g);
  std::vector<StructureRecord> records;
  std::vector<std::string> keys;
  for (auto m : normalized_member_indices(g, orbit)) {
    StructureRecord r;
    r.id = static_cast<int>(records.size()) + 1;
    r.group_index = 3;
    r.type_index = 4;
    r.orbit_member = m;
    r.n = orbit.member(m);
    r.sub_g_stable_count = count_g_stable_subgroups(r.n, g);
    r.bijective = r.sub_g_stable_count == fields;
    records.push_back(std::move(r));
    keys.emplace_back(orbit.canonical_key(m));
  }
  report.dihedral_structures = static_cast<int>(records.size());
  for (auto const &n : subgroups)
    report.listed_found +=
        std::find(keys.begin(), keys.end(), canonical_key(n)) != keys.end();
  for (auto const &c : partition_iso_classes(records, g))
    report.class_sizes.push_back(static_cast<int>(c.member_ids.size()));
  std::sort(report.class_sizes.begin(), report.class_sizes.end());
  return report;
}

} // namespace hge
