#ifndef HGE_GOLDEN_HPP
#define HGE_GOLDEN_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hge/enumerator.hpp"

namespace hge {

struct GoldenCounts
{
  int t = 0;
  int ac = 0;
  int bc = 0;
  int gi = 0;

  friend bool operator==(GoldenCounts const &, GoldenCounts const &) = default;
};

/// Expected results for one degree. Degrees whose per-group tables are not
/// published carry only the structural data and degree totals.
struct GoldenTable
{
  int degree = 0;
  std::uint64_t symmetric_order = 0;
  int transitive_total = 0;
  int max = 0;
  int types = 0;
  DegreeTotals degree_totals;
  std::map<std::pair<int, int>, GoldenCounts> rows;  // (k, type index)
  std::map<int, GoldenCounts> group_summaries;       // k
  std::map<std::pair<int, int>, std::vector<int>> partitions;  // sorted sizes

  bool has_rows() const { return !group_summaries.empty(); }
};

/// Parses the golden file format (see core/data/README.md). Throws
/// std::runtime_error with the line number on malformed input.
std::map<int, GoldenTable> load_golden(std::istream &in);
std::map<int, GoldenTable> load_golden_text(std::string_view text);

/// The embedded golden tables.
std::map<int, GoldenTable> const &default_golden();

/// Internal consistency: rows sum to group summaries, summaries sum to the
/// degree totals, partitions sum to T and have G-i parts. Returns messages.
std::vector<std::string> validate_golden(GoldenTable const &golden);

struct GoldenDiff
{
  int group_index = 0;  // 0 for degree-level fields
  int type_index = 0;   // 0 for group summaries and degree-level fields
  std::string field;
  std::string expected;
  std::string actual;

  std::string to_string() const;
};

/// Exact comparison; an empty result means the report matches. Throws
/// std::invalid_argument when the degrees differ.
std::vector<GoldenDiff> compare_golden(DegreeReport const &report,
                                       GoldenTable const &golden);

} // namespace hge

#endif // HGE_GOLDEN_HPP
