#ifndef HGE_RENDER_HPP
#define HGE_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hge/enumerator.hpp"
#include "hge/metrics.hpp"

namespace hge {

enum class Format { text, csv, json };

/// "text", "csv" or "json"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view name);

/// text: one table with a "T a-c BC G-i" block per type and a Summary block,
///       one row per group with at least one structure, then the totals.
/// csv:  header row, one row per nonzero (group, type) cell, one summary row
///       per group, one totals row.
/// json: the full report, see docs/json_schema.md.
std::string render(DegreeReport const &report, Format format);

/// Reconstructs a report from render(report, Format::json). Records carry
/// their subgroup rebuilt from the listed generators.
DegreeReport parse_report_json(std::string_view json);

/// One line per degree with the structural and aggregate columns plus the
/// run metrics.
std::string render_summary(std::vector<DegreeReport> const &reports,
                           std::vector<RunMetrics> const &metrics);

} // namespace hge

#endif // HGE_RENDER_HPP
