#include "hge/golden.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hge/embedded_data.hpp"

namespace hge {

namespace {

[[noreturn]] void fail(int line, std::string const &what)
{
  throw std::runtime_error("golden line " + std::to_string(line) + ": " + what);
}

std::vector<long long> numbers(std::istringstream &in, int line)
{
  std::vector<long long> out;
  for (std::string t; in >> t;) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != t.size() || v < 0)
      fail(line, "bad number '" + t + "'");
    out.push_back(v);
  }
  return out;
}

GoldenCounts counts(std::vector<long long> const &v, std::size_t from)
{
  return {static_cast<int>(v[from]), static_cast<int>(v[from + 1]),
          static_cast<int>(v[from + 2]), static_cast<int>(v[from + 3])};
}

std::string join_sizes(std::vector<int> const &sizes)
{
  if (sizes.empty())
    return "-";
  std::string s;
  for (int x : sizes)
    s += (s.empty() ? "" : "+") + std::to_string(x);
  return s;
}

} // namespace

std::map<int, GoldenTable> load_golden(std::istream &in)
{
  std::map<int, GoldenTable> tables;
  GoldenTable *current = nullptr;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream fields(raw);
    std::string keyword;
    if (!(fields >> keyword))
      continue;

    if (keyword == "degree") {
      // degree <g> order <g!> transitive <n> max <m> types <t>
      std::vector<std::string> tokens;
      for (std::string t; fields >> t;)
        tokens.push_back(t);
      if (tokens.size() != 9)
        fail(line, "expected 'degree g order N transitive N max N types N'");
      GoldenTable table;
      try {
        table.degree = std::stoi(tokens[0]);
        for (std::size_t i = 1; i + 1 < tokens.size(); i += 2) {
          auto value = std::stoull(tokens[i + 1]);
          if (tokens[i] == "order")
            table.symmetric_order = value;
          else if (tokens[i] == "transitive")
            table.transitive_total = static_cast<int>(value);
          else if (tokens[i] == "max")
            table.max = static_cast<int>(value);
          else if (tokens[i] == "types")
            table.types = static_cast<int>(value);
          else
            fail(line, "unknown key '" + tokens[i] + "'");
        }
      } catch (std::logic_error const &) {
        fail(line, "bad number in degree line");
      }
      if (tables.count(table.degree))
        fail(line, "duplicate degree " + std::to_string(table.degree));
      current = &(tables[table.degree] = table);
      continue;
    }

    if (!current)
      fail(line, "'" + keyword + "' before any degree line");
    auto v = numbers(fields, line);
    if (keyword == "totals") {
      if (v.size() != 6)
        fail(line, "totals needs 6 numbers");
      current->degree_totals = {static_cast<int>(v[0]), static_cast<int>(v[1]),
                                static_cast<int>(v[2]), static_cast<int>(v[3]),
                                static_cast<int>(v[4]), static_cast<int>(v[5])};
    } else if (keyword == "cell") {
      if (v.size() != 6)
        fail(line, "cell needs k, type and 4 counts");
      current->rows[{static_cast<int>(v[0]), static_cast<int>(v[1])}] = counts(v, 2);
    } else if (keyword == "summary") {
      if (v.size() != 5)
        fail(line, "summary needs k and 4 counts");
      current->group_summaries[static_cast<int>(v[0])] = counts(v, 1);
    } else if (keyword == "partition") {
      if (v.size() < 3)
        fail(line, "partition needs k, type and at least one size");
      std::vector<int> sizes(v.begin() + 2, v.end());
      std::sort(sizes.begin(), sizes.end());
      current->partitions[{static_cast<int>(v[0]), static_cast<int>(v[1])}] = sizes;
    } else {
      fail(line, "unknown keyword '" + keyword + "'");
    }
  }
  return tables;
}

std::map<int, GoldenTable> load_golden_text(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return load_golden(in);
}

std::map<int, GoldenTable> const &default_golden()
{
  static auto const tables = load_golden_text(embedded_golden_text());
  return tables;
}

std::vector<std::string> validate_golden(GoldenTable const &golden)
{
  std::vector<std::string> problems;
  auto const prefix = "degree " + std::to_string(golden.degree) + ": ";
  auto const &d = golden.degree_totals;
  if (d.bc_not_ac != d.bc - d.ac)
    problems.push_back(prefix + "BC not a-c differs from BC - a-c");
  if (!golden.has_rows())
    return problems;

  GoldenCounts sum;
  for (auto const &[k, s] : golden.group_summaries) {
    GoldenCounts rows;
    for (auto const &[key, c] : golden.rows)
      if (key.first == k) {
        rows.t += c.t;
        rows.ac += c.ac;
        rows.bc += c.bc;
        rows.gi += c.gi;
      }
    if (!(rows == s))
      problems.push_back(prefix + "rows of group " + std::to_string(k) +
                         " do not sum to its summary");
    sum.t += s.t;
    sum.ac += s.ac;
    sum.bc += s.bc;
    sum.gi += s.gi;
  }
  if (sum.t != d.total || sum.ac != d.ac || sum.bc != d.bc || sum.gi != d.gi)
    problems.push_back(prefix + "group summaries do not sum to the degree totals");
  for (auto const &[key, sizes] : golden.partitions) {
    auto it = golden.rows.find(key);
    int const total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (it == golden.rows.end() || it->second.t != total ||
        it->second.gi != static_cast<int>(sizes.size()))
      problems.push_back(prefix + "partition of (" + std::to_string(key.first) + ", " +
                         std::to_string(key.second) + ") disagrees with its row");
  }
  return problems;
}

std::string GoldenDiff::to_string() const
{
  std::string where;
  if (group_index == 0)
    where = "degree";
  else if (type_index == 0)
    where = "group " + std::to_string(group_index) + " summary";
  else
    where = "group " + std::to_string(group_index) + " type " + std::to_string(type_index);
  return where + " " + field + ": expected " + expected + ", actual " + actual;
}

std::vector<GoldenDiff> compare_golden(DegreeReport const &report,
                                       GoldenTable const &golden)
{
  if (report.degree != golden.degree)
    throw std::invalid_argument("compare_golden: report degree " +
                                std::to_string(report.degree) + " vs golden degree " +
                                std::to_string(golden.degree));
  std::vector<GoldenDiff> diffs;
  auto check = [&](int k, int i, std::string field, long long expected, long long actual) {
    if (expected != actual)
      diffs.push_back({k, i, std::move(field), std::to_string(expected),
                       std::to_string(actual)});
  };
  auto check_counts = [&](int k, int i, GoldenCounts const &e, GoldenCounts const &a) {
    check(k, i, "T", e.t, a.t);
    check(k, i, "a-c", e.ac, a.ac);
    check(k, i, "BC", e.bc, a.bc);
    check(k, i, "G-i", e.gi, a.gi);
  };

  check(0, 0, "transitive groups", golden.transitive_total, report.transitive_total);
  check(0, 0, "Max", golden.max, report.count_max);
  check(0, 0, "types", golden.types, static_cast<long long>(report.types.size()));
  auto const &e = golden.degree_totals;
  auto const &a = report.degree_totals;
  check(0, 0, "total", e.total, a.total);
  check(0, 0, "total a-c", e.ac, a.ac);
  check(0, 0, "total BC", e.bc, a.bc);
  check(0, 0, "BC not a-c", e.bc_not_ac, a.bc_not_ac);
  check(0, 0, "total G-i", e.gi, a.gi);
  check(0, 0, "Galois G-i", e.galois_gi, a.galois_gi);

  if (!golden.has_rows())
    return diffs;

  std::set<int> groups(report.useful.begin(), report.useful.end());
  for (auto const &[k, _] : golden.group_summaries)
    groups.insert(k);
  for (int k : groups) {
    GoldenCounts expected;
    if (auto it = golden.group_summaries.find(k); it != golden.group_summaries.end())
      expected = it->second;
    GoldenCounts actual;
    if (auto const *g = report.group(k))
      actual = {g->t, g->ac, g->bc, g->gi};
    check_counts(k, 0, expected, actual);

    for (auto const &type : report.types) {
      int const i = type.type_index;
      GoldenCounts cell_expected;
      if (auto it = golden.rows.find({k, i}); it != golden.rows.end())
        cell_expected = it->second;
      GoldenCounts cell_actual;
      if (auto const *s = report.summary(k, i))
        cell_actual = {s->t, s->ac, s->bc, s->gi};
      check_counts(k, i, cell_expected, cell_actual);
    }
  }
  for (auto const &[key, sizes] : golden.partitions) {
    auto actual = report.partition(key.first, key.second);
    if (actual != sizes)
      diffs.push_back({key.first, key.second, "partition", join_sizes(sizes),
                       join_sizes(actual)});
  }
  return diffs;
}

} // namespace hge
