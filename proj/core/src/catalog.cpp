#include "hge/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "hge/embedded_data.hpp"
#include "hge/small_group.hpp"

namespace hge {

std::string TransitiveGroupEntry::name() const
{
  return std::to_string(degree) + "T" + std::to_string(index);
}

void Catalog::add(TransitiveGroupEntry entry, int line)
{
  if (entry.degree < 1 || entry.degree > kMaxCatalogDegree)
    throw CatalogError("degree " + std::to_string(entry.degree) +
                           " outside supported range 1.." +
                           std::to_string(kMaxCatalogDegree),
                       line);
  auto &list = entries_[entry.degree];
  auto pos = std::lower_bound(list.begin(), list.end(), entry.index,
                              [](auto const &e, int k) { return e.index < k; });
  if (pos != list.end() && pos->index == entry.index)
    throw CatalogError("duplicate entry " + entry.name(), line);
  list.insert(pos, std::move(entry));
}

std::vector<int> Catalog::degrees() const
{
  std::vector<int> out;
  for (auto const &[d, _] : entries_)
    out.push_back(d);
  return out;
}

std::vector<TransitiveGroupEntry> const &Catalog::entries(int degree) const
{
  auto it = entries_.find(degree);
  if (it == entries_.end())
    throw std::out_of_range("catalog has no degree " + std::to_string(degree));
  return it->second;
}

TransitiveGroupEntry const &Catalog::entry(int degree, int index) const
{
  for (auto const &e : entries(degree))
    if (e.index == index)
      return e;
  throw std::out_of_range("catalog has no entry " + std::to_string(degree) +
                          "T" + std::to_string(index));
}

int expected_transitive_count(int degree)
{
  static constexpr int counts[] = {0, 1, 1, 2, 5, 5, 16, 7, 50, 34, 45, 8};
  if (degree < 1 || degree > kMaxCatalogDegree)
    throw std::out_of_range("no published count for degree " + std::to_string(degree));
  return counts[degree];
}

namespace {

template<typename Int>
Int parse_int(std::string const &token, int line, char const *what)
{
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used != token.size() || value < 0)
    throw CatalogError(std::string("bad ") + what + " '" + token + "'", line);
  return static_cast<Int>(value);
}

// A generator token is a product of cycles such as "(1,2)(3,4)" or "()";
// anything else in the label position, e.g. "(C2)^3", is a label.
bool looks_like_cycles(std::string const &token)
{
  static std::regex const cycles(R"((\((\d+(,\d+)*)?\))+)");
  return std::regex_match(token, cycles);
}

} // namespace

Catalog load_catalog(std::istream &in)
{
  Catalog catalog;
  std::string raw;
  int line_no = 0;
  int count = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;)
      tokens.push_back(t);
    if (tokens.empty())
      continue;
    if (tokens.size() < 3)
      throw CatalogError("expected 'degree index order [label] generators...'", line_no);

    TransitiveGroupEntry entry;
    entry.degree = parse_int<int>(tokens[0], line_no, "degree");
    entry.index = parse_int<int>(tokens[1], line_no, "index");
    entry.claimed_order = parse_int<std::uint64_t>(tokens[2], line_no, "order");
    if (entry.degree < 1 || entry.degree > kMaxCatalogDegree)
      throw CatalogError("degree " + tokens[0] + " outside supported range 1..11",
                         line_no);
    if (entry.index < 1 || entry.claimed_order < 1)
      throw CatalogError("index and order must be positive", line_no);
    std::size_t next = 3;
    if (next < tokens.size() && !looks_like_cycles(tokens[next]))
      entry.label = tokens[next++];
    for (; next < tokens.size(); ++next) {
      try {
        entry.generators.push_back(parse_cycles(tokens[next], entry.degree));
      } catch (std::invalid_argument const &e) {
        throw CatalogError(e.what(), line_no);
      }
    }
    if (entry.generators.empty() && entry.degree > 1)
      throw CatalogError("entry has no generators", line_no);
    catalog.add(std::move(entry), line_no);
    ++count;
  }
  if (count == 0)
    throw CatalogError("catalog stream contains no entries", 0);
  return catalog;
}

Catalog load_catalog_text(std::string_view text)
{
  std::istringstream in{std::string(text)};
  return load_catalog(in);
}

Catalog default_catalog()
{
  if (char const *path = std::getenv("HGE_CATALOG_PATH"); path && *path) {
    std::ifstream in(path);
    if (!in)
      throw CatalogError(std::string("cannot open catalog file ") + path, 0);
    return load_catalog(in);
  }
  return load_catalog_text(embedded_catalog_text());
}

std::string serialize_catalog(Catalog const &catalog)
{
  std::string out;
  for (int d : catalog.degrees()) {
    for (auto const &e : catalog.entries(d)) {
      out += std::to_string(e.degree) + ' ' + std::to_string(e.index) + ' ' +
             std::to_string(e.claimed_order);
      if (e.label)
        out += ' ' + *e.label;
      for (auto const &g : e.generators)
        if (!g.is_identity())
          out += ' ' + g.to_cycles();
      out += '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string cycle_type(Permutation const &p)
{
  std::vector<int> lengths;
  std::vector<bool> done(p.degree(), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i])
      continue;
    int len = 0;
    for (int j = i; !done[j]; j = p.image0(j)) {
      done[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  std::string s;
  for (int l : lengths)
    s += std::to_string(l) + '.';
  return s;
}

// Conjugacy invariant: order plus the cycle-type histogram when affordable.
std::string conjugacy_invariant(PermutationGroup const &g)
{
  std::string inv = std::to_string(g.order()) + '|';
  if (g.order() <= kDefaultElementCap) {
    std::map<std::string, int> histogram;
    for (auto const &x : g.elements())
      ++histogram[cycle_type(x)];
    for (auto const &[type, n] : histogram)
      inv += type + ':' + std::to_string(n) + ';';
  }
  return inv;
}

// Exhaustive search for t in S_g with t^-1 A t = B (orders assumed equal).
bool conjugate_in_symmetric(PermutationGroup const &a, PermutationGroup const &b)
{
  int const g = a.degree();
  std::vector<int> images(g);
  std::iota(images.begin(), images.end(), 1);
  do {
    auto t = Permutation::from_images(images);
    bool all = true;
    for (auto const &x : a.generators())
      if (!b.contains(conjugate(x, t))) {
        all = false;
        break;
      }
    if (all)
      return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

} // namespace

VerificationReport verify_catalog(Catalog const &catalog, int degree,
                                  VerifyLevel level)
{
  VerificationReport report;
  report.degree = degree;
  auto const &entries = catalog.entries(degree);
  report.entry_count = static_cast<int>(entries.size());
  report.expected_count = expected_transitive_count(degree);
  if (report.entry_count != report.expected_count)
    report.failures.push_back("degree " + std::to_string(degree) + " has " +
                              std::to_string(report.entry_count) +
                              " entries, expected " +
                              std::to_string(report.expected_count));

  std::vector<PermutationGroup> groups;
  std::uint64_t previous_order = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const &e = entries[i];
    if (e.index != static_cast<int>(i) + 1)
      report.failures.push_back(e.name() + ": index gap (expected " +
                                std::to_string(i + 1) + ")");
    if (e.claimed_order < previous_order)
      report.failures.push_back(e.name() + ": order decreases along the catalog");
    previous_order = e.claimed_order;
    groups.push_back(e.group());
    if (!is_transitive(groups.back()))
      report.failures.push_back(e.name() + ": not transitive");
    if (groups.back().order() != e.claimed_order)
      report.failures.push_back(e.name() + ": order " +
                                std::to_string(groups.back().order()) +
                                " but catalog claims " +
                                std::to_string(e.claimed_order));
  }

  if (level == VerifyLevel::strong) {
    report.strong_checked = true;
    std::vector<std::string> invariants;
    for (auto const &g : groups)
      invariants.push_back(conjugacy_invariant(g));
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        if (invariants[i] == invariants[j] &&
            conjugate_in_symmetric(groups[i], groups[j]))
          report.failures.push_back(entries[i].name() + " and " + entries[j].name() +
                                    " are conjugate in S_" + std::to_string(degree));
  }
  return report;
}

std::vector<TransitiveGroupEntry> regular_representatives(Catalog const &catalog,
                                                          int degree)
{
  std::vector<TransitiveGroupEntry> reps;
  for (auto const &e : catalog.entries(degree))
    if (e.claimed_order == static_cast<std::uint64_t>(degree))
      reps.push_back(e);
  std::vector<SmallGroup> groups;
  for (auto const &e : reps)
    groups.emplace_back(e.group());
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (find_isomorphism(groups[i], groups[j]))
        throw CatalogError("regular entries " + reps[i].name() + " and " +
                               reps[j].name() + " are isomorphic",
                           0);
  return reps;
}

OrderBound max_order_bound(Catalog const &catalog, int degree)
{
  OrderBound result;
  for (auto const &rep : regular_representatives(catalog, degree))
    result.bound = std::max<std::uint64_t>(result.bound,
                                           holomorph(SmallGroup(rep.group())).order());
  for (auto const &e : catalog.entries(degree))
    if (e.claimed_order <= result.bound)
      ++result.count_max;
  return result;
}

} // namespace hge
