#include "hge/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace hge {

TypeSummary const *DegreeReport::summary(int group_index, int type_index) const
{
  for (auto const &s : summaries)
    if (s.group_index == group_index && s.type_index == type_index)
      return &s;
  return nullptr;
}

GroupTotals const *DegreeReport::group(int group_index) const
{
  for (auto const &t : group_totals)
    if (t.group_index == group_index)
      return &t;
  return nullptr;
}

std::vector<int> DegreeReport::partition(int group_index, int type_index) const
{
  std::vector<int> sizes;
  for (auto const &c : classes)
    if (c.group_index == group_index && c.type_index == type_index)
      sizes.push_back(static_cast<int>(c.member_ids.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ---------------------------------------------------------------------------
// Steps 1-3 as standalone operations

std::vector<std::size_t> normalized_member_indices(PermutationGroup const &g,
                                                   SubgroupConjugationOrbit const &orbit)
{
  if (g.degree() != orbit.ambient_degree())
    throw std::invalid_argument("group and orbit have different degrees");
  std::vector<std::size_t> out;
  auto const &gens = g.generators();
  for (std::size_t m = 0; m < orbit.size(); ++m)
    if (orbit.member_normalized_by(m, gens))
      out.push_back(m);
  return out;
}

std::vector<PermutationGroup> normalized_candidates(PermutationGroup const &g,
                                                    SubgroupConjugationOrbit const &orbit)
{
  std::vector<PermutationGroup> out;
  for (auto m : normalized_member_indices(g, orbit))
    out.push_back(orbit.member(m));
  return out;
}

bool is_almost_classical(PermutationGroup const &n, PermutationGroup const &g)
{
  auto const opposite = opposite_regular(SmallGroup(n));
  for (auto const &r : opposite.generators())
    if (!g.contains(r))
      return false;
  return true;
}

bool contained_in_g(PermutationGroup const &n, PermutationGroup const &g)
{
  for (auto const &x : n.generators())
    if (!g.contains(x))
      return false;
  return true;
}

int count_intermediate_fields(PermutationGroup const &g, std::uint64_t cap)
{
  if (!is_transitive(g))
    throw std::invalid_argument("count_intermediate_fields requires a transitive group");
  int const deg = g.degree();
  auto const &elements = g.elements(cap);

  // A set B through point 1 is a block iff every x with x(1) in B fixes B
  // setwise; blocks through 1 correspond to the overgroups of Stab(1).
  int count = 0;
  std::uint32_t const others = (deg >= 2) ? (1u << (deg - 1)) : 1u;
  for (std::uint32_t rest = 0; rest < others; ++rest) {
    std::uint32_t const block = (rest << 1) | 1u;
    int const size = std::popcount(block);
    if (deg % size != 0)
      continue;
    bool is_block = true;
    for (auto const &x : elements) {
      if (!((block >> x.image0(0)) & 1u))
        continue;
      std::uint32_t image = 0;
      for (int i = 0; i < deg; ++i)
        if ((block >> i) & 1u)
          image |= 1u << x.image0(i);
      if (image != block) {
        is_block = false;
        break;
      }
    }
    if (is_block)
      ++count;
  }
  return count;
}

int count_g_stable_subgroups(PermutationGroup const &n, PermutationGroup const &g)
{
  SmallGroup const sn(n);
  std::size_t const order = sn.order();

  // conjugation by each generator of G as a map on element indices
  std::vector<std::vector<SmallGroup::Index>> action;
  for (auto const &x : g.generators()) {
    std::vector<SmallGroup::Index> map(order);
    for (SmallGroup::Index i = 0; i < order; ++i) {
      auto j = sn.index_of(conjugate(sn.element(i), x));
      if (!j)
        throw std::invalid_argument("count_g_stable_subgroups: N is not normalized by G");
      map[i] = *j;
    }
    action.push_back(std::move(map));
  }

  int count = 0;
  std::vector<char> member(order);
  for (auto const &subgroup : subgroup_index_sets(sn)) {
    std::fill(member.begin(), member.end(), 0);
    for (auto i : subgroup)
      member[i] = 1;
    bool stable = true;
    for (auto const &map : action) {
      for (auto i : subgroup)
        if (!member[map[i]]) {
          stable = false;
          break;
        }
      if (!stable)
        break;
    }
    if (stable)
      ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// enumerate

namespace {

struct WorkResult
{
  std::vector<StructureRecord> records;  // ids local to this group, 1-based
  std::vector<TypeSummary> summaries;
  std::vector<IsoClass> classes;
  int intermediate_fields = 0;
};

WorkResult process_group(TransitiveGroupEntry const &entry,
                         std::vector<TypeInfo> const &types,
                         std::vector<SubgroupConjugationOrbit> const &orbits,
                         EnumerateOptions const &options)
{
  WorkResult result;
  PermutationGroup const g = entry.group();

  // Step 1
  std::vector<std::size_t> type_begin;
  for (std::size_t t = 0; t < types.size(); ++t) {
    type_begin.push_back(result.records.size());
    if (options.prune && g.order() > types[t].holomorph_order)
      continue;
    for (auto m : normalized_member_indices(g, orbits[t])) {
      StructureRecord r;
      r.id = static_cast<int>(result.records.size()) + 1;
      r.group_index = entry.index;
      r.type_index = types[t].type_index;
      r.orbit_member = m;
      r.n = orbits[t].member(m);
      result.records.push_back(std::move(r));
    }
  }
  type_begin.push_back(result.records.size());
  if (result.records.empty())
    return result;

  // Steps 2 and 3
  result.intermediate_fields = count_intermediate_fields(g, options.element_cap);
  for (auto &r : result.records) {
    r.almost_classical = is_almost_classical(r.n, g);
    r.contained_in_g = contained_in_g(r.n, g);
    r.sub_g_stable_count = count_g_stable_subgroups(r.n, g);
    r.bijective = r.sub_g_stable_count == result.intermediate_fields;
    if (r.almost_classical && !r.bijective)
      throw std::logic_error(entry.name() +
                             ": almost classical structure without bijective "
                             "correspondence");
  }

  // Step 4
  for (std::size_t t = 0; t < types.size(); ++t) {
    std::span<const StructureRecord> cell(result.records.data() + type_begin[t],
                                          type_begin[t + 1] - type_begin[t]);
    TypeSummary s;
    s.group_index = entry.index;
    s.type_index = types[t].type_index;
    s.t = static_cast<int>(cell.size());
    for (auto const &r : cell) {
      s.ac += r.almost_classical;
      s.bc += r.bijective;
    }
    if (!cell.empty()) {
      auto classes = partition_iso_classes(cell, g);
      s.gi = static_cast<int>(classes.size());
      for (auto &c : classes)
        result.classes.push_back(std::move(c));
    }
    result.summaries.push_back(s);
  }
  return result;
}

template<typename Fn>
void run_parallel(std::size_t count, int workers, Fn &&fn)
{
  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace

DegreeReport enumerate(int degree, Catalog const &catalog,
                       EnumerateOptions const &options)
{
  if (degree < kMinEnumerationDegree || degree > kMaxEnumerationDegree)
    throw std::out_of_range("enumeration supports degrees 2..11, got " +
                            std::to_string(degree));
  auto verification = verify_catalog(catalog, degree, VerifyLevel::basic);
  if (!verification.ok())
    throw std::invalid_argument("catalog verification failed for degree " +
                                std::to_string(degree) + ": " +
                                verification.failures.front());

  DegreeReport report;
  report.degree = degree;
  report.pruned = options.prune;
  auto const &entries = catalog.entries(degree);
  report.transitive_total = static_cast<int>(entries.size());
  for (auto const &e : entries)
    report.group_labels[e.index] = e.label.value_or(e.name());

  for (auto const &rep : regular_representatives(catalog, degree)) {
    TypeInfo info;
    info.type_index = rep.index;
    info.label = rep.label.value_or(rep.name());
    info.representative = rep.group();
    info.holomorph_order = holomorph(SmallGroup(info.representative)).order();
    report.types.push_back(std::move(info));
  }
  report.triv = static_cast<int>(report.types.size());
  auto bound = max_order_bound(catalog, degree);
  report.holomorph_bound = bound.bound;
  report.count_max = bound.count_max;

  std::vector<SubgroupConjugationOrbit> orbits(report.types.size());
  run_parallel(orbits.size(), options.parallel, [&](std::size_t t) {
    orbits[t] = conjugation_orbit(report.types[t].representative);
  });
  for (std::size_t t = 0; t < orbits.size(); ++t)
    report.types[t].orbit_size = orbits[t].size();

  std::vector<TransitiveGroupEntry const *> work;
  for (auto const &e : entries)
    if (!options.prune || e.claimed_order <= report.holomorph_bound)
      work.push_back(&e);

  std::vector<WorkResult> results(work.size());
  run_parallel(work.size(), options.parallel, [&](std::size_t w) {
    results[w] = process_group(*work[w], report.types, orbits, options);
  });

  // deterministic merge in (k, type, discovery) order
  int offset = 0;
  for (std::size_t w = 0; w < work.size(); ++w) {
    int const k = work[w]->index;
    report.processed.push_back(k);
    auto &r = results[w];
    if (r.records.empty())
      continue;
    report.useful.push_back(k);
    report.intermediate_field_counts[k] = r.intermediate_fields;
    GroupTotals totals;
    totals.group_index = k;
    for (auto &rec : r.records) {
      rec.id += offset;
      report.records.push_back(std::move(rec));
    }
    for (auto &c : r.classes) {
      for (auto &id : c.member_ids)
        id += offset;
      report.classes.push_back(std::move(c));
    }
    for (auto const &s : r.summaries) {
      totals.t += s.t;
      totals.ac += s.ac;
      totals.bc += s.bc;
      totals.gi += s.gi;
      report.summaries.push_back(s);
    }
    report.group_totals.push_back(totals);
    offset = static_cast<int>(report.records.size());

    auto &d = report.degree_totals;
    d.total += totals.t;
    d.ac += totals.ac;
    d.bc += totals.bc;
    d.gi += totals.gi;
    if (work[w]->claimed_order == static_cast<std::uint64_t>(degree))
      d.galois_gi += totals.gi;
  }
  report.degree_totals.bc_not_ac = report.degree_totals.bc - report.degree_totals.ac;
  return report;
}

} // namespace hge
