#include "hge/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hge {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name)
{
  if (name == "text")
    return Format::text;
  if (name == "csv")
    return Format::csv;
  if (name == "json")
    return Format::json;
  return std::nullopt;
}

namespace {

constexpr int kGroupWidth = 22;
constexpr int kCountWidth = 4;

std::string group_name(DegreeReport const &report, int k)
{
  std::string name = std::to_string(report.degree) + "T" + std::to_string(k);
  if (auto it = report.group_labels.find(k); it != report.group_labels.end())
    name += " " + it->second;
  return name;
}

void count_block(std::ostream &os, int t, int ac, int bc, int gi)
{
  os << " |" << std::setw(kCountWidth) << t << std::setw(kCountWidth) << ac
     << std::setw(kCountWidth) << bc << std::setw(kCountWidth) << gi << ' ';
}

std::string render_text(DegreeReport const &report)
{
  std::ostringstream os;
  os << "Degree " << report.degree << ": " << report.transitive_total
     << " transitive groups, Max " << report.count_max << ", " << report.types.size()
     << " types\n";
  int const block = 4 * kCountWidth + 1;
  os << std::left << std::setw(kGroupWidth) << "Group";
  for (auto const &t : report.types)
    os << " | " << std::setw(block - 1) << ("Type " + t.label);
  os << " | " << std::setw(block - 1) << "Summary" << '\n';
  os << std::setw(kGroupWidth) << "" << std::right;
  for (std::size_t i = 0; i <= report.types.size(); ++i)
    os << " |" << std::setw(kCountWidth) << "T" << std::setw(kCountWidth) << "a-c"
       << std::setw(kCountWidth) << "BC" << std::setw(kCountWidth) << "G-i" << ' ';
  os << '\n';

  for (int k : report.useful) {
    os << std::left << std::setw(kGroupWidth) << group_name(report, k) << std::right;
    for (auto const &t : report.types) {
      auto const *s = report.summary(k, t.type_index);
      if (s)
        count_block(os, s->t, s->ac, s->bc, s->gi);
      else
        count_block(os, 0, 0, 0, 0);
    }
    auto const *g = report.group(k);
    count_block(os, g->t, g->ac, g->bc, g->gi);
    os << '\n';
  }
  if (!report.records.empty()) {
    auto const &d = report.degree_totals;
    os << "Totals: HG " << d.total << ", a-c " << d.ac << ", BC " << d.bc
       << " (not a-c " << d.bc_not_ac << "), G-iso " << d.gi << " (Galois "
       << d.galois_gi << ")\n";
  }
  return os.str();
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + '"';
}

std::string render_csv(DegreeReport const &report)
{
  std::ostringstream os;
  os << "kind,degree,group,group_label,type,type_label,T,ac,bc,gi\n";
  auto label = [&](int k) {
    auto it = report.group_labels.find(k);
    return csv_field(it == report.group_labels.end() ? "" : it->second);
  };
  for (int k : report.useful) {
    for (auto const &t : report.types) {
      auto const *s = report.summary(k, t.type_index);
      if (!s || s->t == 0)
        continue;
      os << "cell," << report.degree << ',' << k << ',' << label(k) << ','
         << t.type_index << ',' << csv_field(t.label) << ',' << s->t << ',' << s->ac
         << ',' << s->bc << ',' << s->gi << '\n';
    }
    auto const *g = report.group(k);
    os << "summary," << report.degree << ',' << k << ',' << label(k) << ",,,"
       << g->t << ',' << g->ac << ',' << g->bc << ',' << g->gi << '\n';
  }
  auto const &d = report.degree_totals;
  os << "total," << report.degree << ",,,,," << d.total << ',' << d.ac << ',' << d.bc
     << ',' << d.gi << '\n';
  return os.str();
}

json to_json(DegreeReport const &report)
{
  json j;
  j["schema"] = "hge.degree_report/1";
  j["degree"] = report.degree;
  j["transitive_total"] = report.transitive_total;
  j["holomorph_bound"] = report.holomorph_bound;
  j["count_max"] = report.count_max;
  j["pruned"] = report.pruned;

  j["types"] = json::array();
  for (auto const &t : report.types) {
    json gens = json::array();
    for (auto const &x : t.representative.generators())
      gens.push_back(x.to_cycles());
    j["types"].push_back({{"index", t.type_index},
                          {"label", t.label},
                          {"generators", gens},
                          {"holomorph_order", t.holomorph_order},
                          {"orbit_size", t.orbit_size}});
  }

  j["groups"] = json::array();
  for (auto const &[k, label] : report.group_labels) {
    json g = {{"index", k}, {"label", label}};
    bool const processed =
        std::find(report.processed.begin(), report.processed.end(), k) !=
        report.processed.end();
    g["processed"] = processed;
    if (auto const *t = report.group(k)) {
      g["intermediate_fields"] = report.intermediate_field_counts.at(k);
      g["totals"] = {{"T", t->t}, {"ac", t->ac}, {"bc", t->bc}, {"gi", t->gi}};
    }
    j["groups"].push_back(std::move(g));
  }

  j["summaries"] = json::array();
  for (auto const &s : report.summaries)
    j["summaries"].push_back({{"group", s.group_index},
                              {"type", s.type_index},
                              {"T", s.t},
                              {"ac", s.ac},
                              {"bc", s.bc},
                              {"gi", s.gi}});

  j["records"] = json::array();
  for (auto const &r : report.records) {
    json gens = json::array();
    for (auto const &x : r.n.generators())
      gens.push_back(x.to_cycles());
    j["records"].push_back({{"id", r.id},
                            {"group", r.group_index},
                            {"type", r.type_index},
                            {"orbit_member", r.orbit_member},
                            {"generators", gens},
                            {"almost_classical", r.almost_classical},
                            {"bijective", r.bijective},
                            {"contained_in_G", r.contained_in_g},
                            {"sub_g_stable", r.sub_g_stable_count}});
  }

  j["classes"] = json::array();
  for (auto const &c : report.classes)
    j["classes"].push_back(
        {{"group", c.group_index}, {"type", c.type_index}, {"members", c.member_ids}});

  auto const &d = report.degree_totals;
  j["totals"] = {{"total", d.total},         {"ac", d.ac}, {"bc", d.bc},
                 {"bc_not_ac", d.bc_not_ac}, {"gi", d.gi}, {"galois_gi", d.galois_gi}};
  return j;
}

} // namespace

std::string render(DegreeReport const &report, Format format)
{
  switch (format) {
  case Format::text:
    return render_text(report);
  case Format::csv:
    return render_csv(report);
  case Format::json:
    return to_json(report).dump(2) + '\n';
  }
  throw std::invalid_argument("unknown output format");
}

DegreeReport parse_report_json(std::string_view text)
{
  json const j = json::parse(text);
  if (j.at("schema") != "hge.degree_report/1")
    throw std::invalid_argument("unsupported report schema");
  DegreeReport report;
  report.degree = j.at("degree");
  report.transitive_total = j.at("transitive_total");
  report.holomorph_bound = j.at("holomorph_bound");
  report.count_max = j.at("count_max");
  report.pruned = j.at("pruned");
  int const g = report.degree;

  auto parse_gens = [g](json const &list) {
    std::vector<Permutation> gens;
    for (auto const &c : list)
      gens.push_back(parse_cycles(c.get<std::string>(), g));
    return gens;
  };

  for (auto const &t : j.at("types")) {
    TypeInfo info;
    info.type_index = t.at("index");
    info.label = t.at("label");
    info.representative = PermutationGroup(g, parse_gens(t.at("generators")));
    info.holomorph_order = t.at("holomorph_order");
    info.orbit_size = t.at("orbit_size");
    report.types.push_back(std::move(info));
  }
  report.triv = static_cast<int>(report.types.size());

  for (auto const &grp : j.at("groups")) {
    int const k = grp.at("index");
    report.group_labels[k] = grp.at("label");
    if (grp.at("processed"))
      report.processed.push_back(k);
    if (grp.contains("totals")) {
      auto const &t = grp.at("totals");
      report.useful.push_back(k);
      report.intermediate_field_counts[k] = grp.at("intermediate_fields");
      report.group_totals.push_back({k, t.at("T"), t.at("ac"), t.at("bc"), t.at("gi")});
    }
  }

  for (auto const &s : j.at("summaries"))
    report.summaries.push_back(
        {s.at("group"), s.at("type"), s.at("T"), s.at("ac"), s.at("bc"), s.at("gi")});

  for (auto const &r : j.at("records")) {
    StructureRecord rec;
    rec.id = r.at("id");
    rec.group_index = r.at("group");
    rec.type_index = r.at("type");
    rec.orbit_member = r.at("orbit_member");
    rec.n = PermutationGroup(g, parse_gens(r.at("generators")));
    rec.almost_classical = r.at("almost_classical");
    rec.bijective = r.at("bijective");
    rec.contained_in_g = r.at("contained_in_G");
    rec.sub_g_stable_count = r.at("sub_g_stable");
    report.records.push_back(std::move(rec));
  }

  for (auto const &c : j.at("classes"))
    report.classes.push_back(
        {c.at("group"), c.at("type"), c.at("members").get<std::vector<int>>()});

  auto const &d = j.at("totals");
  report.degree_totals = {d.at("total"), d.at("ac"),  d.at("bc"),
                          d.at("bc_not_ac"), d.at("gi"), d.at("galois_gi")};
  return report;
}

std::string render_summary(std::vector<DegreeReport> const &reports,
                           std::vector<RunMetrics> const &metrics)
{
  std::ostringstream os;
  os << std::right << std::setw(6) << "degree" << std::setw(8) << "total"
     << std::setw(6) << "Max" << std::setw(7) << "types" << std::setw(7) << "HG"
     << std::setw(6) << "a-c" << std::setw(6) << "BC" << std::setw(10) << "not a-c"
     << std::setw(7) << "G-iso" << std::setw(8) << "Galois" << std::setw(10)
     << "time(s)" << std::setw(12) << "peak(MB)*" << '\n';
  for (std::size_t i = 0; i < reports.size(); ++i) {
    auto const &r = reports[i];
    auto const &d = r.degree_totals;
    os << std::setw(6) << r.degree << std::setw(8) << r.transitive_total << std::setw(6)
       << r.count_max << std::setw(7) << r.types.size() << std::setw(7) << d.total
       << std::setw(6) << d.ac << std::setw(6) << d.bc << std::setw(10) << d.bc_not_ac
       << std::setw(7) << d.gi << std::setw(8) << d.galois_gi;
    if (i < metrics.size())
      os << std::setw(10) << std::fixed << std::setprecision(2)
         << metrics[i].wall_time_seconds << std::setw(12) << std::setprecision(1)
         << static_cast<double>(metrics[i].peak_memory_estimate_bytes) / (1024.0 * 1024.0);
    os << '\n';
  }
  os << "* peak resident set size of the whole process (estimate)\n";
  return os.str();
}

} // namespace hge
