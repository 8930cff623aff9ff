// Command line front end: enumeration, table reproduction and checks.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hge/catalog.hpp"
#include "hge/enumerator.hpp"
#include "hge/golden.hpp"
#include "hge/metrics.hpp"
#include "hge/render.hpp"
#include "hge/worked_example.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int run_enumerate(int degree, std::string const &format_name, std::string const &out,
                  bool no_prune, int parallel)
{
  auto format = hge::parse_format(format_name);
  if (!format) {
    std::cerr << "unknown format '" << format_name << "' (text, csv, json)\n";
    return kExitUsage;
  }
  hge::EnumerateOptions options;
  options.prune = !no_prune;
  options.parallel = parallel;
  auto report = hge::enumerate(degree, hge::default_catalog(), options);
  auto text = hge::render(report, *format);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << out << '\n';
      return kExitFailure;
    }
    file << text;
  }
  return kExitOk;
}

int run_verify(int degree, bool strong)
{
  auto report = hge::verify_catalog(hge::default_catalog(), degree,
                                    strong ? hge::VerifyLevel::strong
                                           : hge::VerifyLevel::basic);
  std::cout << "degree " << degree << ": " << report.entry_count << " entries (expected "
            << report.expected_count << ")" << (report.strong_checked ? ", strong" : "")
            << '\n';
  for (auto const &f : report.failures)
    std::cout << "FAIL " << f << '\n';
  std::cout << (report.ok() ? "OK" : "FAILED") << '\n';
  return report.ok() ? kExitOk : kExitFailure;
}

int run_tables(int degree, int parallel)
{
  auto const &golden = hge::default_golden();
  auto it = golden.find(degree);
  if (it == golden.end()) {
    std::cerr << "no golden table for degree " << degree << '\n';
    return kExitUsage;
  }
  hge::EnumerateOptions options;
  options.parallel = parallel;
  auto report = hge::enumerate(degree, hge::default_catalog(), options);
  std::cout << hge::render(report, hge::Format::text);
  auto diffs = hge::compare_golden(report, it->second);
  for (auto const &d : diffs)
    std::cout << "DIFF " << d.to_string() << '\n';
  std::cout << (diffs.empty() ? "golden: match" : "golden: " + std::to_string(diffs.size()) +
                                                      " differences")
            << '\n';
  return diffs.empty() ? kExitOk : kExitFailure;
}

int run_summary(int max_degree, int parallel)
{
  auto catalog = hge::default_catalog();
  auto const &golden = hge::default_golden();
  std::vector<hge::DegreeReport> reports;
  std::vector<hge::RunMetrics> metrics;
  bool ok = true;
  hge::EnumerateOptions options;
  options.parallel = parallel;
  for (int g = hge::kMinEnumerationDegree; g <= max_degree; ++g) {
    hge::Stopwatch watch;
    reports.push_back(hge::enumerate(g, catalog, options));
    metrics.push_back({g, watch.seconds(), hge::peak_memory_estimate_bytes()});
    if (auto it = golden.find(g); it != golden.end())
      for (auto const &d : hge::compare_golden(reports.back(), it->second)) {
        std::cerr << "degree " << g << " DIFF " << d.to_string() << '\n';
        ok = false;
      }
  }
  std::cout << hge::render_summary(reports, metrics);
  return ok ? kExitOk : kExitFailure;
}

int run_p2check(int p, bool allow_large)
{
  auto r = hge::p2_witness_check(p, allow_large);
  std::cout << "p = " << p << '\n'
            << "Hol(C_" << p * p << ") order " << r.cyclic_holomorph_order << ": "
            << r.subgroups_checked << " subgroups, " << r.transitive_subgroups
            << " transitive, " << r.transitive_with_witness
            << " with an element of order " << p * p << " -> "
            << (r.cyclic_ok() ? "PASS" : "FAIL") << '\n'
            << "Hol(C_" << p << " x C_" << p << ") order " << r.elementary_holomorph_order
            << ": max element order " << r.elementary_max_element_order << " -> "
            << (r.elementary_ok() ? "PASS" : "FAIL") << '\n';
  return r.ok() ? kExitOk : kExitFailure;
}

int run_example()
{
  auto r = hge::check_worked_example(hge::default_catalog());
  std::cout << r.to_string() << (r.ok() ? "PASS" : "FAIL") << '\n';
  return r.ok() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Enumerate and classify Hopf Galois structures of degree 2..11"};
  app.require_subcommand(1);

  int degree = 0;
  std::string format = "text";
  std::string out;
  bool no_prune = false;
  int parallel = 1;
  auto *enumerate = app.add_subcommand("enumerate", "Enumerate all structures of one degree");
  enumerate->add_option("--degree", degree, "Degree g")->required()->check(CLI::Range(2, 11));
  enumerate->add_option("--format", format, "text, csv or json");
  enumerate->add_option("--out", out, "Output file (default: standard output)");
  enumerate->add_flag("--no-prune", no_prune, "Do not skip groups above the holomorph bound");
  enumerate->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1, 256));

  bool strong = false;
  auto *verify = app.add_subcommand("verify-catalog", "Verify the transitive group catalog");
  verify->add_option("--degree", degree, "Degree g")->required()->check(CLI::Range(1, 11));
  verify->add_flag("--strong", strong, "Also check pairwise non-conjugacy");

  auto *tables = app.add_subcommand("tables", "Render one degree and compare with the golden tables");
  tables->add_option("--degree", degree, "Degree g")->required()->check(CLI::Range(2, 11));
  tables->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1, 256));

  int max_degree = 0;
  auto *summary = app.add_subcommand("summary", "Aggregates and run metrics for degrees 2..N");
  summary->add_option("--max-degree", max_degree, "Largest degree")->required()->check(CLI::Range(2, 11));
  summary->add_option("--parallel", parallel, "Worker threads")->check(CLI::Range(1, 256));

  int p = 0;
  bool allow_large = false;
  auto *p2 = app.add_subcommand("p2check", "Order p^2 witness checks");
  p2->add_option("--p", p, "Odd prime")->required()->check(CLI::IsMember({3, 5}));
  p2->add_flag("--allow-large", allow_large, "Permit the larger p = 5 search");

  auto *example = app.add_subcommand("example-8t3", "Check the worked 8T3 example");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate)
      return run_enumerate(degree, format, out, no_prune, parallel);
    if (*verify)
      return run_verify(degree, strong);
    if (*tables)
      return run_tables(degree, parallel);
    if (*summary)
      return run_summary(max_degree, parallel);
    if (*p2) {
      if (p == 5 && !allow_large) {
        std::cerr << "p = 5 needs --allow-large\n";
        return kExitUsage;
      }
      return run_p2check(p, allow_large);
    }
    if (*example)
      return run_example();
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
