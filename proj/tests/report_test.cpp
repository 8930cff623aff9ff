#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"

#include "hge/catalog.hpp"
#include "hge/enumerator.hpp"
#include "hge/golden.hpp"
#include "hge/metrics.hpp"
#include "hge/render.hpp"

using namespace hge;
using testing::HasSubstr;
using testing::MatchesRegex;

namespace {

Catalog const &catalog()
{
  static Catalog const c = default_catalog();
  return c;
}

DegreeReport const &report(int degree)
{
  static std::map<int, DegreeReport> cache;
  auto it = cache.find(degree);
  if (it == cache.end())
    it = cache.emplace(degree, enumerate(degree, catalog())).first;
  return it->second;
}

std::vector<std::string> lines(std::string const &text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out.push_back(line);
  return out;
}

std::string row_for(std::string const &text, std::string const &group)
{
  for (auto const &line : lines(text))
    if (line.rfind(group + " ", 0) == 0)
      return line;
  return {};
}

} // namespace

TEST(RenderTest, ParsesFormatNames)
{
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_FALSE(parse_format("xml").has_value());
}

TEST(RenderTest, TextRowsCarryCellCounts)
{
  auto text4 = render(report(4), Format::text);
  auto row = row_for(text4, "4T3");
  ASSERT_FALSE(row.empty()) << text4;
  EXPECT_THAT(row, MatchesRegex(".*\\|   2   2   2   2 $")) << "summary block of 4T3";

  auto text10 = render(report(10), Format::text);
  auto row10 = row_for(text10, "10T2");
  ASSERT_FALSE(row10.empty()) << text10;
  EXPECT_THAT(row10, MatchesRegex("10T2[^|]*\\|   5   0   0   1 .*")) << "first type block";
  EXPECT_THAT(text10, HasSubstr("Totals: HG 27, a-c 11, BC 17"));
}

TEST(RenderTest, TextHasOneRowPerUsefulGroup)
{
  for (int degree : {4, 6, 8}) {
    auto text = render(report(degree), Format::text);
    auto all = lines(text);
    // title, two header lines, rows, totals
    EXPECT_EQ(all.size(), report(degree).useful.size() + 4) << text;
  }
}

TEST(RenderTest, EmptyReportRendersHeadersOnly)
{
  DegreeReport empty;
  empty.degree = 4;
  empty.types = report(4).types;
  auto text = render(empty, Format::text);
  EXPECT_EQ(lines(text).size(), 3u) << text;
  EXPECT_THAT(text, HasSubstr("Type " + report(4).types.front().label));
  EXPECT_THAT(text, testing::Not(HasSubstr("Totals")));
  auto csv = lines(render(empty, Format::csv));
  ASSERT_EQ(csv.size(), 2u);
  EXPECT_EQ(csv[0], "kind,degree,group,group_label,type,type_label,T,ac,bc,gi");
  EXPECT_EQ(csv[1], "total,4,,,,,0,0,0,0");
}

TEST(RenderTest, CsvRows)
{
  auto csv = lines(render(report(6), Format::csv));
  EXPECT_THAT(csv, testing::Contains(MatchesRegex("cell,6,2,[^,]*,1,[^,]*,3,0,0,1")))
      << "6T2 cyclic cell";
  EXPECT_THAT(csv, testing::Contains(MatchesRegex("summary,6,1,[^,]*,,,3,1,2,3")));
  EXPECT_EQ(csv.back(), "total,6,,,,,15,7,9,13") << "degree 6 totals";
}

TEST(RenderTest, JsonRoundTripIsLossless)
{
  for (int degree : {4, 8, 9}) {
    auto const &original = report(degree);
    auto json = render(original, Format::json);
    auto parsed = parse_report_json(json);
    EXPECT_EQ(render(parsed, Format::json), json) << "degree " << degree;
    ASSERT_EQ(parsed.summaries.size(), original.summaries.size());
    for (std::size_t i = 0; i < parsed.summaries.size(); ++i) {
      EXPECT_EQ(parsed.summaries[i].group_index, original.summaries[i].group_index);
      EXPECT_EQ(parsed.summaries[i].type_index, original.summaries[i].type_index);
      EXPECT_EQ(parsed.summaries[i].t, original.summaries[i].t);
      EXPECT_EQ(parsed.summaries[i].ac, original.summaries[i].ac);
      EXPECT_EQ(parsed.summaries[i].bc, original.summaries[i].bc);
      EXPECT_EQ(parsed.summaries[i].gi, original.summaries[i].gi);
    }
    ASSERT_EQ(parsed.classes.size(), original.classes.size());
    for (std::size_t i = 0; i < parsed.classes.size(); ++i)
      EXPECT_EQ(parsed.classes[i].member_ids, original.classes[i].member_ids);
    EXPECT_EQ(parsed.degree_totals, original.degree_totals);
    EXPECT_EQ(render(parsed, Format::text), render(original, Format::text));
    EXPECT_TRUE(compare_golden(parsed, default_golden().at(degree)).empty());
  }
  EXPECT_ANY_THROW(parse_report_json("{\"schema\": \"other\"}"));
}

TEST(GoldenTest, EmbeddedTablesAreConsistent)
{
  auto const &golden = default_golden();
  for (int degree = 2; degree <= 11; ++degree) {
    ASSERT_TRUE(golden.count(degree)) << "degree " << degree;
    auto problems = validate_golden(golden.at(degree));
    EXPECT_TRUE(problems.empty()) << degree << ": " << (problems.empty() ? "" : problems.front());
  }
  for (int degree : {4, 6, 8, 9, 10})
    EXPECT_TRUE(golden.at(degree).has_rows()) << degree;
  EXPECT_FALSE(golden.at(8).partitions.empty()) << "degree-8 class partitions";
}

TEST(GoldenTest, ReportsMatchGolden)
{
  for (int degree = 2; degree <= 10; ++degree) {
    auto diffs = compare_golden(report(degree), default_golden().at(degree));
    EXPECT_TRUE(diffs.empty()) << degree << ": " << diffs.size() << " diffs, first "
                               << (diffs.empty() ? "" : diffs.front().to_string());
  }
}

TEST(GoldenTest, PerturbedCellGivesOneDiff)
{
  auto golden = default_golden().at(6);
  auto &cell = golden.rows.at({2, 1});
  cell.t += 1;
  auto diffs = compare_golden(report(6), golden);
  ASSERT_EQ(diffs.size(), 1u);
  EXPECT_EQ(diffs[0].group_index, 2);
  EXPECT_EQ(diffs[0].type_index, 1);
  EXPECT_EQ(diffs[0].field, "T");
  EXPECT_EQ(diffs[0].expected, "4");
  EXPECT_EQ(diffs[0].actual, "3");
}

TEST(GoldenTest, PerturbedPartitionAndTotalsAreReported)
{
  auto golden = default_golden().at(8);
  golden.partitions.at({3, 4}) = {6, 6, 6, 6, 6, 12};
  auto diffs = compare_golden(report(8), golden);
  ASSERT_EQ(diffs.size(), 1u);
  EXPECT_EQ(diffs[0].expected, "6+6+6+6+6+12");
  EXPECT_EQ(diffs[0].actual, "6+6+6+6+6+6+6");

  auto totals = default_golden().at(9);
  totals.degree_totals.gi += 1;
  EXPECT_EQ(compare_golden(report(9), totals).size(), 1u);
  EXPECT_THROW(compare_golden(report(9), default_golden().at(8)), std::invalid_argument);
}

TEST(GoldenTest, LoaderRejectsMalformedLines)
{
  EXPECT_ANY_THROW(load_golden_text("cell 1 type 1 1 1 1 1\n")) << "cell before degree";
  EXPECT_ANY_THROW(load_golden_text("degree 4 order 24 transitive 5 max x types 2\n"));
  auto ok = load_golden_text("degree 2 order 2 transitive 1 max 1 types 1\ntotals 1 1 1 0 1 1\n");
  EXPECT_EQ(ok.at(2).degree_totals, (DegreeTotals{1, 1, 1, 0, 1, 1}));
}

TEST(SummaryTest, RendersOneLinePerDegree)
{
  std::vector<DegreeReport> reports;
  std::vector<RunMetrics> metrics;
  for (int degree = 2; degree <= 7; ++degree) {
    reports.push_back(report(degree));
    metrics.push_back({degree, 0.5, 1024 * 1024});
  }
  auto text = lines(render_summary(reports, metrics));
  ASSERT_EQ(text.size(), 8u);
  std::vector<int> totals;
  for (std::size_t i = 1; i <= 6; ++i) {
    std::istringstream row(text[i]);
    int degree, transitive, max, types, hg;
    row >> degree >> transitive >> max >> types >> hg;
    totals.push_back(hg);
  }
  EXPECT_EQ(totals, (std::vector<int>{1, 2, 10, 3, 15, 4}));
}

TEST(MetricsTest, PeakMemoryIsReported)
{
  EXPECT_GT(peak_memory_estimate_bytes(), 0u);
  Stopwatch watch;
  EXPECT_GE(watch.seconds(), 0.0);
}
