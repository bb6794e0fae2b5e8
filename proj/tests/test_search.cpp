#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "egs/pipeline.hpp"
#include "support.hpp"

namespace egs {
namespace {

namespace fs = std::filesystem;

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("egs_test_" + std::to_string(::getpid()) + "_" + name);
}

fs::path write_file(const std::string& name, const std::string& text) {
  auto p = temp_path(name);
  std::ofstream(p) << text;
  return p;
}

TEST(Ingest, LenientSkipsMalformedLines) {
  std::istringstream in("C~\nnot graph6!\n\n>>graph6<<Dhc\r\n> comment\n@\n");
  auto r = ingest_graph6(in);
  ASSERT_EQ(r.graphs.size(), 3u);
  EXPECT_EQ(r.graphs[1], testing::cycle(5));
  ASSERT_EQ(r.errors.size(), 1u);
  EXPECT_EQ(r.errors[0].line, 2u);
}

TEST(Ingest, SingleK4) {
  std::istringstream in("C~\n");
  auto r = ingest_graph6(in);
  ASSERT_EQ(r.graphs.size(), 1u);
  EXPECT_EQ(r.graphs[0], testing::complete(4));
}

TEST(Ingest, EmptyInput) {
  std::istringstream in("");
  auto r = ingest_graph6(in);
  EXPECT_TRUE(r.graphs.empty());
  EXPECT_TRUE(r.errors.empty());
}

TEST(Ingest, StrictAbortsWithLine) {
  std::istringstream in("C~\nC~~\n@\n");
  try {
    ingest_graph6(in, true);
    FAIL() << "expected IngestAborted";
  } catch (const IngestAborted& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Filters, NamesRoundTrip) {
  for (auto f : kFilterOrder) EXPECT_EQ(parse_filter(filter_name(f)), f);
  EXPECT_THROW(parse_filter("girth"), std::invalid_argument);
  auto s = FilterSet::all();
  s.erase(Filter::edge_minimal);
  EXPECT_FALSE(s.contains(Filter::edge_minimal));
  EXPECT_TRUE(s.contains(Filter::min_degree));
  EXPECT_EQ(parse_orders("4..9").hi, 9u);
  EXPECT_EQ(parse_orders("7").lo, 7u);
  EXPECT_THROW(parse_orders("4..x"), std::invalid_argument);
}

TEST(Config, Validation) {
  SearchConfig cfg;
  cfg.orders = {9, 4};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.orders = {4, 9};
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.jobs = 1;
  cfg.max_exponent = 1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.max_exponent = 6;
  cfg.resume = true;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Classify, SpecExamples) {
  SearchConfig cfg;
  auto k4 = classify(testing::complete(4), cfg);
  EXPECT_EQ(k4.verdict, Verdict::witnessed);
  EXPECT_EQ(k4.cycle->length, 4u);

  auto k5 = classify(testing::complete(5), cfg);
  EXPECT_EQ(k5.verdict, Verdict::rejected);
  EXPECT_EQ(k5.filter, Filter::regular_reject);
  cfg.filters.erase(Filter::regular_reject);
  EXPECT_EQ(classify(testing::complete(5), cfg).filter, Filter::high_deg_independent);

  SearchConfig plain;
  auto c5 = classify(testing::cycle(5), plain);
  EXPECT_EQ(c5.verdict, Verdict::rejected);
  EXPECT_EQ(c5.filter, Filter::min_degree);
}

TEST(Classify, NoFiltersIsPureCycleSearch) {
  SearchConfig cfg;
  cfg.filters = FilterSet::none();
  auto k5 = classify(testing::complete(5), cfg);
  EXPECT_EQ(k5.verdict, Verdict::witnessed);
  // Still never a survivor below minimum degree 3.
  auto c5 = classify(testing::cycle(5), cfg);
  EXPECT_EQ(c5.verdict, Verdict::rejected);
  EXPECT_EQ(c5.filter, Filter::min_degree);
}

TEST(Classify, SurvivorWithSmallExponentCap) {
  // Petersen's only power-of-two cycles have length 8.
  SearchConfig cfg;
  cfg.max_exponent = 2;
  cfg.filters = FilterSet::none();
  EXPECT_EQ(classify(testing::petersen(), cfg).verdict, Verdict::survivor);
}

TEST(Summary, Conservation) {
  OrderSummary o;
  SearchConfig cfg;
  for (const auto& g : {testing::complete(4), testing::complete(5), testing::cycle(5), testing::petersen()})
    o.record(classify(g, cfg));
  EXPECT_EQ(o.examined, 4u);
  EXPECT_TRUE(o.conserved());
}

TEST(Report, ClassificationRecord) {
  SearchConfig cfg;
  auto j = classification_record(classify(testing::complete(4), cfg));
  EXPECT_EQ(j["format_version"], 1);
  EXPECT_EQ(j["graph6"], "C~");
  EXPECT_EQ(j["verdict"], "witnessed");
  EXPECT_TRUE(j["filter"].is_null());
  EXPECT_EQ(j["cycle_length"], 4);
  EXPECT_EQ(j["witness"].size(), 4u);
}

TEST(Report, FilterRecord) {
  auto g = testing::complete_bipartite(3, 4);
  auto j = filter_record(encode_graph6(g), filter_report(g));
  EXPECT_EQ(j["undominated_vertex"], 3);
  EXPECT_EQ(j["cubic_fraction_ok"], true);
  EXPECT_EQ(j["v3_count"], 4);
  EXPECT_TRUE(j["adjacent_high_pair"].is_null());
}

TEST(RunSearch, IngestFiveCycle) {
  auto p = write_file("c5.g6", "Dhc\n");
  SearchConfig cfg;
  cfg.ingest = p.string();
  cfg.orders = {1, 62};
  auto s = run_search(cfg);
  ASSERT_EQ(s.orders.size(), 1u);
  EXPECT_EQ(s.orders[0].examined, 1u);
  EXPECT_EQ(s.orders[0].rejected.at(Filter::min_degree), 1u);
  fs::remove(p);
}

TEST(RunSearch, IngestRespectsOrderRangeAndReportsErrors) {
  auto p = write_file("mixed.g6", "C~\nbad line\nDhc\nI?h]@eOWG\n");
  SearchConfig cfg;
  cfg.ingest = p.string();
  cfg.orders = {4, 5};
  auto s = run_search(cfg);
  ASSERT_EQ(s.orders.size(), 2u);
  EXPECT_EQ(s.orders[0].n, 4u);
  EXPECT_EQ(s.orders[1].n, 5u);
  ASSERT_EQ(s.ingest_errors.size(), 1u);
  EXPECT_EQ(s.ingest_errors[0].line, 2u);
  cfg.strict_ingest = true;
  EXPECT_THROW(run_search(cfg), IngestAborted);
  fs::remove(p);
}

TEST(RunSearch, CubicSkipsOddOrders) {
  SearchConfig cfg;
  cfg.mode = GenMode::cubic_connected;
  cfg.orders = {4, 9};
  auto s = run_search(cfg);
  ASSERT_EQ(s.orders.size(), 3u);
  EXPECT_EQ(s.orders[2].n, 8u);
  EXPECT_EQ(s.orders[2].examined, 5u);
  EXPECT_EQ(s.survivor_count(), 0u);
}

TEST(RunSearch, ParallelDeterminism) {
  SearchConfig mindeg3;
  mindeg3.orders = {4, 8};
  // Cubic graphs without 4-cycles survive when only 4-cycles are sought.
  SearchConfig cubic;
  cubic.mode = GenMode::cubic_connected;
  cubic.orders = {4, 12};
  cubic.max_exponent = 2;
  for (auto cfg : {mindeg3, cubic}) {
    const auto one = summary_to_json(run_search(cfg), false).dump();
    cfg.jobs = 5;
    const auto many = summary_to_json(run_search(cfg), false).dump();
    EXPECT_EQ(one, many);
  }
  std::size_t no_four_cycle = 0;
  for (std::size_t n = 4; n <= 12; n += 2)
    generate({n, GenMode::cubic_connected},
             [&](const Graph& g) { no_four_cycle += testing::cycle_lengths_dp(g).count(4) == 0; });
  EXPECT_EQ(run_search(cubic).survivor_count(), no_four_cycle);
  EXPECT_GT(no_four_cycle, 0u);
}

TEST(RunSearch, CheckpointAndResume) {
  auto out = temp_path("summary.json");
  fs::remove(out);
  SearchConfig cfg;
  cfg.orders = {4, 6};
  cfg.out = out;
  auto first = run_search(cfg);
  ASSERT_TRUE(fs::exists(out));
  auto stored = read_json_file(out);
  EXPECT_EQ(stored["orders"].size(), 3u);
  EXPECT_TRUE(stored.contains("timing"));

  // Extend the range: completed orders come from the file.
  cfg.orders = {4, 7};
  cfg.resume = true;
  std::vector<std::size_t> seen;
  auto second = run_search(cfg, [&](const OrderSummary& o) { seen.push_back(o.n); });
  EXPECT_EQ(second.orders.size(), 4u);
  EXPECT_EQ(second.orders[3].examined, 150u);
  EXPECT_DOUBLE_EQ(second.orders[0].wall_seconds, first.orders[0].wall_seconds);

  cfg.orders = {4, 7};
  cfg.max_exponent = 3;
  EXPECT_THROW(run_search(cfg), std::runtime_error) << "config mismatch";
  fs::remove(out);
}

TEST(Report, SummaryRoundTrip) {
  SearchConfig cfg;
  cfg.mode = GenMode::cubic_connected;
  cfg.orders = {4, 12};
  cfg.max_exponent = 2;
  auto s = run_search(cfg);
  auto doc = summary_to_json(s);
  auto back = orders_from_json(json::parse(doc.dump()));
  ASSERT_EQ(back.size(), s.orders.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].examined, s.orders[i].examined);
    EXPECT_EQ(back[i].rejected, s.orders[i].rejected);
    EXPECT_EQ(back[i].witnessed, s.orders[i].witnessed);
    EXPECT_EQ(back[i].survivors, s.orders[i].survivors);
    EXPECT_TRUE(back[i].conserved());
  }
  EXPECT_NE(stats_table(doc).find("survivor n=10 " + encode_graph6(canonical_form(testing::petersen()).graph)),
            std::string::npos);
}

// A graph rejected by a filter either carries a power-of-two cycle or
// really violates that filter's condition when recomputed from scratch.
TEST(Soundness, RejectionsAreJustified) {
  SearchConfig cfg;
  for (std::size_t n = 4; n <= 8; ++n) {
    generate({n, GenMode::all_connected}, [&](const Graph& g) {
      auto c = classify(g, cfg);
      if (c.verdict == Verdict::witnessed) {
        ASSERT_TRUE(verify_witness(g, *c.cycle));
      }
      if (c.verdict != Verdict::rejected) return;
      const auto fresh = parse_graph6(c.graph6);
      if (find_power_of_two_cycle(fresh)) return;
      const auto r = filter_report(fresh);
      switch (*c.filter) {
        case Filter::min_degree: ASSERT_FALSE(r.min_degree_ok); break;
        case Filter::regular_reject: ASSERT_TRUE(r.regular_rejected); break;
        case Filter::high_deg_independent: ASSERT_FALSE(r.high_deg_independent); break;
        case Filter::cubic_fraction: ASSERT_FALSE(r.cubic_fraction_ok); break;
        case Filter::deg3_dominating: ASSERT_FALSE(r.deg3_dominating); break;
        case Filter::edge_minimal: ASSERT_FALSE(r.edge_minimal); break;
      }
    });
  }
}

}  // namespace
}  // namespace egs
