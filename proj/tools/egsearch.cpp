// Command-line front end: check, filter, gen, search, stats.
//
// Exit status: 0 when no survivor was found, 2 when survivors exist, 1 on
// any operational error (bad arguments, I/O, strict ingest failure).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egs/egs.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitSurvivors = 2;

struct Input {
  std::unique_ptr<std::ifstream> file;
  std::istream* stream = nullptr;
};

Input open_input(const std::string& path) {
  Input in;
  if (path == "-") {
    in.stream = &std::cin;
    return in;
  }
  in.file = std::make_unique<std::ifstream>(path);
  if (!*in.file) throw std::runtime_error("cannot open " + path);
  in.stream = in.file.get();
  return in;
}

void report_errors(const egs::Graph6Reader& reader) {
  for (const auto& e : reader.errors())
    std::cerr << "egsearch: line " << e.line << ": " << e.message << '\n';
}

int run_check(const std::string& path, const egs::SearchConfig& cfg) {
  auto in = open_input(path);
  egs::Graph6Reader reader(*in.stream, cfg.strict_ingest);
  bool survivors = false;
  while (auto g = reader.next()) {
    auto c = egs::classify(*g, cfg);
    survivors |= c.verdict == egs::Verdict::survivor;
    std::cout << egs::classification_record(c).dump() << '\n';
  }
  report_errors(reader);
  return survivors ? kExitSurvivors : kExitClean;
}

int run_filter(const std::string& path, bool strict) {
  auto in = open_input(path);
  egs::Graph6Reader reader(*in.stream, strict);
  while (auto g = reader.next())
    std::cout << egs::filter_record(egs::encode_graph6(*g), egs::filter_report(*g)).dump() << '\n';
  report_errors(reader);
  return kExitClean;
}

int run_gen(std::size_t n, const std::string& mode, std::size_t part, std::size_t parts) {
  egs::GeneratorSpec spec{n, egs::parse_mode(mode)};
  egs::generate(spec, [](const egs::Graph& g) { std::cout << egs::encode_graph6(g) << '\n'; },
                egs::Partition{part, parts});
  return kExitClean;
}

int run_search(egs::SearchConfig cfg, const std::string& orders, const std::string& mode,
               const std::vector<std::string>& disabled, bool quiet) {
  cfg.orders = egs::parse_orders(orders);
  cfg.mode = egs::parse_mode(mode);
  for (const auto& name : disabled) cfg.filters.erase(egs::parse_filter(name));
  auto summary = egs::run_search(cfg, [&](const egs::OrderSummary& o) {
    if (quiet) return;
    std::cerr << "n=" << o.n << " examined " << o.examined << ", survivors " << o.survivors.size()
              << " (" << o.wall_seconds << " s)\n";
  });
  for (const auto& e : summary.ingest_errors)
    std::cerr << "egsearch: line " << e.line << ": " << e.message << '\n';
  if (!cfg.out) std::cout << egs::summary_to_json(summary).dump(2) << '\n';
  return summary.survivor_count() > 0 ? kExitSurvivors : kExitClean;
}

int run_stats(const std::string& path) {
  auto doc = egs::read_json_file(path);
  std::cout << egs::stats_table(doc);
  for (const auto& o : egs::orders_from_json(doc))
    if (!o.survivors.empty()) return kExitSurvivors;
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for graphs of minimum degree 3 without power-of-two cycles"};
  app.require_subcommand(1);

  egs::SearchConfig cfg;
  std::string input = "-";
  std::string mode = "mindeg3";
  std::string orders;
  std::vector<std::string> disabled;
  std::size_t gen_n = 0, part = 0, parts = 1;
  bool quiet = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-exponent", cfg.max_exponent, "largest k tried for cycles of length 2^k")
        ->check(CLI::Range(2, 6));
    sub->add_flag("--strict", cfg.strict_ingest, "abort on the first malformed graph6 line");
  };

  auto* check = app.add_subcommand("check", "classify each graph6 line");
  check->add_option("input", input, "graph6 file, or - for stdin")->required();
  check->add_option("--disable-filter", disabled, "skip a filter (repeatable)");
  add_common(check);

  auto* filter = app.add_subcommand("filter", "report every structural predicate per graph");
  filter->add_option("input", input, "graph6 file, or - for stdin")->required();
  filter->add_flag("--strict", cfg.strict_ingest, "abort on the first malformed graph6 line");

  auto* gen = app.add_subcommand("gen", "print one representative per isomorphism class");
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--mode", mode, "cubic, mindeg3 or connected");
  gen->add_option("--part", part, "this worker's share");
  gen->add_option("--parts", parts, "number of shares")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "classify a whole order range");
  search->add_option("--orders", orders, "a..b or a single order")->required();
  search->add_option("--mode", mode, "cubic, mindeg3 or connected");
  std::string ingest;
  search->add_option("--ingest", ingest, "read graphs from a graph6 file instead of generating");
  search->add_option("--disable-filter", disabled, "skip a filter (repeatable)");
  search->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  std::string out;
  search->add_option("--out", out, "summary path, rewritten after every order");
  search->add_flag("--resume", cfg.resume, "reuse completed orders from --out");
  search->add_flag("-q,--quiet", quiet, "no progress lines");
  add_common(search);

  auto* stats = app.add_subcommand("stats", "tabulate a summary document");
  std::string summary_path;
  stats->add_option("summary", summary_path, "summary file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    if (*check) {
      for (const auto& name : disabled) cfg.filters.erase(egs::parse_filter(name));
      return run_check(input, cfg);
    }
    if (*filter) return run_filter(input, cfg.strict_ingest);
    if (*gen) {
      if (part >= parts) throw std::invalid_argument("--part must be below --parts");
      return run_gen(gen_n, mode, part, parts);
    }
    if (*search) {
      if (!ingest.empty()) cfg.ingest = ingest;
      if (!out.empty()) cfg.out = out;
      return run_search(cfg, orders, mode, disabled, quiet);
    }
    if (*stats) return run_stats(summary_path);
  } catch (const std::exception& e) {
    std::cerr << "egsearch: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
