#ifndef EGS_REPORT_HPP
#define EGS_REPORT_HPP

// JSON encodings of classifications, filter reports and search summaries.
// Every document carries "format_version"; record streams put one compact
// object per line.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "egs/search.hpp"
#include "json.hpp"

namespace egs {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace detail {

inline json edge_or_null(const std::optional<Edge>& e) {
  if (!e) return nullptr;
  return json::array({e->u, e->v});
}

template <class T>
json value_or_null(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace detail

inline json to_json(const FilterReport& r) {
  json j;
  j["n"] = r.n;
  j["min_degree"] = r.min_degree;
  j["min_degree_ok"] = r.min_degree_ok;
  j["edge_minimal"] = r.edge_minimal;
  j["edge_minimal_violation"] = detail::edge_or_null(r.edge_minimal_violation);
  j["edge_minimal_isolated"] = detail::value_or_null(r.edge_minimal_isolated);
  j["deg3_dominating"] = r.deg3_dominating;
  j["undominated_vertex"] = detail::value_or_null(r.undominated_vertex);
  j["high_deg_independent"] = r.high_deg_independent;
  j["adjacent_high_pair"] = detail::edge_or_null(r.adjacent_high_pair);
  j["cubic_fraction_ok"] = r.cubic_fraction_ok;
  j["v3_count"] = r.v3_count;
  j["v_ge4_count"] = r.v_ge4_count;
  j["regular_k"] = detail::value_or_null(r.regular_k);
  j["regular_rejected"] = r.regular_rejected;
  return j;
}

/// One line of `filter` output.
inline json filter_record(const std::string& graph6, const FilterReport& r) {
  json j;
  j["format_version"] = kFormatVersion;
  j["graph6"] = graph6;
  const json fields = to_json(r);
  for (const auto& [k, v] : fields.items()) j[k] = v;
  return j;
}

/// One line of `check` output.
inline json classification_record(const Classification& c) {
  json j;
  j["format_version"] = kFormatVersion;
  j["graph6"] = c.graph6;
  j["verdict"] = verdict_name(c.verdict);
  j["filter"] = c.filter ? json(filter_name(*c.filter)) : json(nullptr);
  if (c.cycle) {
    j["cycle_length"] = c.cycle->length;
    j["witness"] = c.cycle->vertices;
  } else {
    j["cycle_length"] = nullptr;
    j["witness"] = c.verdict == Verdict::rejected ? json(c.filter_witness) : json(nullptr);
  }
  return j;
}

inline json config_to_json(const SearchConfig& cfg) {
  json j;
  j["orders"] = json::array({cfg.orders.lo, cfg.orders.hi});
  j["mode"] = mode_name(cfg.mode);
  j["source"] = cfg.ingest ? "ingest:" + *cfg.ingest : std::string("generator");
  j["max_exponent"] = cfg.max_exponent;
  json filters = json::array();
  for (auto f : kFilterOrder)
    if (cfg.filters.contains(f)) filters.push_back(filter_name(f));
  j["filters"] = filters;
  j["strict_ingest"] = cfg.strict_ingest;
  return j;
}

/// Summary document. Timing (wall clock and worker count) sits under its
/// own key so the rest is identical for any degree of parallelism.
inline json summary_to_json(const SearchSummary& s, bool with_timing = true) {
  json j;
  j["format_version"] = kFormatVersion;
  j["config"] = config_to_json(s.config);
  json orders = json::array();
  for (const auto& o : s.orders) {
    json oj;
    oj["n"] = o.n;
    oj["examined"] = o.examined;
    json rejected = json::object();
    for (auto f : kFilterOrder) {
      auto it = o.rejected.find(f);
      rejected[std::string(filter_name(f))] = it == o.rejected.end() ? 0 : it->second;
    }
    oj["rejected"] = rejected;
    json witnessed = json::object();
    for (auto [len, k] : o.witnessed) witnessed[std::to_string(len)] = k;
    oj["witnessed"] = witnessed;
    json survivors = json::array();
    for (const auto& g6 : o.survivors)
      survivors.push_back({{"graph6", g6}, {"report", to_json(filter_report(parse_graph6(g6)))}});
    oj["survivors"] = survivors;
    orders.push_back(oj);
  }
  j["orders"] = orders;
  json errors = json::array();
  for (const auto& e : s.ingest_errors) errors.push_back({{"line", e.line}, {"message", e.message}});
  j["ingest_errors"] = errors;
  if (with_timing) {
    json t;
    t["jobs"] = s.config.jobs;
    double total = 0;
    json per = json::array();
    for (const auto& o : s.orders) {
      per.push_back({{"n", o.n}, {"wall_seconds", o.wall_seconds}});
      total += o.wall_seconds;
    }
    t["per_order"] = per;
    t["total_seconds"] = total;
    j["timing"] = t;
  }
  return j;
}

/// Reads back the per-order results of a summary document. Configuration
/// fields are returned as stored in `config`; the caller decides whether
/// they are compatible.
inline std::vector<OrderSummary> orders_from_json(const json& doc) {
  if (doc.value("format_version", 0) != kFormatVersion)
    throw FormatError("unsupported summary format_version");
  std::map<std::size_t, double> seconds;
  if (doc.contains("timing"))
    for (const auto& p : doc["timing"]["per_order"])
      seconds[p["n"].get<std::size_t>()] = p["wall_seconds"].get<double>();
  std::vector<OrderSummary> out;
  for (const auto& oj : doc.at("orders")) {
    OrderSummary o;
    o.n = oj.at("n").get<std::size_t>();
    o.examined = oj.at("examined").get<std::uint64_t>();
    for (auto& [name, k] : oj.at("rejected").items())
      if (k.get<std::uint64_t>() > 0) o.rejected[parse_filter(name)] = k.get<std::uint64_t>();
    for (auto& [len, k] : oj.at("witnessed").items())
      o.witnessed[std::stoul(len)] = k.get<std::uint64_t>();
    for (const auto& sv : oj.at("survivors")) o.survivors.push_back(sv.at("graph6").get<std::string>());
    o.wall_seconds = seconds.count(o.n) ? seconds[o.n] : 0.0;
    out.push_back(std::move(o));
  }
  return out;
}

/// Writes via a temporary file and rename so a crash never leaves a
/// truncated checkpoint behind.
inline void write_json_atomic(const std::filesystem::path& path, const json& doc) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

/// Human-readable per-order table for a summary document.
inline std::string stats_table(const json& doc) {
  const auto orders = orders_from_json(doc);
  std::ostringstream os;
  const auto& cfg = doc.at("config");
  os << "mode " << cfg.at("mode").get<std::string>() << ", source "
     << cfg.at("source").get<std::string>() << ", max_exponent "
     << cfg.at("max_exponent").get<std::size_t>() << "\n";
  os << std::left << std::setw(5) << "n" << std::right << std::setw(11) << "examined";
  for (auto f : kFilterOrder) os << std::setw(22) << filter_name(f);
  for (std::size_t len : {4, 8, 16, 32, 64}) os << std::setw(10) << ("C" + std::to_string(len));
  os << std::setw(11) << "survivors" << std::setw(10) << "seconds" << "\n";
  std::uint64_t examined = 0, survivors = 0;
  for (const auto& o : orders) {
    os << std::left << std::setw(5) << o.n << std::right << std::setw(11) << o.examined;
    for (auto f : kFilterOrder) {
      auto it = o.rejected.find(f);
      os << std::setw(22) << (it == o.rejected.end() ? 0 : it->second);
    }
    for (std::size_t len : {4, 8, 16, 32, 64}) {
      auto it = o.witnessed.find(len);
      os << std::setw(10) << (it == o.witnessed.end() ? 0 : it->second);
    }
    os << std::setw(11) << o.survivors.size() << std::setw(10) << std::fixed
       << std::setprecision(2) << o.wall_seconds << "\n";
    examined += o.examined;
    survivors += o.survivors.size();
  }
  os << "total examined " << examined << ", survivors " << survivors << "\n";
  for (const auto& o : orders)
    for (const auto& g6 : o.survivors) os << "survivor n=" << o.n << " " << g6 << "\n";
  return os.str();
}

}  // namespace egs

#endif  // EGS_REPORT_HPP
