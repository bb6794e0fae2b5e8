#ifndef EGS_SEARCH_HPP
#define EGS_SEARCH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egs/cycles.hpp"
#include "egs/enumerate.hpp"
#include "egs/graph6.hpp"
#include "egs/ingest.hpp"
#include "egs/structural.hpp"

namespace egs {

/// Pruning filters in the order `classify` applies them (cheap first).
enum class Filter : std::uint8_t {
  min_degree,
  regular_reject,
  high_deg_independent,
  cubic_fraction,
  deg3_dominating,
  edge_minimal,
};

inline constexpr std::array<Filter, 6> kFilterOrder = {
    Filter::min_degree,      Filter::regular_reject,  Filter::high_deg_independent,
    Filter::cubic_fraction,  Filter::deg3_dominating, Filter::edge_minimal,
};

inline std::string_view filter_name(Filter f) {
  switch (f) {
    case Filter::min_degree:
      return "min_degree";
    case Filter::regular_reject:
      return "regular_reject";
    case Filter::high_deg_independent:
      return "high_deg_independent";
    case Filter::cubic_fraction:
      return "cubic_fraction";
    case Filter::deg3_dominating:
      return "deg3_dominating";
    case Filter::edge_minimal:
      return "edge_minimal";
  }
  return "?";
}

inline Filter parse_filter(std::string_view name) {
  for (auto f : kFilterOrder)
    if (filter_name(f) == name) return f;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

class FilterSet {
 public:
  constexpr FilterSet() = default;
  static constexpr FilterSet all() {
    FilterSet s;
    s.bits_ = (1u << kFilterOrder.size()) - 1;
    return s;
  }
  static constexpr FilterSet none() { return {}; }

  constexpr bool contains(Filter f) const { return (bits_ >> static_cast<unsigned>(f)) & 1u; }
  constexpr void insert(Filter f) { bits_ |= 1u << static_cast<unsigned>(f); }
  constexpr void erase(Filter f) { bits_ &= ~(1u << static_cast<unsigned>(f)); }
  friend constexpr bool operator==(FilterSet, FilterSet) = default;

 private:
  unsigned bits_ = 0;
};

struct OrderRange {
  std::size_t lo = 4;
  std::size_t hi = 4;
};

/// Parses "a..b" or a single order "a".
inline OrderRange parse_orders(std::string_view text) {
  auto to_size = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("bad order range '" + std::string(text) + "'");
    return static_cast<std::size_t>(std::stoul(std::string(s)));
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    auto n = to_size(text);
    return {n, n};
  }
  return {to_size(text.substr(0, dots)), to_size(text.substr(dots + 2))};
}

struct SearchConfig {
  OrderRange orders;
  GenMode mode = GenMode::min_degree_3;
  /// When set, graphs come from this graph6 file ("-" for stdin) instead of
  /// the generator; only graphs whose order lies in `orders` are examined.
  std::optional<std::string> ingest;
  std::size_t max_exponent = kDefaultMaxExponent;
  FilterSet filters = FilterSet::all();
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> out;
  bool strict_ingest = false;
  /// Continue from the completed orders recorded in `out`.
  bool resume = false;

  void validate() const {
    if (orders.lo > orders.hi) throw std::invalid_argument("order range is empty");
    if (orders.hi > kGraph6MaxOrder) throw std::invalid_argument("orders above 62 unsupported");
    if (jobs < 1) throw std::invalid_argument("parallelism must be at least 1");
    if (max_exponent < 2) throw std::invalid_argument("max_exponent must be at least 2");
    if (!ingest && orders.lo < 4 && mode != GenMode::all_connected)
      throw std::invalid_argument("degree-constrained modes start at order 4");
    if (resume && !out) throw std::invalid_argument("resume needs an output path");
  }
};

enum class Verdict { rejected, witnessed, survivor };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::rejected:
      return "rejected_by_filter";
    case Verdict::witnessed:
      return "witnessed";
    case Verdict::survivor:
      return "survivor";
  }
  return "?";
}

struct Classification {
  Verdict verdict = Verdict::survivor;
  std::optional<Filter> filter;
  /// Vertex or edge endpoints certifying the filter failure (empty for
  /// count-based filters).
  std::vector<Vertex> filter_witness;
  std::optional<CycleWitness> cycle;
  std::string graph6;
};

namespace detail {

inline std::optional<std::vector<Vertex>> filter_failure(const Graph& g, Filter f) {
  switch (f) {
    case Filter::min_degree: {
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) < 3) return std::vector<Vertex>{v};
      return std::nullopt;
    }
    case Filter::regular_reject: {
      auto k = regularity(g);
      if (k && *k >= 4) return std::vector<Vertex>{};
      return std::nullopt;
    }
    case Filter::high_deg_independent: {
      auto r = high_degree_independent(g);
      if (r.holds) return std::nullopt;
      return std::vector<Vertex>{r.adjacent_pair->u, r.adjacent_pair->v};
    }
    case Filter::cubic_fraction:
      if (cubic_fraction_ok(g)) return std::nullopt;
      return std::vector<Vertex>{};
    case Filter::deg3_dominating: {
      auto r = degree3_dominating(g);
      if (r.holds) return std::nullopt;
      return std::vector<Vertex>{*r.undominated};
    }
    case Filter::edge_minimal: {
      auto r = edge_minimal(g);
      if (r.holds) return std::nullopt;
      if (r.violation) return std::vector<Vertex>{r.violation->u, r.violation->v};
      return std::vector<Vertex>{*r.isolated_violation};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Applies the enabled filters in `kFilterOrder`, stopping at the first
/// failure, then looks for a power-of-two cycle. The filters only discard
/// graphs that cannot be minimal counterexamples, so disabling them can
/// only grow the survivor set.
///
/// A graph of minimum degree below 3 is never a survivor: with the
/// min_degree filter disabled it still goes through the cycle search, and
/// is attributed to min_degree only if no cycle is found.
inline Classification classify(const Graph& g, const SearchConfig& cfg) {
  Classification c;
  c.graph6 = encode_graph6(g);
  for (auto f : kFilterOrder) {
    if (!cfg.filters.contains(f)) continue;
    if (auto witness = detail::filter_failure(g, f)) {
      c.verdict = Verdict::rejected;
      c.filter = f;
      c.filter_witness = std::move(*witness);
      return c;
    }
  }
  if (auto w = find_power_of_two_cycle(g, cfg.max_exponent)) {
    c.verdict = Verdict::witnessed;
    c.cycle = std::move(*w);
    return c;
  }
  if (auto low = detail::filter_failure(g, Filter::min_degree)) {
    c.verdict = Verdict::rejected;
    c.filter = Filter::min_degree;
    c.filter_witness = std::move(*low);
    return c;
  }
  c.verdict = Verdict::survivor;
  return c;
}

struct OrderSummary {
  std::size_t n = 0;
  std::uint64_t examined = 0;
  std::map<Filter, std::uint64_t> rejected;
  std::map<std::size_t, std::uint64_t> witnessed;
  /// graph6 words, sorted.
  std::vector<std::string> survivors;
  double wall_seconds = 0;

  void record(const Classification& c) {
    ++examined;
    switch (c.verdict) {
      case Verdict::rejected:
        ++rejected[*c.filter];
        break;
      case Verdict::witnessed:
        ++witnessed[c.cycle->length];
        break;
      case Verdict::survivor:
        survivors.push_back(c.graph6);
        break;
    }
  }

  void merge(const OrderSummary& o) {
    examined += o.examined;
    for (auto [f, k] : o.rejected) rejected[f] += k;
    for (auto [l, k] : o.witnessed) witnessed[l] += k;
    survivors.insert(survivors.end(), o.survivors.begin(), o.survivors.end());
  }

  std::uint64_t rejected_total() const {
    std::uint64_t t = 0;
    for (auto [f, k] : rejected) t += k;
    return t;
  }
  std::uint64_t witnessed_total() const {
    std::uint64_t t = 0;
    for (auto [l, k] : witnessed) t += k;
    return t;
  }
  bool conserved() const {
    return examined == rejected_total() + witnessed_total() + survivors.size();
  }
};

struct SearchSummary {
  SearchConfig config;
  std::vector<OrderSummary> orders;
  std::vector<IngestError> ingest_errors;

  std::size_t survivor_count() const {
    std::size_t k = 0;
    for (const auto& o : orders) k += o.survivors.size();
    return k;
  }
};

}  // namespace egs

#endif  // EGS_SEARCH_HPP
