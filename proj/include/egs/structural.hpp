#ifndef EGS_STRUCTURAL_HPP
#define EGS_STRUCTURAL_HPP

// Necessary conditions satisfied by any minimal counterexample: a graph of
// minimum degree >= 3 with no cycle of power-of-two length, chosen of
// minimum order and then minimum size. Each predicate is defined on every
// graph so degenerate inputs can be reported on; none of them is
// sufficient on its own.

#include <cstddef>
#include <optional>

#include "egs/graph.hpp"

namespace egs {

struct EdgeMinimality {
  bool holds = true;
  std::optional<Edge> violation;
  // Set instead of `violation` when G minus an isolated vertex is the
  // offending proper subgraph.
  std::optional<Vertex> isolated_violation;
};

struct Degree3Domination {
  bool holds = true;
  std::optional<Vertex> undominated;
};

struct HighDegreeIndependence {
  bool holds = true;
  std::optional<Edge> adjacent_pair;
};

/// Every proper subgraph has minimum degree at most 2.
///
/// Checked as: for every edge e, the 3-core of G - e is empty. A proper
/// subgraph H either misses some edge e of G, and then H is a subgraph of
/// G - e, or it keeps every edge and misses only isolated vertices of G. In
/// the first case min-degree(H) >= 3 means every vertex of H survives
/// peeling G - e down to its 3-core; conversely a nonempty 3-core of G - e
/// is itself a proper subgraph of minimum degree >= 3. The second case
/// reduces to the 3-core of G itself when G has an isolated vertex.
///
/// The reported violation is the lexicographically smallest such edge.
template <std::size_t Words>
EdgeMinimality edge_minimal(const BasicGraph<Words>& g) {
  for (const auto& e : g.edges()) {
    if (!k_core(delete_edge(g, e.u, e.v), 3).empty()) return {false, e, std::nullopt};
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      if (!k_core(g, 3).empty()) return {false, std::nullopt, v};
      break;
    }
  }
  return {};
}

/// Every vertex has a neighbour of degree exactly 3.
template <std::size_t Words>
Degree3Domination degree3_dominating(const BasicGraph<Words>& g) {
  typename BasicGraph<Words>::Set cubic;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) cubic.insert(v);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.neighbors(v).intersects(cubic)) return {false, v};
  return {};
}

/// Vertices of degree >= 4 are pairwise non-adjacent.
template <std::size_t Words>
HighDegreeIndependence high_degree_independent(const BasicGraph<Words>& g) {
  typename BasicGraph<Words>::Set high;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 4) high.insert(v);
  for (Vertex u : high) {
    auto later = g.neighbors(u) & high;
    later -= BasicGraph<Words>::Set::prefix(u + 1);
    if (!later.empty()) return {false, Edge{u, later.first()}};
  }
  return {};
}

/// 7 * |V3| >= 4 * n, in integers.
template <std::size_t Words>
bool cubic_fraction_ok(const BasicGraph<Words>& g) {
  std::size_t v3 = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 3) ++v3;
  return 7 * v3 >= 4 * g.order();
}

template <std::size_t Words>
std::optional<std::size_t> regularity(const BasicGraph<Words>& g) {
  return degree_profile(g).regular_k;
}

struct FilterReport {
  std::size_t n = 0;
  std::size_t min_degree = 0;
  bool min_degree_ok = false;
  bool edge_minimal = false;
  std::optional<Edge> edge_minimal_violation;
  std::optional<Vertex> edge_minimal_isolated;
  bool deg3_dominating = false;
  std::optional<Vertex> undominated_vertex;
  bool high_deg_independent = false;
  std::optional<Edge> adjacent_high_pair;
  bool cubic_fraction_ok = false;
  std::size_t v3_count = 0;
  std::size_t v_ge4_count = 0;
  std::optional<std::size_t> regular_k;
  bool regular_rejected = false;
};

/// Evaluates every predicate; nothing short-circuits.
template <std::size_t Words>
FilterReport filter_report(const BasicGraph<Words>& g) {
  FilterReport r;
  const auto profile = degree_profile(g);
  r.n = g.order();
  r.min_degree = profile.min_degree;
  r.min_degree_ok = g.order() > 0 && profile.min_degree >= 3;
  auto em = edge_minimal(g);
  r.edge_minimal = em.holds;
  r.edge_minimal_violation = em.violation;
  r.edge_minimal_isolated = em.isolated_violation;
  auto dom = degree3_dominating(g);
  r.deg3_dominating = dom.holds;
  r.undominated_vertex = dom.undominated;
  auto ind = high_degree_independent(g);
  r.high_deg_independent = ind.holds;
  r.adjacent_high_pair = ind.adjacent_pair;
  r.cubic_fraction_ok = 7 * profile.v3_count >= 4 * g.order();
  r.v3_count = profile.v3_count;
  r.v_ge4_count = profile.v_ge4_count;
  r.regular_k = profile.regular_k;
  r.regular_rejected = profile.regular_k.has_value() && *profile.regular_k >= 4;
  return r;
}

}  // namespace egs

#endif  // EGS_STRUCTURAL_HPP
