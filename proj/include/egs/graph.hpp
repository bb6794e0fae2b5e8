#ifndef EGS_GRAPH_HPP
#define EGS_GRAPH_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "egs/vertex_set.hpp"

namespace egs {

/// Raised for malformed graph construction or missing edges/vertices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, stored with u < v after normalization.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

template <std::size_t Words>
class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Values are immutable once built; every "modifying" operation in this
/// library returns a new graph. `Words` fixes the vertex capacity at
/// 64 * Words.
template <std::size_t Words = 1>
class BasicGraph {
 public:
  using Set = VertexSet<Words>;
  static constexpr std::size_t kMaxVertices = Set::kCapacity;

  BasicGraph() = default;

  /// Edgeless graph on n vertices.
  explicit BasicGraph(std::size_t n) : n_(n) {
    if (n > kMaxVertices)
      throw GraphError("graph order " + std::to_string(n) + " exceeds capacity " +
                       std::to_string(kMaxVertices));
  }

  std::size_t order() const { return n_; }

  std::size_t size() const {
    std::size_t twice = 0;
    for (Vertex v = 0; v < n_; ++v) twice += rows_[v].size();
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex v) const { return u < n_ && rows_[u].contains(v); }
  const Set& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].size(); }
  Set vertices() const { return Set::prefix(n_); }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = rows_[u].next(u); v < kMaxVertices; v = rows_[u].next(v))
        out.push_back({u, v});
    return out;
  }

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

 private:
  friend class GraphBuilder<Words>;

  std::size_t n_ = 0;
  std::array<Set, kMaxVertices> rows_{};
};

using Graph = BasicGraph<1>;

/// Mutable staging area for a graph; `build()` yields the immutable value.
template <std::size_t Words = 1>
class GraphBuilder {
 public:
  using GraphType = BasicGraph<Words>;

  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(GraphType g) : g_(std::move(g)) {}

  std::size_t order() const { return g_.n_; }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  std::size_t degree(Vertex v) const { return g_.degree(v); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    g_.rows_[u].insert(v);
    g_.rows_[v].insert(u);
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    g_.rows_[u].erase(v);
    g_.rows_[v].erase(u);
    return *this;
  }

  /// Appends an isolated vertex and returns its label.
  Vertex add_vertex() {
    if (g_.n_ == GraphType::kMaxVertices) throw GraphError("graph capacity exhausted");
    return g_.n_++;
  }

  const GraphType& peek() const { return g_; }
  GraphType build() const { return g_; }

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u >= g_.n_ || v >= g_.n_)
      throw GraphError("edge endpoint out of range: {" + std::to_string(u) + "," +
                       std::to_string(v) + "} with n=" + std::to_string(g_.n_));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  }

  GraphType g_;
};

/// Builds a graph from an edge list; duplicate pairs collapse.
template <std::size_t Words = 1>
BasicGraph<Words> graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder<Words> b(n);
  for (const auto& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

template <std::size_t Words = 1>
BasicGraph<Words> graph_from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return graph_from_edges<Words>(n, std::span<const Edge>(edges.begin(), edges.size()));
}

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t v3_count = 0;
  std::size_t v_ge4_count = 0;
  std::optional<std::size_t> regular_k;
};

template <std::size_t Words>
DegreeProfile degree_profile(const BasicGraph<Words>& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = g.degree(v);
    p.degrees.push_back(d);
    if (d == 3) ++p.v3_count;
    if (d >= 4) ++p.v_ge4_count;
  }
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    if (*lo == *hi) p.regular_k = *lo;
  }
  return p;
}

template <std::size_t Words>
std::size_t min_degree(const BasicGraph<Words>& g) {
  std::size_t m = BasicGraph<Words>::kMaxVertices;
  for (Vertex v = 0; v < g.order(); ++v) m = std::min(m, g.degree(v));
  return g.order() == 0 ? 0 : m;
}

template <std::size_t Words>
BasicGraph<Words> delete_edge(const BasicGraph<Words>& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v))
    throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return GraphBuilder<Words>(g).remove_edge(u, v).build();
}

template <std::size_t Words>
BasicGraph<Words> add_edge(const BasicGraph<Words>& g, Vertex u, Vertex v) {
  return GraphBuilder<Words>(g).add_edge(u, v).build();
}

/// Subgraph induced by `keep`, relabeled to 0..|keep|-1 preserving order.
template <std::size_t Words>
BasicGraph<Words> induced_subgraph(const BasicGraph<Words>& g,
                                   const typename BasicGraph<Words>::Set& keep) {
  std::array<Vertex, BasicGraph<Words>::kMaxVertices> index{};
  std::size_t m = 0;
  for (Vertex v : keep) {
    if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    index[v] = m++;
  }
  GraphBuilder<Words> b(m);
  for (Vertex v : keep)
    for (Vertex w : g.neighbors(v) & keep)
      if (v < w) b.add_edge(index[v], index[w]);
  return b.build();
}

template <std::size_t Words>
BasicGraph<Words> delete_vertex(const BasicGraph<Words>& g, Vertex v) {
  if (v >= g.order()) throw GraphError("no vertex " + std::to_string(v));
  auto keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

/// Returns the graph with vertex v renamed to perm[v].
template <std::size_t Words>
BasicGraph<Words> relabel(const BasicGraph<Words>& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("permutation size mismatch");
  GraphBuilder<Words> b(g.order());
  for (const auto& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

/// k-core of the subgraph induced by `within`, by repeated peeling.
template <std::size_t Words>
typename BasicGraph<Words>::Set k_core_within(const BasicGraph<Words>& g, std::size_t k,
                                              typename BasicGraph<Words>::Set within) {
  using Set = typename BasicGraph<Words>::Set;
  within &= g.vertices();
  std::array<std::size_t, BasicGraph<Words>::kMaxVertices> deg{};
  std::vector<Vertex> queue;
  Set queued;
  for (Vertex v : within) {
    deg[v] = (g.neighbors(v) & within).size();
    if (deg[v] < k) {
      queue.push_back(v);
      queued.insert(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    within.erase(v);
    for (Vertex w : g.neighbors(v) & within) {
      if (--deg[w] < k && !queued.contains(w)) {
        queue.push_back(w);
        queued.insert(w);
      }
    }
  }
  return within;
}

template <std::size_t Words>
typename BasicGraph<Words>::Set k_core(const BasicGraph<Words>& g, std::size_t k) {
  return k_core_within(g, k, g.vertices());
}

/// Vertices reachable from `start` inside `within`.
template <std::size_t Words>
typename BasicGraph<Words>::Set reachable_within(const BasicGraph<Words>& g, Vertex start,
                                                 const typename BasicGraph<Words>::Set& within) {
  using Set = typename BasicGraph<Words>::Set;
  Set seen = Set::singleton(start);
  Set frontier = seen;
  while (!frontier.empty()) {
    Set next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components ordered by their smallest vertex.
template <std::size_t Words>
std::vector<typename BasicGraph<Words>::Set> connected_components(const BasicGraph<Words>& g) {
  std::vector<typename BasicGraph<Words>::Set> out;
  auto rest = g.vertices();
  while (!rest.empty()) {
    auto comp = reachable_within(g, rest.first(), rest);
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

template <std::size_t Words>
bool is_connected(const BasicGraph<Words>& g) {
  if (g.order() == 0) return true;
  return reachable_within(g, 0, g.vertices()).size() == g.order();
}

}  // namespace egs

#endif  // EGS_GRAPH_HPP
