#ifndef EGS_ENUMERATE_HPP
#define EGS_ENUMERATE_HPP

// Isomorph-free generation of small graphs.
//
// The main route is canonical augmentation by vertices: a child is built by
// adding one vertex joined to a subset of the parent, and it is kept only
// if the new vertex lies in the automorphism orbit of the child's canonical
// deletion vertex. That vertex is chosen among non-cut vertices of minimum
// degree, then by largest equitable-partition cell, then by largest
// canonical label, so every intermediate graph is connected and the parent
// of every emitted graph is unique up to isomorphism. Distinct parents
// therefore never emit isomorphic children and only siblings need
// deduplicating.
//
// Degree targets prune the tree: with r vertices still to come, a vertex
// of degree d needs d + r >= min_degree, degrees never exceed max_degree,
// and for regular targets the total deficiency must fit into (and share
// parity with) what the remaining vertices can supply.
//
// The labeled routes at the bottom enumerate labeled graphs and bucket them
// by canonical certificate. They are slow and exist as independent oracles.

#include <array>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "egs/canonical.hpp"
#include "egs/graph.hpp"

namespace egs {

enum class GenMode { min_degree_3, cubic_connected, all_connected };

enum class GenMethod {
  /// Canonical vertex augmentation (streaming, constant memory per level).
  augmentation,
  /// Labeled enumeration bucketed by canonical certificate. Cubic graphs
  /// are enumerated in BFS-normalised labelings (n <= 16); other modes use
  /// all labeled graphs (n <= 7). Materialises every class before emitting.
  labeled_filter,
};

struct GeneratorSpec {
  std::size_t n = 0;
  GenMode mode = GenMode::min_degree_3;
  /// Emit canonical relabelings rather than graphs as constructed.
  bool canonical = true;
  GenMethod method = GenMethod::augmentation;
};

/// Worker `part` of `parts` expands only its share of the subtrees rooted
/// at the partition level; the union over all parts is the full stream.
struct Partition {
  std::size_t part = 0;
  std::size_t parts = 1;
};

using GraphVisitor = std::function<void(const Graph&)>;

inline std::string_view mode_name(GenMode m) {
  switch (m) {
    case GenMode::min_degree_3:
      return "mindeg3";
    case GenMode::cubic_connected:
      return "cubic";
    case GenMode::all_connected:
      return "connected";
  }
  return "?";
}

inline GenMode parse_mode(std::string_view s) {
  if (s == "mindeg3" || s == "min_degree_3") return GenMode::min_degree_3;
  if (s == "cubic" || s == "cubic_connected") return GenMode::cubic_connected;
  if (s == "connected" || s == "all_connected") return GenMode::all_connected;
  throw std::invalid_argument("unknown generator mode '" + std::string(s) + "'");
}

inline void validate(const GeneratorSpec& spec) {
  if (spec.n == 0 || spec.n > kGraph6MaxOrder)
    throw std::invalid_argument("generator order must be in 1..62");
  if (spec.mode != GenMode::all_connected && spec.n < 4)
    throw std::invalid_argument("no graph of minimum degree 3 has fewer than 4 vertices");
  if (spec.mode == GenMode::cubic_connected && spec.n % 2 != 0)
    throw std::invalid_argument("cubic graphs need an even number of vertices");
}

namespace detail {

// Articulation points of a connected graph via DFS lowlinks.
inline Graph::Set cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  Graph::Set cuts;
  if (n < 3) return cuts;
  std::array<std::size_t, 64> disc{}, low{}, parent{};
  std::array<Graph::Set, 64> pending{};
  std::array<Vertex, 64> stack{};
  std::size_t time = 0, top = 0, root_children = 0;
  disc[0] = low[0] = ++time;
  pending[0] = g.neighbors(0);
  stack[top++] = 0;
  while (top > 0) {
    const Vertex v = stack[top - 1];
    if (!pending[v].empty()) {
      const Vertex w = pending[v].first();
      pending[v].erase(w);
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = ++time;
        pending[w] = g.neighbors(w);
        stack[top++] = w;
        if (v == 0) ++root_children;
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    --top;
    if (v == 0) break;
    const Vertex p = parent[v];
    low[p] = std::min(low[p], low[v]);
    if (p != 0 && low[v] >= disc[p]) cuts.insert(p);
  }
  if (root_children > 1) cuts.insert(0);
  return cuts;
}

inline Graph emitted(const Graph& g, const CanonicalForm& cf, bool canonical) {
  return canonical ? cf.graph : g;
}

struct VertexRules {
  std::size_t n = 0;
  std::size_t min_degree = 0;  // required of the final graph
  std::size_t max_degree = 63;
};

class VertexAugmenter {
 public:
  VertexAugmenter(VertexRules rules, bool canonical, Partition partition, GraphVisitor visit)
      : rules_(rules), canonical_(canonical), partition_(partition), visit_(std::move(visit)) {}

  void run() {
    node_counter_ = 0;
    Graph k1(1);
    if (rules_.n == 1) {
      if (rules_.min_degree == 0 && partition_.part == 0) visit_(k1);
      return;
    }
    expand(k1);
  }

 private:
  void expand(const Graph& parent) {
    const std::size_t m = parent.order();
    if (m + 1 == split_level() && node_counter_++ % partition_.parts != partition_.part) return;

    const std::size_t after = rules_.n - (m + 1);
    Graph::Set open;    // may take the new vertex as neighbour
    Graph::Set forced;  // must take it to reach the final minimum degree
    for (Vertex v = 0; v < m; ++v) {
      const auto d = parent.degree(v);
      if (d < rules_.max_degree) open.insert(v);
      if (d + after < rules_.min_degree) {
        if (d + 1 + after < rules_.min_degree || d >= rules_.max_degree) return;
        forced.insert(v);
      }
    }
    std::vector<Vertex> free_vertices;
    for (Vertex v : open - forced) free_vertices.push_back(v);

    std::unordered_set<std::string> siblings;
    const std::uint64_t combos = std::uint64_t{1} << free_vertices.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      Graph::Set s = forced;
      for (std::size_t i = 0; i < free_vertices.size(); ++i)
        if ((bits >> i) & 1u) s.insert(free_vertices[i]);
      const std::size_t k = s.size();
      if (k == 0 || k > rules_.max_degree || k + after < rules_.min_degree) continue;

      GraphBuilder<1> b(parent);
      const Vertex x = b.add_vertex();
      for (Vertex v : s) b.add_edge(v, x);
      const Graph child = b.build();
      if (!deficiency_feasible(child, after)) continue;

      auto cf = accept(child, x);
      if (!cf) continue;
      if (!siblings.insert(cf->certificate()).second) continue;
      if (child.order() == rules_.n) {
        visit_(emitted(child, *cf, canonical_));
      } else {
        expand(child);
      }
    }
  }

  // Order of the nodes dealt out round-robin between partitions. Every
  // partition repeats the work above this level, so it sits a few levels
  // below the leaves where the tree is already wide.
  std::size_t split_level() const {
    constexpr std::size_t kLevelsAboveLeaves = 4;
    return rules_.n > kLevelsAboveLeaves + 2 ? rules_.n - kLevelsAboveLeaves : 2;
  }

  // Remaining vertices of degree <= max_degree must absorb the missing
  // degree; only meaningful when max_degree equals the target degree.
  bool deficiency_feasible(const Graph& g, std::size_t after) const {
    if (rules_.max_degree != rules_.min_degree) return true;
    std::size_t deficit = 0;
    for (Vertex v = 0; v < g.order(); ++v) deficit += rules_.max_degree - g.degree(v);
    const std::size_t capacity = rules_.max_degree * after;
    return deficit <= capacity && (deficit + capacity) % 2 == 0;
  }

  std::optional<CanonicalForm> accept(const Graph& child, Vertex added) const {
    const auto cuts = cut_vertices(child);
    if (cuts.contains(added)) return std::nullopt;
    std::size_t best_degree = 64;
    for (Vertex v = 0; v < child.order(); ++v)
      if (!cuts.contains(v)) best_degree = std::min(best_degree, child.degree(v));
    if (child.degree(added) != best_degree) return std::nullopt;

    // The equitable cell index is an isomorphism invariant and much cheaper
    // than a canonical labeling, so it settles most candidates.
    const auto cells = equitable_cells(child);
    std::size_t best_cell = 0;
    for (Vertex v = 0; v < child.order(); ++v)
      if (!cuts.contains(v) && child.degree(v) == best_degree) best_cell = std::max(best_cell, cells[v]);
    if (cells[added] != best_cell) return std::nullopt;

    auto cf = canonical_form(child);
    Vertex chosen = added;
    for (Vertex v = 0; v < child.order(); ++v)
      if (cells[v] == best_cell && !cuts.contains(v) && cf.labeling[v] > cf.labeling[chosen])
        chosen = v;
    if (chosen == added) return cf;
    if (!same_orbit(child, Graph::Set::singleton(added), Graph::Set::singleton(chosen)))
      return std::nullopt;
    return cf;
  }

  VertexRules rules_;
  bool canonical_;
  Partition partition_;
  GraphVisitor visit_;
  std::size_t node_counter_ = 0;
};

// Connected cubic graphs in BFS-normalised labelings: vertex i is
// processed in order and its missing neighbours are either already
// discovered vertices j > i or the next fresh labels. Every connected cubic
// graph has such a labeling (breadth-first search from any vertex), and
// each labeling is produced exactly once.
inline std::set<std::string> labeled_cubic_certificates(std::size_t n) {
  std::set<std::string> certs;
  GraphBuilder<1> b(n);
  std::vector<std::size_t> deg(n, 0);
  auto process = [&](auto&& self, Vertex i, std::size_t discovered) -> void {
    if (i == n) {
      certs.insert(canonical_certificate(b.peek()));
      return;
    }
    if (i >= discovered) return;  // disconnected
    const std::size_t need = 3 - deg[i];
    std::vector<Vertex> open;
    for (Vertex j = i + 1; j < discovered; ++j)
      if (deg[j] < 3 && !b.adjacent(i, j)) open.push_back(j);
    for (std::size_t fresh = 0; fresh <= need && discovered + fresh <= n; ++fresh) {
      const std::size_t old = need - fresh;
      if (old > open.size()) continue;
      // Choose `old` of the open vertices, in lexicographic order of index sets.
      std::vector<std::size_t> pick(old);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<Vertex> nbrs;
        for (auto p : pick) nbrs.push_back(open[p]);
        for (std::size_t f = 0; f < fresh; ++f) nbrs.push_back(discovered + f);
        for (Vertex w : nbrs) {
          b.add_edge(i, w);
          ++deg[i];
          ++deg[w];
        }
        self(self, i + 1, discovered + fresh);
        for (Vertex w : nbrs) {
          b.remove_edge(i, w);
          --deg[i];
          --deg[w];
        }
        std::size_t k = old;
        while (k > 0 && pick[k - 1] == open.size() - old + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t t = k; t < old; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
  };
  process(process, 0, 1);
  return certs;
}

}  // namespace detail

/// Literal route: every labeled graph on n vertices whose degrees lie in
/// [min_degree, max_degree], kept when `keep` holds, bucketed by canonical
/// certificate. Returns one canonical representative per class, ordered by
/// certificate. Exponential in n(n-1)/2; meant as an oracle for n <= 7.
inline std::vector<Graph> filter_and_canonicalize(std::size_t n,
                                                  const std::function<bool(const Graph&)>& keep,
                                                  std::size_t min_degree = 0,
                                                  std::size_t max_degree = 63) {
  if (n == 0 || n > 10) throw std::invalid_argument("filter_and_canonicalize supports 1..10");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::set<std::string> certs;
  std::vector<std::size_t> deg(n, 0);
  GraphBuilder<1> b(n);
  // Pairs run row by row, so vertex i is settled once row i is done.
  auto step = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      if (deg[n - 1] < min_degree || (n == 1 && min_degree > 0)) return;
      const Graph g = b.build();
      if (keep(g)) certs.insert(canonical_certificate(g));
      return;
    }
    const auto [i, j] = pairs[k];
    const bool row_ends = j + 1 == n;
    auto settled = [&] { return !row_ends || deg[i] >= min_degree; };
    if (settled()) self(self, k + 1);
    if (deg[i] < max_degree && deg[j] < max_degree) {
      b.add_edge(i, j);
      ++deg[i];
      ++deg[j];
      if (settled()) self(self, k + 1);
      --deg[i];
      --deg[j];
      b.remove_edge(i, j);
    }
  };
  step(step, 0);

  std::vector<Graph> out;
  out.reserve(certs.size());
  for (const auto& c : certs) out.push_back(parse_graph6(c));
  return out;
}

/// Streams one representative per isomorphism class of connected graphs
/// matching `spec`. The order is deterministic for a fixed spec and
/// partition.
///
/// Only connected graphs are produced in every mode. For the search this
/// loses nothing: a disconnected graph with minimum degree >= 3 and no
/// power-of-two cycle has a component with the same properties and fewer
/// vertices, so no minimal counterexample is disconnected.
inline void generate(const GeneratorSpec& spec, const GraphVisitor& visit,
                     Partition partition = {}) {
  validate(spec);
  if (partition.parts == 0 || partition.part >= partition.parts)
    throw std::invalid_argument("invalid generator partition");
  if (spec.method == GenMethod::labeled_filter) {
    if (partition.part != 0) return;
    std::vector<Graph> classes;
    if (spec.mode == GenMode::cubic_connected) {
      if (spec.n > 16) throw std::invalid_argument("labeled cubic route supports n <= 16");
      for (const auto& c : detail::labeled_cubic_certificates(spec.n))
        classes.push_back(parse_graph6(c));
    } else {
      if (spec.n > 7) throw std::invalid_argument("labeled route supports n <= 7");
      const std::size_t min_deg = spec.mode == GenMode::min_degree_3 ? 3 : 0;
      classes = filter_and_canonicalize(
          spec.n, [](const Graph& g) { return is_connected(g); }, min_deg);
    }
    for (const auto& g : classes) visit(g);
    return;
  }
  switch (spec.mode) {
    case GenMode::cubic_connected:
      detail::VertexAugmenter({spec.n, 3, 3}, spec.canonical, partition, visit).run();
      return;
    case GenMode::min_degree_3:
      detail::VertexAugmenter({spec.n, 3, 63}, spec.canonical, partition, visit).run();
      return;
    case GenMode::all_connected:
      detail::VertexAugmenter({spec.n, 0, 63}, spec.canonical, partition, visit).run();
      return;
  }
}

inline std::vector<Graph> generate_all(const GeneratorSpec& spec, Partition partition = {}) {
  std::vector<Graph> out;
  generate(spec, [&](const Graph& g) { out.push_back(g); }, partition);
  return out;
}

}  // namespace egs

#endif  // EGS_ENUMERATE_HPP
