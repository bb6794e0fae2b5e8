#ifndef EGS_TESTS_SUPPORT_HPP
#define EGS_TESTS_SUPPORT_HPP

// Named graphs, random graphs and slow reference implementations used as
// oracles. Nothing here shares code with the library beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "egs/graph.hpp"

namespace egs::testing {

inline Graph complete(std::size_t n) {
  GraphBuilder<1> b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph cycle(std::size_t n) {
  GraphBuilder<1> b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  GraphBuilder<1> g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g.build();
}

inline Graph petersen() {
  GraphBuilder<1> b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return b.build();
}

/// Straightforward graph6 writer: build the bit string, pad, chunk.
inline std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(g.order() + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6)
    out += static_cast<char>(std::stoi(bits.substr(k, 6), nullptr, 2) + 63);
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder<1> b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

/// Random graph raised to minimum degree 3 by joining deficient vertices
/// to random non-neighbours. Needs n >= 4.
inline Graph random_min_degree3(std::mt19937_64& rng, std::size_t n, double p) {
  GraphBuilder<1> b(random_graph(rng, n, p));
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (Vertex v = 0; v < n; ++v) {
    while (b.degree(v) < 3) {
      Vertex u = pick(rng);
      if (u != v && !b.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

/// Minimum degree >= 3 with the degree >= 4 vertices pairwise
/// non-adjacent most of the time: a sparse base where every vertex is
/// raised to degree 3, then a few hub vertices joined only to vertices of
/// degree 3. Needs n >= 6.
inline Graph random_sparse_hubs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> hub_count(0, n / 4);
  const std::size_t hubs = hub_count(rng);
  const std::size_t base = n - hubs;
  GraphBuilder<1> b(n);
  std::uniform_int_distribution<Vertex> pick(0, base - 1);
  for (Vertex v = 0; v < base; ++v) {
    for (int tries = 0; b.degree(v) < 3 && tries < 200; ++tries) {
      Vertex u = pick(rng);
      if (u != v && !b.adjacent(u, v) && b.degree(u) < 3) b.add_edge(u, v);
    }
    for (int tries = 0; b.degree(v) < 3 && tries < 200; ++tries) {
      Vertex u = pick(rng);
      if (u != v && !b.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  for (Vertex h = base; h < n; ++h) {
    std::vector<Vertex> order(base);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::uniform_int_distribution<std::size_t> want(3, 6);
    const std::size_t k = want(rng);
    for (Vertex u : order) {
      if (b.degree(h) >= k) break;
      if (b.degree(u) == 3 && !b.adjacent(u, h)) b.add_edge(u, h);
    }
    for (Vertex u : order) {
      if (b.degree(h) >= 3) break;
      if (!b.adjacent(u, h)) b.add_edge(u, h);
    }
  }
  return b.build();
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Cycle lengths by dynamic programming over (vertex set, endpoint): the
/// smallest vertex of the set is the start of the path. O(2^n n^2).
inline std::set<std::size_t> cycle_lengths_dp(const Graph& g) {
  const std::size_t n = g.order();
  std::set<std::size_t> out;
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);  // endpoints per set
  for (Vertex s = 0; s < n; ++s) reach[std::size_t{1} << s] = 1u << s;
  for (std::size_t mask = 1; mask < reach.size(); ++mask) {
    if (reach[mask] == 0) continue;
    const auto start = static_cast<Vertex>(__builtin_ctzll(mask));
    const auto len = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (Vertex v = 0; v < n; ++v) {
      if (!((reach[mask] >> v) & 1u)) continue;
      if (len >= 3 && g.adjacent(v, start)) out.insert(len);
      for (Vertex w = start + 1; w < n; ++w)
        if (!((mask >> w) & 1u) && g.adjacent(v, w)) reach[mask | (std::size_t{1} << w)] |= 1u << w;
    }
  }
  return out;
}

/// Whether some proper subgraph has minimum degree >= 3, by trying every
/// edge subset F. A subgraph (U, F) with minimum degree >= 3 has no
/// isolated vertex, so U is exactly the set of endpoints of F.
inline bool has_proper_subgraph_min_degree3(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::size_t isolated = 0;
  for (Vertex v = 0; v < g.order(); ++v) isolated += g.degree(v) == 0;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << m); ++f) {
    std::vector<std::size_t> deg(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if ((f >> i) & 1u) {
        ++deg[edges[i].u];
        ++deg[edges[i].v];
      }
    bool ok = true;
    for (auto d : deg) {
      if (d != 0 && d < 3) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const bool whole = f == (std::uint64_t{1} << m) - 1 && isolated == 0;
    if (!whole) return true;
  }
  return false;
}

}  // namespace egs::testing

#endif  // EGS_TESTS_SUPPORT_HPP
