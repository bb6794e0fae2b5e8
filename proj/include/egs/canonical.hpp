#ifndef EGS_CANONICAL_HPP
#define EGS_CANONICAL_HPP

// Canonical labeling by partition refinement and individualization.
//
// The ordered partition is refined to the coarsest equitable partition
// (every vertex of a cell has the same number of neighbours in every other
// cell). If a cell remains non-singleton, each of its vertices is
// individualized in turn and the search recurses. Every discrete leaf
// defines a relabeling; the lexicographically largest relabeled adjacency
// wins. Two leaves that produce the same relabeled graph reveal an
// automorphism, which is then used to skip equivalent siblings.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "egs/graph.hpp"
#include "egs/graph6.hpp"

namespace egs {

struct CanonicalForm {
  /// labeling[v] is the canonical position of input vertex v.
  std::vector<Vertex> labeling;
  /// The input relabeled by `labeling`.
  Graph graph;

  /// graph6 word of the canonical relabeling. Isomorphic inputs (with
  /// matching colour classes) share it.
  std::string certificate() const { return encode_graph6(graph); }
};

namespace detail {

using Mask = std::uint64_t;
using Cells = std::vector<Mask>;

inline Mask mask_of(const Graph::Set& s) { return s.words()[0]; }

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = mask_of(g.neighbors(v));
  }

  /// Initial ordered partition grouping vertices by colour value.
  Cells initial_cells(std::span<const std::size_t> colors) const {
    Cells cells;
    if (n_ == 0) return cells;
    if (colors.empty()) {
      cells.push_back(mask_of(Graph::Set::prefix(n_)));
      return cells;
    }
    if (colors.size() != n_) throw GraphError("colouring size does not match graph order");
    std::vector<std::size_t> values(colors.begin(), colors.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto c : values) {
      Mask m = 0;
      for (Vertex v = 0; v < n_; ++v)
        if (colors[v] == c) m |= Mask{1} << v;
      cells.push_back(m);
    }
    return cells;
  }

  /// Splits cells until the partition is equitable. Splitters are processed
  /// FIFO; each split cell is replaced in place by its parts ordered by
  /// ascending neighbour count, and all parts are queued as new splitters.
  void refine(Cells& cells, std::span<const Mask> initial) const {
    // Initial cells plus every part of every split: at most 3n - 2 entries.
    std::array<Mask, 3 * 64> queue;
    std::size_t tail = 0;
    for (Mask m : initial) queue[tail++] = m;
    std::array<std::uint8_t, 64> count{};
    std::array<Mask, 65> parts;
    std::size_t singles = 0;
    for (Mask c : cells) singles += std::popcount(c) == 1;
    for (std::size_t head = 0; head < tail && singles < n_; ++head) {
      const Mask splitter = queue[head];
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Mask cell = cells[ci];
        if ((cell & (cell - 1)) == 0) continue;
        std::uint8_t lo = 255, hi = 0;
        for (Mask m = cell; m != 0; m &= m - 1) {
          auto v = std::countr_zero(m);
          count[v] = static_cast<std::uint8_t>(std::popcount(rows_[v] & splitter));
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) continue;
        std::fill(parts.begin(), parts.begin() + (hi - lo + 1), Mask{0});
        for (Mask m = cell; m != 0; m &= m - 1) {
          auto v = std::countr_zero(m);
          parts[count[v] - lo] |= Mask{1} << v;
        }
        std::size_t np = 0;
        for (std::size_t c = 0; c <= static_cast<std::size_t>(hi - lo); ++c)
          if (parts[c] != 0) parts[np++] = parts[c];
        for (std::size_t i = 0; i < np; ++i) {
          singles += std::popcount(parts[i]) == 1;
          queue[tail++] = parts[i];
        }
        cells[ci] = parts[0];
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci) + 1, parts.begin() + 1,
                     parts.begin() + static_cast<std::ptrdiff_t>(np));
        ci += np - 1;
      }
    }
  }

  CanonicalForm run(std::span<const std::size_t> colors) {
    if (n_ == 0) return {{}, Graph()};
    Cells cells = initial_cells(colors);
    refine(cells, cells);
    std::vector<Vertex> path;
    search(cells, path);
    CanonicalForm out;
    out.labeling = best_lab_;
    GraphBuilder<1> b(n_);
    for (Vertex i = 0; i < n_; ++i)
      for (Mask m = best_rows_[i] & ~((Mask{2} << i) - 1); m != 0; m &= m - 1)
        b.add_edge(i, static_cast<Vertex>(std::countr_zero(m)));
    out.graph = b.build();
    return out;
  }

 private:
  using Rows = std::array<Mask, 64>;
  using Perm = std::vector<std::uint8_t>;

  void search(Cells& cells, std::vector<Vertex>& path) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const Mask cell = cells[target];
    Mask explored = 0;
    for (Mask m = cell; m != 0; m &= m - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(m));
      if (explored != 0 && equivalent_to_explored(v, explored, path)) continue;
      Cells child(cells);
      child[target] = cell & ~(Mask{1} << v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), Mask{1} << v);
      const Mask single = Mask{1} << v;
      refine(child, std::span<const Mask>(&single, 1));
      path.push_back(v);
      search(child, path);
      path.pop_back();
      explored |= Mask{1} << v;
    }
  }

  // True when some known automorphism fixing `path` pointwise relates v to
  // an already explored sibling; the two subtrees then yield the same leaves.
  bool equivalent_to_explored(Vertex v, Mask explored, const std::vector<Vertex>& path) const {
    if (autos_.empty()) return false;
    std::array<std::uint8_t, 64> parent{};
    std::iota(parent.begin(), parent.begin() + static_cast<std::ptrdiff_t>(n_), 0);
    auto find = [&](std::uint8_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (std::size_t x = 0; x < n_; ++x) {
        auto a = find(static_cast<std::uint8_t>(x)), b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    if (!any) return false;
    const auto root = find(static_cast<std::uint8_t>(v));
    for (Mask m = explored; m != 0; m &= m - 1)
      if (find(static_cast<std::uint8_t>(std::countr_zero(m))) == root) return true;
    return false;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> lab(n_);
    for (std::size_t i = 0; i < cells.size(); ++i)
      lab[static_cast<Vertex>(std::countr_zero(cells[i]))] = i;
    Rows rows{};
    for (Vertex v = 0; v < n_; ++v) {
      Mask r = 0;
      for (Mask m = rows_[v]; m != 0; m &= m - 1) r |= Mask{1} << lab[std::countr_zero(m)];
      rows[lab[v]] = r;
    }
    if (!have_best_) {
      have_best_ = true;
      best_rows_ = first_rows_ = rows;
      best_lab_ = first_lab_ = lab;
      return;
    }
    if (same(rows, first_rows_)) {
      record_automorphism(first_lab_, lab);
      return;
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      record_automorphism(best_lab_, lab);
    } else if (cmp > 0) {
      best_rows_ = rows;
      best_lab_ = lab;
    }
  }

  bool same(const Rows& a, const Rows& b) const {
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n_), b.begin());
  }

  int compare(const Rows& a, const Rows& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  // Both labelings produce the same graph, so reference^-1 o lab maps G to itself.
  void record_automorphism(const std::vector<Vertex>& reference, const std::vector<Vertex>& lab) {
    if (autos_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<Vertex> inverse(n_);
    for (Vertex v = 0; v < n_; ++v) inverse[reference[v]] = v;
    Perm gamma(n_);
    for (Vertex v = 0; v < n_; ++v) gamma[v] = static_cast<std::uint8_t>(inverse[lab[v]]);
    autos_.push_back(std::move(gamma));
  }

  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  std::size_t n_;
  Rows rows_{};
  bool have_best_ = false;
  Rows best_rows_{};
  Rows first_rows_{};
  std::vector<Vertex> best_lab_;
  std::vector<Vertex> first_lab_;
  std::vector<Perm> autos_;
};

}  // namespace detail

/// Canonical relabeling of g, optionally respecting a vertex colouring.
/// With colours, canonical positions are grouped by ascending colour value.
inline CanonicalForm canonical_form(const Graph& g, std::span<const std::size_t> colors = {}) {
  return detail::Canonizer(g).run(colors);
}

inline std::string canonical_certificate(const Graph& g) { return canonical_form(g).certificate(); }

/// Cell index of each vertex in the coarsest equitable refinement of the
/// colouring. Vertices in different cells lie in different orbits.
inline std::vector<std::size_t> equitable_cells(const Graph& g,
                                                std::span<const std::size_t> colors = {}) {
  detail::Canonizer c(g);
  auto cells = c.initial_cells(colors);
  c.refine(cells, cells);
  std::vector<std::size_t> out(g.order());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (detail::Mask m = cells[i]; m != 0; m &= m - 1) out[std::countr_zero(m)] = i;
  return out;
}

/// Whether some automorphism of g maps the vertex set `a` onto `b`
/// (compared as individualized colour classes).
inline bool same_orbit(const Graph& g, const Graph::Set& a, const Graph::Set& b) {
  if (a == b) return true;
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> ca(g.order(), 0), cb(g.order(), 0);
  for (Vertex v : a) ca[v] = 1;
  for (Vertex v : b) cb[v] = 1;
  return canonical_form(g, ca).graph == canonical_form(g, cb).graph;
}

}  // namespace egs

#endif  // EGS_CANONICAL_HPP
