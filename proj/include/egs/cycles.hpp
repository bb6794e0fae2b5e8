#ifndef EGS_CYCLES_HPP
#define EGS_CYCLES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "egs/graph.hpp"

namespace egs {

/// Explicit cycle certificate: vertices[i] ~ vertices[i+1] and the last
/// vertex closes back to the first.
struct CycleWitness {
  std::vector<Vertex> vertices;
  std::size_t length = 0;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

inline constexpr std::size_t kDefaultMaxExponent = 6;

template <std::size_t Words>
bool verify_witness(const BasicGraph<Words>& g, const CycleWitness& w) {
  const auto& cyc = w.vertices;
  if (w.length < 3 || cyc.size() != w.length) return false;
  typename BasicGraph<Words>::Set seen;
  for (Vertex v : cyc) {
    if (v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

namespace detail {

// Depth-first extension of simple paths anchored at the minimum vertex of
// the cycle. A vertex w may occupy position d (0-based) only if its BFS
// distance to the anchor inside the allowed set is at most L - d, which is
// the number of edges still available to return.
template <std::size_t Words>
class FixedLengthCycleSearch {
 public:
  using Set = typename BasicGraph<Words>::Set;

  FixedLengthCycleSearch(const BasicGraph<Words>& g, std::size_t length)
      : g_(g), length_(length) {}

  std::optional<CycleWitness> run(const Set& within) {
    Set candidates = k_core_within(g_, 2, within);
    for (Vertex anchor : candidates) {
      // Cycles through smaller vertices were covered by earlier anchors.
      Set allowed = Set(candidates);
      allowed -= Set::prefix(anchor);
      allowed = k_core_within(g_, 2, allowed);
      if (!allowed.contains(anchor) || allowed.size() < length_) continue;
      if (!distances_from(anchor, allowed)) continue;
      anchor_ = anchor;
      allowed_ = allowed;
      path_.assign(1, anchor);
      on_path_ = Set::singleton(anchor);
      if (extend(anchor)) return CycleWitness{path_, length_};
    }
    return std::nullopt;
  }

 private:
  // Fills dist_ and reports whether some vertex lies far enough away for a
  // closed walk of the target length to be plausible.
  bool distances_from(Vertex anchor, const Set& allowed) {
    dist_.fill(kUnreached);
    dist_[anchor] = 0;
    Set frontier = Set::singleton(anchor);
    Set seen = frontier;
    std::size_t level = 0;
    while (!frontier.empty()) {
      ++level;
      Set next;
      for (Vertex v : frontier) next |= g_.neighbors(v);
      next &= allowed;
      next -= seen;
      for (Vertex v : next) dist_[v] = level;
      seen |= next;
      frontier = next;
    }
    return seen.size() >= length_;
  }

  bool extend(Vertex current) {
    const std::size_t depth = path_.size();
    if (depth == length_) return g_.adjacent(current, anchor_);
    Set options = g_.neighbors(current) & allowed_;
    options -= on_path_;
    const std::size_t budget = length_ - depth;
    for (Vertex w : options) {
      if (dist_[w] > budget) continue;
      // The last vertex must close the cycle; fixing path_[1] < last kills
      // the mirror-image traversal.
      if (depth + 1 == length_ && (!g_.adjacent(w, anchor_) || w < path_[1])) continue;
      // A non-final vertex needs an exit other than the vertex it came from.
      if (depth + 1 < length_ && ((g_.neighbors(w) & allowed_) - on_path_).empty()) continue;
      path_.push_back(w);
      on_path_.insert(w);
      if (extend(w)) return true;
      on_path_.erase(w);
      path_.pop_back();
    }
    return false;
  }

  static constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);

  const BasicGraph<Words>& g_;
  std::size_t length_;
  Vertex anchor_ = 0;
  Set allowed_;
  Set on_path_;
  std::vector<Vertex> path_;
  std::array<std::size_t, BasicGraph<Words>::kMaxVertices> dist_{};
};

}  // namespace detail

/// Cycle of exactly `length` vertices using only vertices in `within`.
template <std::size_t Words>
std::optional<CycleWitness> find_cycle_of_length_within(
    const BasicGraph<Words>& g, std::size_t length,
    const typename BasicGraph<Words>::Set& within) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (length > (within & g.vertices()).size()) return std::nullopt;
  return detail::FixedLengthCycleSearch<Words>(g, length).run(within);
}

template <std::size_t Words>
std::optional<CycleWitness> has_cycle_of_length(const BasicGraph<Words>& g, std::size_t length) {
  return find_cycle_of_length_within(g, length, g.vertices());
}

/// Shortest power-of-two cycle with length in [4, 2^max_exponent].
///
/// Lengths are tried in ascending order; for each length the connected
/// components are visited by smallest vertex, skipping those too small to
/// carry a cycle of that length.
template <std::size_t Words>
std::optional<CycleWitness> find_power_of_two_cycle(const BasicGraph<Words>& g,
                                                    std::size_t max_exponent = kDefaultMaxExponent) {
  if (max_exponent < 2) throw std::invalid_argument("max_exponent must be at least 2");
  const auto components = connected_components(g);
  for (std::size_t e = 2; e <= max_exponent && e < 63; ++e) {
    const std::size_t length = std::size_t{1} << e;
    if (length > g.order()) break;
    for (const auto& comp : components) {
      if (comp.size() < length) continue;
      if (auto w = find_cycle_of_length_within(g, length, comp)) return w;
    }
  }
  return std::nullopt;
}

/// Exact cycle-length spectrum by exhaustive simple-path enumeration.
///
/// Exponential; intended as a test oracle for n <= 12. Shares no code with
/// the pruned detector above.
template <std::size_t Words>
std::set<std::size_t> cycle_spectrum_bruteforce(const BasicGraph<Words>& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = g.adjacent(i, j) ? 1 : 0;

  std::set<std::size_t> lengths;
  std::vector<char> used(n, 0);
  // Paths start at s and only visit vertices larger than s.
  auto walk = [&](auto&& self, std::size_t s, std::size_t at, std::size_t len) -> void {
    if (len >= 3 && adj[at][s]) lengths.insert(len);
    for (std::size_t nxt = s + 1; nxt < n; ++nxt) {
      if (!adj[at][nxt] || used[nxt]) continue;
      used[nxt] = 1;
      self(self, s, nxt, len + 1);
      used[nxt] = 0;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    used[s] = 1;
    walk(walk, s, s, 1);
    used[s] = 0;
  }
  return lengths;
}

}  // namespace egs

#endif  // EGS_CYCLES_HPP
