#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdsenum/errors.hpp"
#include "mdsenum/vertex_set.hpp"

namespace mdsenum {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 1..n with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  // Builds the graph from an edge list. Duplicate edges are merged; self-loops
  // and endpoints outside 1..n are rejected.
  Graph(Vertex n, std::span<const Edge> edges) : adjacency_(static_cast<std::size_t>(n) + 1) {
    for (auto [a, b] : edges) {
      if (a == 0 || b == 0 || a > n || b > n) {
        throw InputError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                         " has an endpoint outside 1.." + std::to_string(n));
      }
      if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      m_ += list.size();
    }
    m_ /= 2;
  }

  Graph(Vertex n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] Vertex n() const noexcept {
    return adjacency_.empty() ? 0 : static_cast<Vertex>(adjacency_.size() - 1);
  }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const {
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  [[nodiscard]] bool valid(Vertex v) const noexcept { return v >= 1 && v <= n(); }

  [[nodiscard]] VertexSet open_neighborhood(Vertex v) const {
    return VertexSet::from_sorted(adjacency_[v]);
  }

  [[nodiscard]] VertexSet closed_neighborhood(Vertex v) const {
    return open_neighborhood(v).with(v);
  }

  [[nodiscard]] VertexSet all_vertices() const {
    std::vector<Vertex> all(n());
    for (Vertex v = 1; v <= n(); ++v) all[v - 1] = v;
    return VertexSet::from_sorted(std::move(all));
  }

  // Edges as (smaller, larger) in ascending lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex a = 1; a <= n(); ++a) {
      for (Vertex b : adjacency_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t m_ = 0;
};

inline void check_members(const Graph& g, const VertexSet& s) {
  if (!s.empty() && (s.front() == 0 || s.back() > g.n())) {
    throw InputError("vertex set " + to_string(s) + " is not inside 1.." + std::to_string(g.n()));
  }
}

// counts[w] = |N[w] ∩ D| for every vertex w; index 0 unused.
[[nodiscard]] inline std::vector<std::uint32_t> domination_counts(const Graph& g,
                                                                  const VertexSet& d) {
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex x : d) {
    ++counts[x];
    for (Vertex y : g.neighbors(x)) ++counts[y];
  }
  return counts;
}

[[nodiscard]] inline bool is_dominating(const Graph& g, const VertexSet& d) {
  check_members(g, d);
  auto counts = domination_counts(g, d);
  for (Vertex w = 1; w <= g.n(); ++w) {
    if (counts[w] == 0) return false;
  }
  return true;
}

[[nodiscard]] inline bool dominates(const Graph& g, const VertexSet& d, const VertexSet& target) {
  check_members(g, d);
  auto counts = domination_counts(g, d);
  for (Vertex w : target) {
    if (counts[w] == 0) return false;
  }
  return true;
}

// P_D[v] = N[v] \ N[D \ {v}]. Open privates P_D(v) are this minus v.
[[nodiscard]] inline VertexSet private_closed(const Graph& g, const VertexSet& d, Vertex v) {
  check_members(g, d);
  if (!d.contains(v)) {
    throw ContractViolation("private_closed: vertex " + std::to_string(v) + " is not in " +
                            to_string(d));
  }
  auto counts = domination_counts(g, d);
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (w > v) break;
    if (counts[w] == 1) out.push_back(w);
  }
  if (counts[v] == 1) out.push_back(v);
  for (Vertex w : g.neighbors(v)) {
    if (w > v && counts[w] == 1) out.push_back(w);
  }
  return VertexSet::from_sorted(std::move(out));
}

[[nodiscard]] inline VertexSet private_open(const Graph& g, const VertexSet& d, Vertex v) {
  return private_closed(g, d, v).without(v);
}

[[nodiscard]] inline bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
  check_members(g, d);
  auto counts = domination_counts(g, d);
  for (Vertex w = 1; w <= g.n(); ++w) {
    if (counts[w] == 0) return false;
  }
  for (Vertex x : d) {
    bool has_private = counts[x] == 1;
    for (Vertex y : g.neighbors(x)) {
      if (has_private) break;
      has_private = counts[y] == 1;
    }
    if (!has_private) return false;
  }
  return true;
}

// Repeatedly drops the smallest-index vertex whose removal keeps D dominating.
// Removal only lowers counts, so a vertex that keeps a private keeps it for
// the rest of the run and one ascending pass realizes the repeated rule.
[[nodiscard]] inline VertexSet greedy_removal(const Graph& g, const VertexSet& d_prime) {
  check_members(g, d_prime);
  auto counts = domination_counts(g, d_prime);
  for (Vertex w = 1; w <= g.n(); ++w) {
    if (counts[w] == 0) {
      throw ContractViolation("greedy_removal: " + to_string(d_prime) +
                              " does not dominate vertex " + std::to_string(w));
    }
  }
  std::vector<Vertex> kept;
  kept.reserve(d_prime.size());
  for (Vertex x : d_prime) {
    bool removable = counts[x] >= 2;
    for (Vertex y : g.neighbors(x)) {
      if (!removable) break;
      removable = counts[y] >= 2;
    }
    if (removable) {
      --counts[x];
      for (Vertex y : g.neighbors(x)) --counts[y];
    } else {
      kept.push_back(x);
    }
  }
  return VertexSet::from_sorted(std::move(kept));
}

// Lexicographically greedy maximal independent subset of S in G[S].
[[nodiscard]] inline VertexSet greedy_max_independent(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  std::vector<char> blocked(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<Vertex> out;
  for (Vertex x : s) {
    if (blocked[x]) continue;
    out.push_back(x);
    for (Vertex y : g.neighbors(x)) blocked[y] = 1;
  }
  return VertexSet::from_sorted(std::move(out));
}

[[nodiscard]] inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && s.contains(y)) return false;
    }
  }
  return true;
}

// |E(G[S])|
[[nodiscard]] inline std::size_t induced_edge_count(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (Vertex x : s) {
    for (Vertex y : g.neighbors(x)) {
      if (y > x && s.contains(y)) ++count;
    }
  }
  return count;
}

[[nodiscard]] inline bool isolated_in(const Graph& g, const VertexSet& s, Vertex v) {
  for (Vertex y : g.neighbors(v)) {
    if (s.contains(y)) return false;
  }
  return true;
}

class GirthValue {
 public:
  static constexpr GirthValue infinite() noexcept { return GirthValue(); }
  constexpr explicit GirthValue(std::uint32_t length) noexcept : length_(length) {}

  [[nodiscard]] constexpr bool is_infinite() const noexcept { return length_ == kInfinite; }
  [[nodiscard]] constexpr std::uint32_t value() const noexcept { return length_; }
  [[nodiscard]] constexpr bool at_least(std::uint32_t bound) const noexcept {
    return length_ >= bound;
  }

  friend constexpr bool operator==(GirthValue, GirthValue) = default;

 private:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
  constexpr GirthValue() noexcept : length_(kInfinite) {}
  std::uint32_t length_;
};

inline std::string to_string(GirthValue g) {
  return g.is_infinite() ? std::string("infinite") : std::to_string(g.value());
}

// Shortest cycle length via a BFS from every vertex.
[[nodiscard]] inline GirthValue girth(const Graph& g) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t best = kUnseen;
  std::vector<std::uint32_t> dist(static_cast<std::size_t>(g.n()) + 1);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()) + 1);
  std::vector<Vertex> queue;
  queue.reserve(g.n());
  for (Vertex root = 1; root <= g.n(); ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    queue.clear();
    dist[root] = 0;
    parent[root] = 0;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  return best == kUnseen ? GirthValue::infinite() : GirthValue(best);
}

// Induced K_{1,3}, center first.
[[nodiscard]] inline std::optional<std::array<Vertex, 4>> find_claw(const Graph& g) {
  for (Vertex c = 1; c <= g.n(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return std::array<Vertex, 4>{c, nb[i], nb[j], nb[k]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Induced K_4 minus an edge: the two degree-3 vertices first, then the two
// non-adjacent ones.
[[nodiscard]] inline std::optional<std::array<Vertex, 4>> find_diamond(const Graph& g) {
  std::vector<Vertex> common;
  for (Vertex a = 1; a <= g.n(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      common.clear();
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(),
                            g.neighbors(b).begin(), g.neighbors(b).end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) {
            return std::array<Vertex, 4>{a, b, common[i], common[j]};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace mdsenum
