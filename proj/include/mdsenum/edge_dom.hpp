#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mdsenum/flipping.hpp"
#include "mdsenum/gen_bipartite.hpp"
#include "mdsenum/gen_line.hpp"
#include "mdsenum/graph.hpp"

namespace mdsenum {

// Root graph, its line graph, and the edge <-> vertex bijection. Line-graph
// vertex i is the i-th root edge in ascending (min endpoint, max endpoint)
// order.
struct LineGraphMap {
  Graph root;
  Graph line;
  std::vector<Edge> edge_of_vertex;  // index 1..m; slot 0 unused

  [[nodiscard]] Edge edge_of(Vertex x) const { return edge_of_vertex.at(x); }

  [[nodiscard]] Vertex vertex_of(Edge e) const {
    if (e.first > e.second) std::swap(e.first, e.second);
    auto it = std::lower_bound(edge_of_vertex.begin() + 1, edge_of_vertex.end(), e);
    if (it == edge_of_vertex.end() || *it != e) {
      throw InputError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                       " is not in the root graph");
    }
    return static_cast<Vertex>(it - edge_of_vertex.begin());
  }

  [[nodiscard]] std::vector<Edge> edges_of(const VertexSet& s) const {
    std::vector<Edge> out;
    out.reserve(s.size());
    for (Vertex x : s) out.push_back(edge_of(x));
    return out;
  }

  [[nodiscard]] VertexSet vertices_of(const std::vector<Edge>& edges) const {
    std::vector<Vertex> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(vertex_of(e));
    return VertexSet(std::move(out));
  }
};

[[nodiscard]] inline LineGraphMap line_graph(const Graph& root) {
  if (root.m() == 0) throw InputError("line graph of an edgeless graph is empty");
  LineGraphMap map;
  map.root = root;
  map.edge_of_vertex.push_back({0, 0});
  auto edges = root.edges();
  map.edge_of_vertex.insert(map.edge_of_vertex.end(), edges.begin(), edges.end());

  std::vector<std::vector<Vertex>> incident(static_cast<std::size_t>(root.n()) + 1);
  for (Vertex id = 1; id <= edges.size(); ++id) {
    incident[edges[id - 1].first].push_back(id);
    incident[edges[id - 1].second].push_back(id);
  }
  std::vector<Edge> line_edges;
  for (const auto& at : incident) {
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) line_edges.emplace_back(at[i], at[j]);
    }
  }
  map.line = Graph(static_cast<Vertex>(edges.size()), line_edges);
  return map;
}

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<std::uint8_t> color;  // valid when bipartite; index 0 unused
  std::vector<Vertex> odd_cycle;    // valid when not bipartite, in cycle order
};

// BFS 2-coloring; returns an odd cycle as the witness when coloring fails.
[[nodiscard]] inline BipartiteCheck is_bipartite(const Graph& g) {
  const std::size_t size = static_cast<std::size_t>(g.n()) + 1;
  constexpr std::uint8_t kNone = 2;
  BipartiteCheck out;
  out.color.assign(size, kNone);
  std::vector<Vertex> parent(size, 0);
  std::vector<std::uint32_t> depth(size, 0);

  for (Vertex s = 1; s <= g.n(); ++s) {
    if (out.color[s] != kNone) continue;
    out.color[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (out.color[y] == kNone) {
          out.color[y] = static_cast<std::uint8_t>(1 - out.color[x]);
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (out.color[y] == out.color[x]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> left{x}, right{y};
          Vertex a = x, b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          out.odd_cycle = std::move(left);
          out.bipartite = false;
          out.color.clear();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

inline void require_claw_free(const Graph& g) {
  if (auto claw = find_claw(g)) {
    const auto& c = *claw;
    throw UnsupportedInput("graph has an induced claw: center " + std::to_string(c[0]) +
                           ", leaves " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " " +
                           std::to_string(c[3]));
  }
}

inline void require_diamond_free(const Graph& g) {
  if (auto d = find_diamond(g)) {
    const auto& c = *d;
    throw UnsupportedInput("graph has an induced diamond on " + std::to_string(c[0]) + " " +
                           std::to_string(c[1]) + " " + std::to_string(c[2]) + " " +
                           std::to_string(c[3]));
  }
}

inline void require_girth_at_least_7(const Graph& g) {
  GirthValue gv = girth(g);
  if (!gv.at_least(7)) {
    throw UnsupportedInput("graph has girth " + to_string(gv) + ", need at least 7");
  }
}

// Minimal edge dominating sets of a root graph, via minimal dominating sets
// of its line graph. Bipartite roots use the exact-children generator unless
// `force_general` is set.
class EdgeDomEnumerator {
 public:
  explicit EdgeDomEnumerator(const Graph& root, bool force_general = false,
                             DriverOptions options = {})
      : map_(std::make_unique<LineGraphMap>(line_graph(root))) {
    const Graph& line = map_->line;
    bipartite_root_ = is_bipartite(root).bipartite;
    require_claw_free(line);
    if (bipartite_root_ && !force_general) {
      require_diamond_free(line);
      driver_.template emplace<FlipEnumerator<BipartiteGenerator>>(line, std::move(options));
    } else {
      driver_.template emplace<FlipEnumerator<LineGenerator>>(line, std::move(options));
    }
  }

  std::optional<std::vector<Edge>> next() {
    auto s = next_vertex_set();
    if (!s) return std::nullopt;
    return map_->edges_of(*s);
  }

  // The same stream, as line-graph vertex sets.
  std::optional<VertexSet> next_vertex_set() {
    return std::visit([](auto& d) -> std::optional<VertexSet> {
      if constexpr (std::is_same_v<std::decay_t<decltype(d)>, std::monostate>) {
        return std::nullopt;
      } else {
        return d.next();
      }
    }, driver_);
  }

  [[nodiscard]] DelayStats stats() const {
    return std::visit([](const auto& d) -> DelayStats {
      if constexpr (std::is_same_v<std::decay_t<decltype(d)>, std::monostate>) {
        return {};
      } else {
        return d.stats();
      }
    }, driver_);
  }

  [[nodiscard]] const LineGraphMap& map() const noexcept { return *map_; }
  [[nodiscard]] bool bipartite_root() const noexcept { return bipartite_root_; }
  [[nodiscard]] bool uses_bipartite_generator() const noexcept {
    return std::holds_alternative<FlipEnumerator<BipartiteGenerator>>(driver_);
  }

 private:
  std::unique_ptr<LineGraphMap> map_;  // drivers point into map_->line
  bool bipartite_root_ = false;
  std::variant<std::monostate, FlipEnumerator<LineGenerator>, FlipEnumerator<BipartiteGenerator>>
      driver_;
};

[[nodiscard]] inline std::vector<std::vector<Edge>> enumerate_min_eds(const Graph& root,
                                                                      bool force_general = false) {
  EdgeDomEnumerator e(root, force_general);
  std::vector<std::vector<Edge>> out;
  while (auto a = e.next()) out.push_back(std::move(*a));
  return out;
}

// "1-2 3-4"
[[nodiscard]] inline std::string edges_to_string(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.first) + "-" + std::to_string(e.second);
  }
  return out;
}

}  // namespace mdsenum
