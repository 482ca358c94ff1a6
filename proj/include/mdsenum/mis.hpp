#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mdsenum/graph.hpp"

namespace mdsenum {

// Lexicographically smallest maximal independent set.
[[nodiscard]] inline VertexSet first_mis(const Graph& g) {
  return greedy_max_independent(g, g.all_vertices());
}

// Maximal independent sets in strictly increasing lexicographic order, with
// polynomial delay.
//
// Candidates wait in an ordered queue. After emitting S, every vertex j outside
// S with a neighbor in S ∩ {1..j-1} proposes T = ((S ∩ {1..j-1}) \ N(j)) ∪ {j};
// when T is maximal independent inside G[{1..j}], its greedy completion over
// j+1..n is queued. Each queued set is lexicographically larger than S, so the
// queue minimum is always the next set in order and nothing repeats.
//
// The object is its own cursor: copy it to save a position, keep calling
// next() on either copy to resume.
class MisEnumerator {
 public:
  explicit MisEnumerator(const Graph& g) : graph_(&g) {}

  std::optional<VertexSet> next() {
    if (!started_) {
      started_ = true;
      queue_.insert(first_mis(*graph_));
    }
    if (queue_.empty()) return std::nullopt;
    VertexSet current = *queue_.begin();
    queue_.erase(queue_.begin());
    expand(current);
    ++emitted_;
    return current;
  }

  [[nodiscard]] std::size_t emitted() const noexcept { return emitted_; }
  [[nodiscard]] std::size_t pending() const noexcept { return queue_.size(); }

  // Elementary steps performed so far (vertex and adjacency visits plus
  // queue comparisons weighted by set length). Used to check delay bounds
  // without a wall clock.
  [[nodiscard]] std::uint64_t operations() const noexcept { return operations_; }

 private:
  void expand(const VertexSet& s) {
    const Graph& g = *graph_;
    const Vertex n = g.n();
    std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex x : s) in_s[x] = 1;
    std::vector<char> in_t(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> t;

    for (Vertex j = 1; j <= n; ++j) {
      ++operations_;
      if (in_s[j]) continue;
      bool hits_prefix = false;
      for (Vertex y : g.neighbors(j)) {
        ++operations_;
        if (y >= j) break;
        if (in_s[y]) {
          hits_prefix = true;
          break;
        }
      }
      if (!hits_prefix) continue;

      t.clear();
      for (Vertex x : s) {
        ++operations_;
        if (x >= j) break;
        if (!g.adjacent(x, j)) t.push_back(x);
      }
      t.push_back(j);
      for (Vertex x : t) in_t[x] = 1;

      if (maximal_in_prefix(j, in_t)) {
        std::vector<Vertex> completion = t;
        for (Vertex w = j + 1; w <= n; ++w) {
          ++operations_;
          bool free = true;
          for (Vertex y : g.neighbors(w)) {
            ++operations_;
            if (in_t[y]) {
              free = false;
              break;
            }
          }
          if (free) {
            completion.push_back(w);
            in_t[w] = 1;
          }
        }
        for (Vertex w : completion) in_t[w] = 0;
        operations_ += static_cast<std::uint64_t>(n) * (std::bit_width(queue_.size()) + 1);
        queue_.insert(VertexSet::from_sorted(std::move(completion)));
      } else {
        for (Vertex x : t) in_t[x] = 0;
      }
    }
  }

  // Every w <= j outside T has a neighbor in T.
  bool maximal_in_prefix(Vertex j, const std::vector<char>& in_t) {
    const Graph& g = *graph_;
    for (Vertex w = 1; w <= j; ++w) {
      ++operations_;
      if (in_t[w]) continue;
      bool covered = false;
      for (Vertex y : g.neighbors(w)) {
        ++operations_;
        if (y > j) break;
        if (in_t[y]) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
    return true;
  }

  const Graph* graph_;
  std::set<VertexSet> queue_;
  bool started_ = false;
  std::size_t emitted_ = 0;
  std::uint64_t operations_ = 0;
};

[[nodiscard]] inline std::vector<VertexSet> enumerate_mis(const Graph& g) {
  std::vector<VertexSet> out;
  MisEnumerator e(g);
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace mdsenum
