#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "mdsenum/graph.hpp"

// Brute-force reference enumerations. They share nothing with the flipping
// machinery beyond the Graph type and exist to check it.
namespace mdsenum::oracle {

inline constexpr Vertex kMaxVertices = 24;
inline constexpr std::size_t kMaxEdges = 20;

namespace detail {

inline VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> out;
  while (mask != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)) + 1);
    mask &= mask - 1;
  }
  return VertexSet::from_sorted(std::move(out));
}

// Closed-neighborhood bitmasks, bit i-1 for vertex i.
inline std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> out(g.n(), 0);
  for (Vertex x = 1; x <= g.n(); ++x) {
    out[x - 1] = 1u << (x - 1);
    for (Vertex y : g.neighbors(x)) out[x - 1] |= 1u << (y - 1);
  }
  return out;
}

}  // namespace detail

// All minimal dominating sets, sorted lexicographically. Walks subsets in
// Gray-code order, keeping per-vertex domination counters up to date with one
// toggle per step.
[[nodiscard]] inline std::vector<VertexSet> brute_mds(const Graph& g) {
  const Vertex n = g.n();
  if (n > kMaxVertices) {
    throw ContractViolation("brute_mds refuses graphs with more than 24 vertices");
  }
  std::vector<VertexSet> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(n) + 1, 0);
  std::size_t undominated = n;
  std::uint32_t mask = 0;
  const std::uint64_t total = std::uint64_t{1} << n;

  for (std::uint64_t step = 1; step < total; ++step) {
    const Vertex x = static_cast<Vertex>(std::countr_zero(step)) + 1;
    const std::uint32_t bit = 1u << (x - 1);
    const bool adding = (mask & bit) == 0;
    mask ^= bit;
    auto touch = [&](Vertex w) {
      if (adding) {
        if (counts[w]++ == 0) --undominated;
      } else {
        if (--counts[w] == 0) ++undominated;
      }
    };
    touch(x);
    for (Vertex y : g.neighbors(x)) touch(y);
    if (undominated != 0) continue;

    bool minimal = true;
    for (std::uint32_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
      const Vertex m = static_cast<Vertex>(std::countr_zero(rest)) + 1;
      bool has_private = counts[m] == 1;
      for (Vertex y : g.neighbors(m)) has_private = has_private || counts[y] == 1;
      minimal = has_private;
    }
    if (minimal) out.push_back(detail::mask_to_set(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All maximal independent sets, sorted lexicographically.
[[nodiscard]] inline std::vector<VertexSet> brute_mis(const Graph& g) {
  const Vertex n = g.n();
  if (n > kMaxVertices) {
    throw ContractViolation("brute_mis refuses graphs with more than 24 vertices");
  }
  std::vector<VertexSet> out;
  if (n == 0) return out;
  const auto closed = detail::closed_masks(g);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < total; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    std::uint32_t covered = 0;
    bool independent = true;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const std::uint32_t open = closed[i] & ~(1u << i);
      if (open & mask) {
        independent = false;
        break;
      }
      covered |= closed[i];
    }
    const std::uint32_t all = static_cast<std::uint32_t>(total - 1);
    if (independent && covered == all) out.push_back(detail::mask_to_set(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All minimal edge dominating sets of a root graph, each as its edge list in
// ascending edge order, sorted lexicographically. Works on the edges directly
// without building a line graph.
[[nodiscard]] inline std::vector<std::vector<Edge>> brute_eds(const Graph& root) {
  const auto edges = root.edges();
  const std::size_t m = edges.size();
  if (m > kMaxEdges) {
    throw ContractViolation("brute_eds refuses graphs with more than 20 edges");
  }
  std::vector<std::vector<Edge>> out;
  if (m == 0) return out;
  std::vector<std::uint32_t> covers(m, 0);  // edges sharing an endpoint, itself included
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const auto [p, q] = edges[a];
      const auto [r, s] = edges[b];
      if (p == r || p == s || q == r || q == s) covers[a] |= 1u << b;
    }
  }
  const std::uint32_t all = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  std::vector<std::uint32_t> prefix(m + 1), suffix(m + 1);
  for (std::uint64_t s = 1; s <= all; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    prefix[0] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      prefix[i + 1] = prefix[i] | ((mask >> i & 1u) ? covers[i] : 0u);
    }
    if (prefix[m] != all) continue;
    suffix[m] = 0;
    for (std::size_t i = m; i-- > 0;) {
      suffix[i] = suffix[i + 1] | ((mask >> i & 1u) ? covers[i] : 0u);
    }
    bool minimal = true;
    for (std::size_t i = 0; i < m && minimal; ++i) {
      if ((mask >> i & 1u) && (prefix[i] | suffix[i + 1]) == all) minimal = false;
    }
    if (!minimal) continue;
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) chosen.push_back(edges[i]);
    }
    out.push_back(std::move(chosen));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mdsenum::oracle
