#pragma once

#include <optional>
#include <vector>

#include "mdsenum/flip_common.hpp"
#include "mdsenum/flipping.hpp"

namespace mdsenum {

struct BipFlipContext {
  FlipFrame frame;
  // R_j and S_j for each v_j ∈ D* \ {v}, parallel to frame.rest.
  std::vector<VertexSet> minimality_guards;  // R_j
  std::vector<VertexSet> parent_guards;      // S_j
  SlotProduct product;

  [[nodiscard]] FlipCase flip_case() const noexcept { return product.flip_case; }
  [[nodiscard]] std::size_t k() const noexcept { return frame.x_list.size(); }
};

// Splits N(x) into the connected pieces of G[N(x)]. In the line graph of a
// bipartite graph there are at most two and each is a clique with no edges to
// the other.
[[nodiscard]] inline std::vector<VertexSet> neighborhood_cliques(const Graph& g, Vertex x) {
  auto nb = g.neighbors(x);
  std::vector<int> side(nb.size(), -1);
  std::vector<VertexSet> out;
  for (std::size_t s = 0; s < nb.size(); ++s) {
    if (side[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<std::size_t> stack{s};
    std::vector<Vertex> members;
    side[s] = id;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      members.push_back(nb[a]);
      for (std::size_t b = 0; b < nb.size(); ++b) {
        if (side[b] < 0 && g.adjacent(nb[a], nb[b])) {
          side[b] = id;
          stack.push_back(b);
        }
      }
    }
    VertexSet piece(std::move(members));
    for (std::size_t i = 0; i < piece.size(); ++i) {
      for (std::size_t j = i + 1; j < piece.size(); ++j) {
        if (!g.adjacent(piece[i], piece[j])) {
          throw UnsupportedInput("neighborhood of vertex " + std::to_string(x) +
                                 " is not a union of disjoint cliques");
        }
      }
    }
    out.push_back(std::move(piece));
  }
  if (out.size() > 2) {
    throw UnsupportedInput("neighborhood of vertex " + std::to_string(x) +
                           " splits into more than two cliques");
  }
  return out;
}

// Builds the flip context for the line graph of a bipartite graph.
//
// With A = N(v) \ N[u] and P_j = P_{D*}[v_j]:
//   R_j = N(v_j)   if P_j \ U = {v_j} and N(v_j) ∩ A = ∅;
//   R_j = K        if P_j \ U ≠ {v_j}, every x ∈ N(v_j) ∩ A has two or more
//                  neighbors in D* \ {v}, and P_{D*}(v_j) \ U lies inside the
//                  clique K of N(v_j);
//   R_j = ∅        otherwise.
//   S_j = {w ∈ N(v_j) : w > v_j} when some x ∈ A has v_j as its only neighbor
//                  in D* \ {v} and (P_j ∩ N(x)) \ U ⊆ {v_j}; else ∅.
// Z_i keeps N(x_i) \ N[v] vertices adjacent to D* \ {v} and outside every
// R_j and S_j.
[[nodiscard]] inline BipFlipContext build_bip_context(const Graph& g, const VertexSet& d_star,
                                                      Vertex u, Vertex v) {
  BipFlipContext ctx{make_flip_frame(g, d_star, u, v), {}, {}, {}};
  const FlipFrame& f = ctx.frame;
  const std::size_t size = static_cast<std::size_t>(g.n()) + 1;

  std::vector<char> in_a(size, 0);
  for (Vertex x : g.neighbors(v)) {
    if (x != u && !g.adjacent(u, x)) in_a[x] = 1;
  }
  auto in_u = [&](Vertex w) { return f.in_u_cover[w] != 0; };

  std::vector<char> excluded(size, 0);
  for (Vertex vj : f.rest) {
    std::vector<Vertex> closed_private;  // P_{D*}[v_j]
    if (f.count_full[vj] == 1) closed_private.push_back(vj);
    for (Vertex w : g.neighbors(vj)) {
      if (f.count_full[w] == 1) closed_private.push_back(w);
    }
    std::vector<Vertex> open_outside_u;  // P_{D*}(v_j) \ U
    bool self_outside_u = false;
    for (Vertex w : closed_private) {
      if (in_u(w)) continue;
      if (w == vj) {
        self_outside_u = true;
      } else {
        open_outside_u.push_back(w);
      }
    }
    const bool only_self = self_outside_u && open_outside_u.empty();

    bool touches_a = false;
    bool a_doubly_dominated = true;
    for (Vertex x : g.neighbors(vj)) {
      if (!in_a[x]) continue;
      touches_a = true;
      a_doubly_dominated = a_doubly_dominated && f.count_rest[x] >= 2;
    }

    VertexSet r_j;
    if (only_self && !touches_a) {
      r_j = g.open_neighborhood(vj);
    } else if (!only_self && a_doubly_dominated) {
      VertexSet outside = VertexSet::from_sorted(open_outside_u);
      for (const VertexSet& clique : neighborhood_cliques(g, vj)) {
        if (is_subset(outside, clique)) {
          r_j = clique;
          break;
        }
      }
    }

    VertexSet s_j;
    for (Vertex x : g.neighbors(vj)) {
      if (!in_a[x] || f.count_rest[x] != 1) continue;
      bool privates_fit = true;
      for (Vertex w : closed_private) {
        if (w != vj && !in_u(w) && g.adjacent(w, x)) {
          privates_fit = false;
          break;
        }
      }
      if (privates_fit) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(vj)) {
          if (w > vj) later.push_back(w);
        }
        s_j = VertexSet::from_sorted(std::move(later));
        break;
      }
    }

    for (Vertex w : r_j) excluded[w] = 1;
    for (Vertex w : s_j) excluded[w] = 1;
    ctx.minimality_guards.push_back(std::move(r_j));
    ctx.parent_guards.push_back(std::move(s_j));
  }

  const bool covered = some_member_covered(g, f);
  for (Vertex x : f.x_list) {
    std::vector<Vertex> slot;
    for (Vertex z : g.neighbors(x)) {
      if (f.in_closed_v[z] || excluded[z]) continue;
      if (f.count_rest[z] == 0 || f.rest.contains(z)) continue;
      slot.push_back(z);
    }
    ctx.product.slots.push_back(std::move(slot));
  }
  check_slots_disjoint(g, f, ctx.product);
  classify(g, f, covered, ctx.product);
  return ctx;
}

// Child generator for line graphs of bipartite graphs. Emissions are exactly
// the children of the flip, as (D* \ {v}) ∪ {u} ∪ Z without any minimization.
struct BipartiteGenerator {
  using Context = BipFlipContext;

  static Context build(const Graph& g, const VertexSet& d_star, Vertex u, Vertex v) {
    return build_bip_context(g, d_star, u, v);
  }

  static std::optional<VertexSet> next(const Graph& g, Context& ctx, GeneratorCursor& cursor) {
    auto z = next_slot_choice(ctx.product, cursor);
    if (!z) return std::nullopt;
    VertexSet d = set_union(ctx.frame.base, VertexSet(std::move(*z)));
    if (!is_minimal_dominating(g, d)) {
      throw InvariantFailure("bipartite generator built non-minimal " + to_string(d) + " for u=" +
                             std::to_string(ctx.frame.u) + " v=" + std::to_string(ctx.frame.v));
    }
    return d;
  }
};

static_assert(ChildGenerator<BipartiteGenerator>);

[[nodiscard]] inline std::vector<VertexSet> children_bip(const Graph& g, const VertexSet& d_star,
                                                         Vertex u, Vertex v) {
  auto ctx = BipartiteGenerator::build(g, d_star, u, v);
  GeneratorCursor cursor;
  std::vector<VertexSet> out;
  while (auto d = BipartiteGenerator::next(g, ctx, cursor)) out.push_back(std::move(*d));
  return out;
}

}  // namespace mdsenum
