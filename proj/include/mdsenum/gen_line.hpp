#pragma once

#include <optional>
#include <vector>

#include "mdsenum/flip_common.hpp"
#include "mdsenum/flipping.hpp"

namespace mdsenum {

struct LineFlipContext {
  FlipFrame frame;
  VertexSet forbidden;  // R = ⋃_j R_j
  SlotProduct product;

  [[nodiscard]] FlipCase flip_case() const noexcept { return product.flip_case; }
  [[nodiscard]] std::size_t k() const noexcept { return frame.x_list.size(); }
};

// Builds the flip context for a claw-free graph (claw-freeness is checked
// once per run, not here).
//
// For every v_j ∈ D* \ {v} with a neighbor v_s in D* or equal to u, the clique
// R_j = N(v_j) \ N[v_s] holds vertices that can never be added; v_s is the
// smallest D* neighbor of v_j, falling back to u. Slot Z_i keeps the vertices
// z ∈ N(D* \ {v}) ∩ N(x_i) outside N[v] ∪ R whose only neighbor among
// x_1..x_k is x_i.
[[nodiscard]] inline LineFlipContext build_line_context(const Graph& g, const VertexSet& d_star,
                                                        Vertex u, Vertex v) {
  LineFlipContext ctx{make_flip_frame(g, d_star, u, v), {}, {}};
  const FlipFrame& f = ctx.frame;
  const std::size_t size = static_cast<std::size_t>(g.n()) + 1;

  std::vector<char> in_forbidden(size, 0);
  for (Vertex vj : f.rest) {
    Vertex anchor = 0;
    for (Vertex w : g.neighbors(vj)) {
      if (d_star.contains(w)) {
        anchor = w;
        break;
      }
    }
    if (anchor == 0 && g.adjacent(vj, u)) anchor = u;
    if (anchor == 0) continue;
    for (Vertex w : g.neighbors(vj)) {
      if (w != anchor && !g.adjacent(anchor, w)) in_forbidden[w] = 1;
    }
  }
  std::vector<Vertex> forbidden;
  for (Vertex w = 1; w <= g.n(); ++w) {
    if (in_forbidden[w]) forbidden.push_back(w);
  }
  ctx.forbidden = VertexSet::from_sorted(std::move(forbidden));

  const bool covered = some_member_covered(g, f);
  for (Vertex x : f.x_list) {
    std::vector<Vertex> slot;
    for (Vertex z : g.neighbors(x)) {
      if (f.in_closed_v[z] || in_forbidden[z]) continue;
      // z ∈ N(D* \ {v}); z ∉ D* because x is a private of v.
      if (f.count_rest[z] == 0 || f.rest.contains(z)) continue;
      std::size_t x_neighbors = 0;
      for (Vertex y : g.neighbors(z)) x_neighbors += f.in_x[y];
      if (x_neighbors == 1) slot.push_back(z);
    }
    ctx.product.slots.push_back(std::move(slot));
  }
  check_slots_disjoint(g, f, ctx.product);
  classify(g, f, covered, ctx.product);
  return ctx;
}

// Child generator for line graphs. Every emission is the greedy minimization
// of (D* \ {v}) ∪ {u} ∪ Z; the family contains all children of the flip and
// each member has strictly more induced edges than D*.
struct LineGenerator {
  using Context = LineFlipContext;

  static Context build(const Graph& g, const VertexSet& d_star, Vertex u, Vertex v) {
    return build_line_context(g, d_star, u, v);
  }

  static std::optional<VertexSet> next(const Graph& g, Context& ctx, GeneratorCursor& cursor) {
    auto z = next_slot_choice(ctx.product, cursor);
    if (!z) return std::nullopt;
    return greedy_removal(g, set_union(ctx.frame.base, VertexSet(std::move(*z))));
  }
};

static_assert(ChildGenerator<LineGenerator>);

// Whole child family of one flip, in generation order.
[[nodiscard]] inline std::vector<VertexSet> children_line(const Graph& g, const VertexSet& d_star,
                                                          Vertex u, Vertex v) {
  auto ctx = LineGenerator::build(g, d_star, u, v);
  GeneratorCursor cursor;
  std::vector<VertexSet> out;
  while (auto d = LineGenerator::next(g, ctx, cursor)) out.push_back(std::move(*d));
  return out;
}

}  // namespace mdsenum
