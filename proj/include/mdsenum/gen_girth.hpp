#pragma once

#include <optional>
#include <vector>

#include "mdsenum/cursor.hpp"
#include "mdsenum/flipping.hpp"
#include "mdsenum/graph.hpp"

namespace mdsenum {

struct GirthFlipContext {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet rest;  // D* \ {v}
  // y_1..y_k = P_{D*}(v) \ N[u] and Z_i = N(y_i) \ {v}.
  std::vector<Vertex> y_list;
  std::vector<std::vector<Vertex>> slots;
  bool no_children = false;
  // Isolated vertices of G[D* \ {v}] inside N(u), split by their private
  // neighbors in D*: none (X0), one of degree 1 (X1), all of degree >= 2 (X2).
  VertexSet w_set;
  VertexSet x0;
  VertexSet x1;
  std::vector<Vertex> x2;

  // Replacement sets R_{j,t} = N(x_j^t) \ {x_j} for the cursor's current
  // (Z, X); rebuilt lazily.
  bool replacements_valid = false;
  VertexSet d_prime;
  std::vector<std::vector<Vertex>> replacements;
};

// Builds the flip context for a graph of girth at least 7 (checked once per
// run, not here).
[[nodiscard]] inline GirthFlipContext build_girth_context(const Graph& g, const VertexSet& d_star,
                                                          Vertex u, Vertex v) {
  check_members(g, d_star);
  if (!d_star.contains(v) || !isolated_in(g, d_star, v)) {
    throw ContractViolation("flip: v=" + std::to_string(v) + " must be isolated in G[" +
                            to_string(d_star) + "]");
  }
  if (!g.valid(u) || !g.adjacent(u, v)) {
    throw ContractViolation("flip: u=" + std::to_string(u) + " is not a neighbor of v=" +
                            std::to_string(v));
  }
  GirthFlipContext ctx;
  ctx.u = u;
  ctx.v = v;
  ctx.rest = d_star.without(v);
  const auto count_full = domination_counts(g, d_star);

  for (Vertex y : g.neighbors(v)) {
    if (count_full[y] != 1 || y == u || g.adjacent(u, y)) continue;
    ctx.y_list.push_back(y);
    std::vector<Vertex> slot;
    for (Vertex z : g.neighbors(y)) {
      if (z != v) slot.push_back(z);
    }
    ctx.no_children = ctx.no_children || slot.empty();
    ctx.slots.push_back(std::move(slot));
  }

  std::vector<Vertex> w_set, x0, x1;
  for (Vertex x : g.neighbors(u)) {
    if (!ctx.rest.contains(x) || !isolated_in(g, ctx.rest, x)) continue;
    w_set.push_back(x);
    bool any_private = false;
    bool leaf_private = false;
    for (Vertex p : g.neighbors(x)) {
      if (count_full[p] != 1) continue;
      any_private = true;
      leaf_private = leaf_private || g.degree(p) == 1;
    }
    if (!any_private) {
      x0.push_back(x);
    } else if (leaf_private) {
      x1.push_back(x);
    } else {
      ctx.x2.push_back(x);
    }
  }
  ctx.w_set = VertexSet::from_sorted(std::move(w_set));
  ctx.x0 = VertexSet::from_sorted(std::move(x0));
  ctx.x1 = VertexSet::from_sorted(std::move(x1));
  return ctx;
}

// Child generator for graphs of girth at least 7. For each Z (one neighbor of
// every y_i), each X ⊆ X2 and each choice R of one vertex per R_{j,t}, emits
// greedy_removal((D' \ (X0 ∪ X)) ∪ R) with D' = (D* \ {v}) ∪ {u} ∪ Z. When X2
// is empty this is the single set greedy_removal(D' \ X0) per Z.
struct GirthGenerator {
  using Context = GirthFlipContext;

  static Context build(const Graph& g, const VertexSet& d_star, Vertex u, Vertex v) {
    return build_girth_context(g, d_star, u, v);
  }

  static std::optional<VertexSet> next(const Graph& g, Context& ctx, GeneratorCursor& c) {
    if (c.exhausted || ctx.no_children) {
      c.exhausted = true;
      return std::nullopt;
    }
    const std::size_t k = ctx.slots.size();
    std::vector<std::size_t> z_radices(k);
    for (std::size_t i = 0; i < k; ++i) z_radices[i] = ctx.slots[i].size();

    if (!c.started) {
      c.started = true;
      c.z_choice.assign(k, 0);
      c.x_mask.assign(ctx.x2.size(), 0);
      ctx.replacements_valid = false;
      prepare(g, ctx, c);
      c.r_choice.assign(ctx.replacements.size(), 0);
    } else {
      prepare(g, ctx, c);
      if (!advance_odometer(c.r_choice, radices(ctx))) {
        if (!advance_mask(c.x_mask) && !advance_odometer(c.z_choice, z_radices)) {
          c.exhausted = true;
          return std::nullopt;
        }
        ctx.replacements_valid = false;
        prepare(g, ctx, c);
        c.r_choice.assign(ctx.replacements.size(), 0);
      }
    }

    std::vector<char> drop(static_cast<std::size_t>(g.n()) + 1, 0);
    for (Vertex x : ctx.x0) drop[x] = 1;
    for (std::size_t j = 0; j < ctx.x2.size(); ++j) {
      if (c.x_mask[j]) drop[ctx.x2[j]] = 1;
    }
    std::vector<Vertex> members;
    for (Vertex w : ctx.d_prime) {
      if (!drop[w]) members.push_back(w);
    }
    for (std::size_t i = 0; i < ctx.replacements.size(); ++i) {
      members.push_back(ctx.replacements[i][c.r_choice[i]]);
    }
    VertexSet d_second(std::move(members));
    if (!is_dominating(g, d_second)) {
      throw InvariantFailure("girth generator built non-dominating " + to_string(d_second));
    }
    return greedy_removal(g, d_second);
  }

 private:
  static std::vector<std::size_t> radices(const Context& ctx) {
    std::vector<std::size_t> r(ctx.replacements.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx.replacements[i].size();
    return r;
  }

  // Recomputes D' and the R_{j,t} lists for the cursor's (Z, X).
  static void prepare(const Graph& g, Context& ctx, const GeneratorCursor& c) {
    if (ctx.replacements_valid) return;
    std::vector<Vertex> z;
    for (std::size_t i = 0; i < ctx.slots.size(); ++i) z.push_back(ctx.slots[i][c.z_choice[i]]);
    ctx.d_prime = set_union(ctx.rest.with(ctx.u), VertexSet(z));
    ctx.replacements.clear();

    const auto counts = domination_counts(g, ctx.d_prime);
    std::vector<char> used(static_cast<std::size_t>(g.n()) + 1, 0);
    for (const auto& slot : ctx.slots) {
      for (Vertex zi : slot) used[zi] = 1;
    }
    for (std::size_t j = 0; j < ctx.x2.size(); ++j) {
      if (!c.x_mask[j]) continue;
      const Vertex xj = ctx.x2[j];
      for (Vertex p : g.neighbors(xj)) {
        if (counts[p] != 1) continue;  // p ∈ P_{D'}(x_j)
        std::vector<Vertex> r;
        for (Vertex w : g.neighbors(p)) {
          if (w == xj) continue;
          if (used[w]) {
            throw InvariantFailure("replacement sets meet at vertex " + std::to_string(w));
          }
          used[w] = 1;
          r.push_back(w);
        }
        if (r.empty()) {
          throw InvariantFailure("private " + std::to_string(p) + " of " + std::to_string(xj) +
                                 " has no replacement");
        }
        ctx.replacements.push_back(std::move(r));
      }
    }
    ctx.replacements_valid = true;
  }
};

static_assert(ChildGenerator<GirthGenerator>);

[[nodiscard]] inline std::vector<VertexSet> children_girth(const Graph& g,
                                                           const VertexSet& d_star, Vertex u,
                                                           Vertex v) {
  auto ctx = GirthGenerator::build(g, d_star, u, v);
  GeneratorCursor cursor;
  std::vector<VertexSet> out;
  while (auto d = GirthGenerator::next(g, ctx, cursor)) out.push_back(std::move(*d));
  return out;
}

}  // namespace mdsenum
