#pragma once

#include <optional>
#include <vector>

#include "mdsenum/cursor.hpp"
#include "mdsenum/graph.hpp"

namespace mdsenum {

// How a flip (D*, u, v) produces children on line graphs.
enum class FlipCase : int {
  no_children = 1,  // one of the Case-1 conditions rules out every child
  u_attached = 2,   // u already has a neighbor in D* \ {v}
  u_via_added = 3,  // u must be dominated by one of the added vertices
};

// Pieces shared by the line-graph and bipartite-line-graph generators.
struct FlipFrame {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet rest;  // D* \ {v}
  VertexSet base;  // (D* \ {v}) ∪ {u}
  // x_1..x_k = P_{D*}(v) \ N[u], ascending.
  std::vector<Vertex> x_list;
  std::vector<char> in_x;
  // U = N[u] ∪ ⋃_i ((N[x_i] \ N[v]) ∪ {x_i})
  std::vector<char> in_u_cover;
  std::vector<char> in_closed_v;
  // |N[w] ∩ D*| and |N[w] ∩ (D* \ {v})|
  std::vector<std::uint32_t> count_full;
  std::vector<std::uint32_t> count_rest;
};

[[nodiscard]] inline FlipFrame make_flip_frame(const Graph& g, const VertexSet& d_star, Vertex u,
                                               Vertex v) {
  check_members(g, d_star);
  if (!d_star.contains(v) || !isolated_in(g, d_star, v)) {
    throw ContractViolation("flip: v=" + std::to_string(v) + " must be isolated in G[" +
                            to_string(d_star) + "]");
  }
  if (!g.valid(u) || !g.adjacent(u, v)) {
    throw ContractViolation("flip: u=" + std::to_string(u) + " is not a neighbor of v=" +
                            std::to_string(v));
  }
  const std::size_t size = static_cast<std::size_t>(g.n()) + 1;
  FlipFrame f;
  f.u = u;
  f.v = v;
  f.rest = d_star.without(v);
  f.base = f.rest.with(u);
  f.count_full = domination_counts(g, d_star);
  f.count_rest = domination_counts(g, f.rest);

  f.in_closed_v.assign(size, 0);
  f.in_closed_v[v] = 1;
  for (Vertex w : g.neighbors(v)) f.in_closed_v[w] = 1;

  f.in_x.assign(size, 0);
  for (Vertex w : g.neighbors(v)) {
    if (f.count_full[w] == 1 && w != u && !g.adjacent(u, w)) {
      f.x_list.push_back(w);
      f.in_x[w] = 1;
    }
  }

  f.in_u_cover.assign(size, 0);
  f.in_u_cover[u] = 1;
  for (Vertex w : g.neighbors(u)) f.in_u_cover[w] = 1;
  for (Vertex x : f.x_list) {
    f.in_u_cover[x] = 1;
    for (Vertex w : g.neighbors(x)) {
      if (!f.in_closed_v[w]) f.in_u_cover[w] = 1;
    }
  }
  return f;
}

// Case-1 condition (i): some x ∈ D* \ {v} with N[x] ⊆ N[D* \ {v, x}] ∪ U.
[[nodiscard]] inline bool some_member_covered(const Graph& g, const FlipFrame& f) {
  for (Vertex x : f.rest) {
    bool covered = f.count_rest[x] >= 2 || f.in_u_cover[x];
    for (Vertex w : g.neighbors(x)) {
      if (!covered) break;
      covered = f.count_rest[w] >= 2 || f.in_u_cover[w];
    }
    if (covered) return true;
  }
  return false;
}

// Candidate slots Z_1..Z_k plus the Case 2 / Case 3 product over them.
struct SlotProduct {
  FlipCase flip_case = FlipCase::no_children;
  std::vector<std::vector<Vertex>> slots;        // Z_i
  std::vector<std::vector<Vertex>> slots_in_nu;  // Z_i ∩ N(u)
  std::vector<std::vector<Vertex>> slots_out_nu; // Z_i \ N(u)
  std::size_t first_slot = 0;                    // Case 3: j
  std::size_t last_slot = 0;                     // Case 3: j'
};

// Classifies the flip once the Z_i are known. `covered` is Case-1 condition (i).
inline void classify(const Graph& g, const FlipFrame& f, bool covered, SlotProduct& p) {
  const std::size_t k = p.slots.size();
  p.slots_in_nu.assign(k, {});
  p.slots_out_nu.assign(k, {});
  bool any_in_nu = false;
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex z : p.slots[i]) {
      (g.adjacent(f.u, z) ? p.slots_in_nu[i] : p.slots_out_nu[i]).push_back(z);
    }
    any_in_nu = any_in_nu || !p.slots_in_nu[i].empty();
  }
  const bool u_attached = f.count_rest[f.u] >= 1;

  bool empty_slot = false;
  for (const auto& s : p.slots) empty_slot = empty_slot || s.empty();

  if (covered || (k >= 1 && empty_slot) || (!u_attached && !any_in_nu)) {
    p.flip_case = FlipCase::no_children;
    return;
  }
  if (u_attached) {
    p.flip_case = FlipCase::u_attached;
    return;
  }
  p.flip_case = FlipCase::u_via_added;
  if (k == 0) throw InvariantFailure("Case 3 reached with no slots");
  std::size_t j = 0;
  while (p.slots_in_nu[j].empty()) ++j;
  std::size_t j_last = k - 1;
  for (std::size_t t = j; t < k; ++t) {
    if (p.slots_out_nu[t].empty()) {
      j_last = t;
      break;
    }
  }
  p.first_slot = j;
  p.last_slot = j_last;
}

// Radix of slot i while slot t holds the u-neighbor w.
[[nodiscard]] inline std::size_t case3_radix(const SlotProduct& p, std::size_t i, std::size_t t) {
  if (i == t) return 1;
  return i < t ? p.slots_out_nu[i].size() : p.slots[i].size();
}

[[nodiscard]] inline bool case3_slot_usable(const SlotProduct& p, std::size_t t) {
  if (p.slots_in_nu[t].empty()) return false;
  for (std::size_t i = 0; i < p.slots.size(); ++i) {
    if (case3_radix(p, i, t) == 0) return false;
  }
  return true;
}

// Moves the cursor to the next Z and returns it (unsorted), or nullopt when
// the product is exhausted. Case 2 walks z_1..z_k as an odometer; Case 3 walks
// t = j..j', then w ∈ N(u) ∩ Z_t, then the odometer over the other slots.
[[nodiscard]] inline std::optional<std::vector<Vertex>> next_slot_choice(const SlotProduct& p,
                                                                         GeneratorCursor& c) {
  const std::size_t k = p.slots.size();
  if (c.exhausted || p.flip_case == FlipCase::no_children) {
    c.exhausted = true;
    return std::nullopt;
  }

  if (p.flip_case == FlipCase::u_attached) {
    std::vector<std::size_t> radices(k);
    for (std::size_t i = 0; i < k; ++i) radices[i] = p.slots[i].size();
    if (!c.started) {
      c.started = true;
      c.z_choice.assign(k, 0);
    } else if (!advance_odometer(c.z_choice, radices)) {
      c.exhausted = true;
      return std::nullopt;
    }
    std::vector<Vertex> z(k);
    for (std::size_t i = 0; i < k; ++i) z[i] = p.slots[i][c.z_choice[i]];
    return z;
  }

  auto seek_slot = [&](std::size_t t) {
    while (t <= p.last_slot && !case3_slot_usable(p, t)) ++t;
    return t;
  };
  if (!c.started) {
    c.started = true;
    c.z_choice.assign(k, 0);
    c.slot = seek_slot(p.first_slot);
    c.w_index = 0;
  } else {
    std::vector<std::size_t> radices(k);
    for (std::size_t i = 0; i < k; ++i) radices[i] = case3_radix(p, i, c.slot);
    if (!advance_odometer(c.z_choice, radices, c.slot)) {
      if (++c.w_index >= p.slots_in_nu[c.slot].size()) {
        c.w_index = 0;
        c.slot = seek_slot(c.slot + 1);
      }
    }
  }
  if (c.slot > p.last_slot) {
    c.exhausted = true;
    return std::nullopt;
  }
  std::vector<Vertex> z(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i == c.slot) {
      z[i] = p.slots_in_nu[i][c.w_index];
    } else {
      z[i] = (i < c.slot ? p.slots_out_nu[i] : p.slots[i])[c.z_choice[i]];
    }
  }
  return z;
}

// Z_i must avoid D* and be pairwise disjoint.
inline void check_slots_disjoint(const Graph& g, const FlipFrame& f, const SlotProduct& p) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
  for (const auto& slot : p.slots) {
    for (Vertex z : slot) {
      if (seen[z] || f.rest.contains(z) || z == f.v) {
        throw InvariantFailure("candidate slots overlap or meet D* at vertex " +
                               std::to_string(z));
      }
      seen[z] = 1;
    }
  }
}

}  // namespace mdsenum
