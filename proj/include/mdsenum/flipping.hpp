#pragma once

#include <chrono>
#include <concepts>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mdsenum/cursor.hpp"
#include "mdsenum/graph.hpp"
#include "mdsenum/mis.hpp"

namespace mdsenum {

struct FlipPair {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const FlipPair&, const FlipPair&) = default;
};

struct ParentResult {
  VertexSet parent;
  VertexSet x_set;
  VertexSet z_set;
};

// Structural facts compute_parent can assert for a known graph class.
enum class ParentCheck {
  none,
  line_graph,  // X_uv is always empty
  girth7,      // X_uv = P_D(u) \ {v}
};

// Parent of D with respect to flipping u and v:
//   X  = greedy maximal independent subset of P_D(u) \ N[v]
//   D' = (D \ {u}) ∪ X ∪ {v}
//   D* = greedy_removal(D'),  Z = D' \ D*
// Unique per (D, u, v) because both X and Z come from greedy passes.
[[nodiscard]] inline ParentResult compute_parent(const Graph& g, const VertexSet& d, Vertex u,
                                                 Vertex v, ParentCheck check = ParentCheck::none) {
  check_members(g, d);
  if (!is_minimal_dominating(g, d)) {
    throw ContractViolation("compute_parent: " + to_string(d) + " is not minimal dominating");
  }
  if (!g.valid(u) || !d.contains(u) || isolated_in(g, d, u)) {
    throw ContractViolation("compute_parent: u=" + std::to_string(u) +
                            " must be a member of D with a neighbor in D");
  }
  VertexSet privates_u = private_open(g, d, u);
  if (!g.valid(v) || !privates_u.contains(v)) {
    throw ContractViolation("compute_parent: v=" + std::to_string(v) +
                            " is not a private neighbor of u=" + std::to_string(u));
  }

  VertexSet candidates = set_difference(privates_u, g.closed_neighborhood(v));
  VertexSet x_set = greedy_max_independent(g, candidates);
  VertexSet d_prime = set_union(d.without(u), x_set).with(v);
  VertexSet parent = greedy_removal(g, d_prime);
  VertexSet z_set = set_difference(d_prime, parent);

  if (check == ParentCheck::line_graph && !x_set.empty()) {
    throw InvariantFailure("line graph parent has non-empty X_uv " + to_string(x_set));
  }
  if (check == ParentCheck::girth7 && x_set != privates_u.without(v)) {
    throw InvariantFailure("girth>=7 parent has X_uv " + to_string(x_set) + " != P_D(u)\\{v}");
  }
  return {std::move(parent), std::move(x_set), std::move(z_set)};
}

// All (u, v) with v isolated in G[D*] and u ∈ N(v), ascending by (v, u).
[[nodiscard]] inline std::vector<FlipPair> flip_pairs(const Graph& g, const VertexSet& d_star) {
  std::vector<FlipPair> out;
  for (Vertex v : d_star) {
    if (!isolated_in(g, d_star, v)) continue;
    for (Vertex u : g.neighbors(v)) out.push_back({u, v});
  }
  return out;
}

// A child generator builds a context for one flip (D*, u, v) and streams a
// family of minimal dominating sets that contains every child of D* with
// respect to that flip. next() must be restartable: a freshly built context
// plus a saved cursor continues exactly where the cursor left off.
template <class G>
concept ChildGenerator =
    requires(const Graph& g, const VertexSet& d, Vertex u, Vertex v,
             typename G::Context& ctx, GeneratorCursor& cursor) {
      { G::build(g, d, u, v) } -> std::same_as<typename G::Context>;
      { G::next(g, ctx, cursor) } -> std::same_as<std::optional<VertexSet>>;
    };

struct DriverOptions {
  // Called for every generator emission, new or already in the ledger.
  std::function<void(const VertexSet& parent, FlipPair flip, const VertexSet& child)>
      on_emission;
};

struct DelayStats {
  std::size_t emitted = 0;
  double max_delay_ms = 0.0;
  double mean_delay_ms = 0.0;
  std::size_t max_stack_depth = 0;  // node records including the root record
  std::size_t ledger_size = 0;
  std::size_t generator_emissions = 0;
  std::size_t repeated_emissions = 0;  // emissions already in the ledger
};

// Depth-first search over the implicit solution graph: the root's out-arcs go
// to the maximal independent sets, and each minimal dominating set's out-arcs
// go to whatever the generator produces for its flip pairs. A set is reported
// the moment it first enters the ledger.
template <ChildGenerator Gen>
class FlipEnumerator {
 public:
  explicit FlipEnumerator(const Graph& g, DriverOptions options = {})
      : graph_(&g), options_(std::move(options)), roots_(g), last_output_(Clock::now()) {}

  std::optional<VertexSet> next() {
    const Graph& g = *graph_;
    while (true) {
      if (records_.empty()) {
        if (roots_done_) return std::nullopt;
        auto seed = roots_.next();
        if (!seed) {
          roots_done_ = true;
          continue;
        }
        if (ledger_.insert(*seed).second) return discover(std::move(*seed));
        continue;
      }

      NodeRecord& top = records_.back();
      if (!active_) {
        active_pairs_ = flip_pairs(g, top.set);
        if (top.pair_index >= active_pairs_.size()) {
          records_.pop_back();
          continue;
        }
        const FlipPair flip = active_pairs_[top.pair_index];
        active_.emplace(Gen::build(g, top.set, flip.u, flip.v));
      }

      const FlipPair flip = active_pairs_[top.pair_index];
      std::optional<VertexSet> child = Gen::next(g, *active_, top.cursor);
      if (!child) {
        ++top.pair_index;
        top.cursor = GeneratorCursor{};
        active_.reset();
        continue;
      }
      ++generator_emissions_;
      if (!is_minimal_dominating(g, *child)) {
        throw InvariantFailure("generator emitted " + to_string(*child) + " for D*=" +
                               to_string(top.set) + " u=" + std::to_string(flip.u) +
                               " v=" + std::to_string(flip.v) +
                               ", which is not a minimal dominating set");
      }
      if (options_.on_emission) options_.on_emission(top.set, flip, *child);
      if (ledger_.insert(*child).second) return discover(std::move(*child));
      ++repeated_emissions_;
    }
  }

  [[nodiscard]] DelayStats stats() const {
    DelayStats s;
    s.emitted = emitted_;
    s.max_delay_ms = max_delay_ms_;
    s.mean_delay_ms = emitted_ == 0 ? 0.0 : total_delay_ms_ / static_cast<double>(emitted_);
    s.max_stack_depth = max_depth_;
    s.ledger_size = ledger_.size();
    s.generator_emissions = generator_emissions_;
    s.repeated_emissions = repeated_emissions_;
    return s;
  }

  [[nodiscard]] const std::set<VertexSet>& ledger() const noexcept { return ledger_; }
  [[nodiscard]] std::size_t stack_depth() const noexcept { return records_.size() + 1; }

 private:
  using Clock = std::chrono::steady_clock;

  struct NodeRecord {
    VertexSet set;
    std::size_t pair_index = 0;
    GeneratorCursor cursor;
  };

  VertexSet discover(VertexSet found) {
    records_.push_back({found, 0, {}});
    active_.reset();
    max_depth_ = std::max(max_depth_, records_.size() + 1);

    auto now = Clock::now();
    double delay = std::chrono::duration<double, std::milli>(now - last_output_).count();
    last_output_ = now;
    max_delay_ms_ = std::max(max_delay_ms_, delay);
    total_delay_ms_ += delay;
    ++emitted_;
    return found;
  }

  const Graph* graph_;
  DriverOptions options_;
  MisEnumerator roots_;
  bool roots_done_ = false;
  std::set<VertexSet> ledger_;
  std::vector<NodeRecord> records_;
  // Context of the top record's current flip; dropped whenever the top
  // changes and rebuilt from the record's cursor on resume.
  std::optional<typename Gen::Context> active_;
  std::vector<FlipPair> active_pairs_;

  Clock::time_point last_output_;
  std::size_t emitted_ = 0;
  double max_delay_ms_ = 0.0;
  double total_delay_ms_ = 0.0;
  std::size_t max_depth_ = 1;
  std::size_t generator_emissions_ = 0;
  std::size_t repeated_emissions_ = 0;
};

template <ChildGenerator Gen>
[[nodiscard]] std::vector<VertexSet> enumerate_all(const Graph& g, DriverOptions options = {}) {
  FlipEnumerator<Gen> e(g, std::move(options));
  std::vector<VertexSet> out;
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace mdsenum
