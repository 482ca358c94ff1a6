#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mdsenum {

// Vertices are numbered 1..n; the index order is the canonical order used by
// every greedy and lexicographic step.
using Vertex = std::uint32_t;

// Sorted, duplicate-free set of vertices. Comparison is lexicographic on the
// ascending member sequence, so {1,3} < {2} and {1} < {1,3}.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> members) : members_(members) {
    normalize();
  }

  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    normalize();
  }

  // Caller guarantees `members` is strictly ascending.
  static VertexSet from_sorted(std::vector<Vertex> members) {
    VertexSet s;
    s.members_ = std::move(members);
    return s;
  }

  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] const_iterator begin() const noexcept { return members_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return members_.end(); }
  [[nodiscard]] Vertex front() const { return members_.front(); }
  [[nodiscard]] Vertex back() const { return members_.back(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] std::span<const Vertex> view() const noexcept { return members_; }
  [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  [[nodiscard]] VertexSet with(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
    return out;
  }

  [[nodiscard]] VertexSet without(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it != out.members_.end() && *it == v) out.members_.erase(it);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                  b.members_.begin(), b.members_.end());
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

[[nodiscard]] inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

[[nodiscard]] inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

[[nodiscard]] inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

[[nodiscard]] inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// "1 3 7"
[[nodiscard]] inline std::string to_string(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << '{' << to_string(s) << '}';
}

}  // namespace mdsenum
