// Copyright 2026 The ergof Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERGOF_PATTERN_HPP
#define ERGOF_PATTERN_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/graph.hpp"
#include "ergof/rng.hpp"

namespace ergof {

/// Small unlabeled motif H on vertices 0..n(H)-1.
///
/// Patterns used for counting must not have isolated vertices. The 3-vertex
/// shapes with one and zero edges exist only to name induced-count classes
/// and are built with `with_isolated_vertices`.
class SubgraphPattern {
 public:
  static constexpr int kMaxPatternVertices = 16;

  /// Vertex count is 1 + the largest endpoint; every vertex must be covered.
  SubgraphPattern(std::initializer_list<Edge> edges)
      : SubgraphPattern(std::vector<Edge>(edges), std::string{}) {}

  SubgraphPattern(const std::vector<Edge>& edges, std::string name)
      : SubgraphPattern(infer_vertex_count(edges), edges, std::move(name), false) {}

  static SubgraphPattern with_isolated_vertices(int n, std::vector<Edge> edges, std::string name) {
    return SubgraphPattern(n, std::move(edges), std::move(name), true);
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }

  bool has_edge(int i, int j) const noexcept { return (adj_[i] >> j) & 1U; }
  std::uint32_t neighbours(int i) const noexcept { return adj_[i]; }
  int degree(int i) const noexcept { return std::popcount(adj_[i]); }

  bool has_isolated_vertices() const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (adj_[i] == 0) return true;
    }
    return false;
  }

  bool is_connected() const noexcept {
    if (n_ == 0) return false;
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int i = 0; i < n_; ++i) {
        if ((frontier >> i) & 1U) next |= adj_[i];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == n_;
  }

  /// Sorted degree sequence; cheap isomorphism-class fingerprint for the
  /// built-in shapes.
  std::vector<int> degree_profile() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) d[static_cast<std::size_t>(i)] = degree(i);
    std::sort(d.begin(), d.end());
    return d;
  }

 private:
  SubgraphPattern(int n, std::vector<Edge> edges, std::string name, bool allow_isolated)
      : n_(n), edges_(std::move(edges)), name_(std::move(name)) {
    if (n_ < 1 || n_ > kMaxPatternVertices) {
      throw UnsupportedSize("pattern must have 1.." + std::to_string(kMaxPatternVertices) +
                            " vertices");
    }
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto& [i, j] : edges_) {
      if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InvalidInput("pattern vertex out of range");
      if (i == j) throw InvalidInput("pattern has a self-loop");
      if (i > j) std::swap(i, j);
      if (has_edge(i, j)) throw InvalidInput("pattern has a repeated edge");
      adj_[i] |= 1U << j;
      adj_[j] |= 1U << i;
    }
    std::sort(edges_.begin(), edges_.end());
    if (!allow_isolated && has_isolated_vertices()) {
      throw InvalidInput("pattern has an isolated vertex");
    }
  }

  static int infer_vertex_count(const std::vector<Edge>& edges) {
    int n = 0;
    for (const auto& [i, j] : edges) n = std::max({n, i + 1, j + 1});
    return n;
  }

  int n_;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<std::uint32_t> adj_;
};

namespace patterns {

/// P2: a single edge.
inline SubgraphPattern edge() { return SubgraphPattern({{0, 1}}, "P2"); }
/// P3: path on three vertices (two-star).
inline SubgraphPattern two_star() { return SubgraphPattern({{0, 1}, {1, 2}}, "P3"); }
/// C3: triangle.
inline SubgraphPattern triangle() { return SubgraphPattern({{0, 1}, {0, 2}, {1, 2}}, "C3"); }
/// H3: two vertex-disjoint edges.
inline SubgraphPattern two_disjoint_edges() {
  return SubgraphPattern({{0, 1}, {2, 3}}, "H3");
}
/// D3: three vertices, one edge (induced-count class only).
inline SubgraphPattern single_edge_on_three() {
  return SubgraphPattern::with_isolated_vertices(3, {{0, 1}}, "D3");
}
/// E3: three vertices, no edges (induced-count class only).
inline SubgraphPattern empty_on_three() {
  return SubgraphPattern::with_isolated_vertices(3, {}, "E3");
}

}  // namespace patterns

enum class BuiltinShape { kEdge, kTwoStar, kTriangle, kTwoDisjointEdges, kOther };

/// Identifies P2, P3, C3 and H3 up to isomorphism.
inline BuiltinShape classify(const SubgraphPattern& h) {
  const int n = h.num_vertices();
  const int m = h.num_edges();
  if (h.has_isolated_vertices()) return BuiltinShape::kOther;
  if (n == 2 && m == 1) return BuiltinShape::kEdge;
  if (n == 3 && m == 2) return BuiltinShape::kTwoStar;
  if (n == 3 && m == 3) return BuiltinShape::kTriangle;
  if (n == 4 && m == 2) return BuiltinShape::kTwoDisjointEdges;
  return BuiltinShape::kOther;
}

inline constexpr int kMaxAutomorphismVertices = 8;

/// Number of vertex permutations mapping the edge set of h onto itself,
/// by exhaustive search over all n(H)! permutations.
inline std::int64_t automorphism_count(const SubgraphPattern& h) {
  const int n = h.num_vertices();
  if (n > kMaxAutomorphismVertices) {
    throw UnsupportedSize("automorphism count limited to patterns with <= 8 vertices");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [i, j] : h.edges()) {
      if (!h.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// r(H) = max over nonempty vertex subsets J of m(J) / n(J); the sparsity
/// exponent in the n p^r(H) -> infinity condition.
inline double max_subgraph_density(const SubgraphPattern& h) {
  const int n = h.num_vertices();
  double best = 0.0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    int m = 0;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) m += std::popcount(h.neighbours(i) & mask);
    }
    best = std::max(best, 0.5 * m / std::popcount(mask));
  }
  return best;
}

/// Distinct copies of H in K_n: (n)_{n(H)} / |aut(H)|. Zero when n < n(H).
inline std::int64_t copies_count(const SubgraphPattern& h, std::int64_t n) {
  const int k = h.num_vertices();
  if (n < k) return 0;
  uint128 falling = 1;
  constexpr uint128 kLimit = static_cast<uint128>(1) << 100;
  for (int i = 0; i < k; ++i) {
    falling *= static_cast<uint128>(n - i);
    if (falling > kLimit) throw UnsupportedSize("copy count overflows");
  }
  const auto copies = falling / static_cast<uint128>(automorphism_count(h));
  if (copies > static_cast<uint128>(INT64_MAX)) {
    throw UnsupportedSize("copy count overflows 64 bits");
  }
  return static_cast<std::int64_t>(copies);
}

}  // namespace ergof

#endif  // ERGOF_PATTERN_HPP
