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

#ifndef ERGOF_GRAPH_HPP
#define ERGOF_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ergof/error.hpp"

namespace ergof {

using Edge = std::pair<int, int>;

inline constexpr int kMaxVertices = 4096;

/// Number of unordered vertex pairs, binom(n, 2).
constexpr std::int64_t pair_count(std::int64_t n) noexcept { return n * (n - 1) / 2; }

/// Position of the pair {i, j}, i < j, in row-major upper-triangle order.
constexpr std::int64_t pair_index(std::int64_t n, std::int64_t i, std::int64_t j) noexcept {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Undirected, unweighted, loop-free graph on vertices 0..n-1.
///
/// Adjacency is kept as one dense bitset row per vertex (both triangles are
/// stored so neighbourhood intersections are a word-wise AND). Instances are
/// immutable; use GraphBuilder or the factories to make one.
class SimpleGraph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  /// Edgeless graph on n vertices.
  explicit SimpleGraph(int n) : n_(n), words_((n + kWordBits - 1) / kWordBits) {
    if (n < 1 || n > kMaxVertices) {
      throw InvalidInput("graph size must be in [1, " + std::to_string(kMaxVertices) +
                         "], got " + std::to_string(n));
    }
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  static SimpleGraph from_edges(int n, std::span<const Edge> edges);
  static SimpleGraph complete(int n);

  int num_vertices() const noexcept { return n_; }
  std::int64_t num_edges() const noexcept { return m_; }
  int words_per_row() const noexcept { return words_; }

  bool has_edge(int i, int j) const noexcept {
    return (row(i)[j / kWordBits] >> (j % kWordBits)) & 1U;
  }

  std::span<const Word> row(int i) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }

  int degree(int i) const noexcept {
    int d = 0;
    for (Word w : row(i)) d += std::popcount(w);
    return d;
  }

  /// Edge list with i < j, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (has_edge(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) noexcept {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  Word* mutable_row(int i) noexcept {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }

  int n_;
  int words_;
  std::int64_t m_ = 0;
  std::vector<Word> bits_;
};

/// Mutable staging area for a SimpleGraph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}

  int num_vertices() const noexcept { return g_.n_; }

  /// Adds {i, j}. Returns false if the edge was already present.
  bool add_edge(int i, int j) {
    check_pair(i, j);
    if (g_.has_edge(i, j)) return false;
    set_unchecked(i, j);
    return true;
  }

  bool has_edge(int i, int j) const noexcept { return g_.has_edge(i, j); }

  /// Fast path for samplers: caller guarantees i != j, both in range, and
  /// that the edge is not yet present.
  void set_unchecked(int i, int j) noexcept {
    using W = SimpleGraph::Word;
    constexpr int kBits = SimpleGraph::kWordBits;
    g_.mutable_row(i)[j / kBits] |= W{1} << (j % kBits);
    g_.mutable_row(j)[i / kBits] |= W{1} << (i % kBits);
    ++g_.m_;
  }

  SimpleGraph build() && { return std::move(g_); }

 private:
  void check_pair(int i, int j) const {
    const int n = g_.n_;
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw InvalidInput("vertex index out of range: {" + std::to_string(i) + ", " +
                         std::to_string(j) + "} with n = " + std::to_string(n));
    }
    if (i == j) throw InvalidInput("self-loop at vertex " + std::to_string(i));
  }

  SimpleGraph g_;
};

inline SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [i, j] : edges) b.add_edge(i, j);
  return std::move(b).build();
}

inline SimpleGraph SimpleGraph::complete(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) b.set_unchecked(i, j);
  }
  return std::move(b).build();
}

/// Degree of every vertex, in vertex order.
struct DegreeSequence {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int operator[](std::size_t i) const noexcept { return values[i]; }

  std::int64_t sum() const noexcept {
    return std::accumulate(values.begin(), values.end(), std::int64_t{0});
  }
  double mean() const noexcept {
    return values.empty() ? 0.0 : static_cast<double>(sum()) / static_cast<double>(values.size());
  }
};

inline DegreeSequence degrees(const SimpleGraph& g) {
  DegreeSequence d;
  d.values.resize(static_cast<std::size_t>(g.num_vertices()));
  for (int i = 0; i < g.num_vertices(); ++i) d.values[static_cast<std::size_t>(i)] = g.degree(i);
  return d;
}

inline std::int64_t edge_count(const SimpleGraph& g) noexcept { return g.num_edges(); }

/// Empirical edge density m / binom(n, 2).
inline double mean_connectivity_hat(const SimpleGraph& g) {
  if (g.num_vertices() < 2) {
    throw InvalidInput("edge density needs at least 2 vertices");
  }
  return static_cast<double>(g.num_edges()) / static_cast<double>(pair_count(g.num_vertices()));
}

/// Graph with vertex v renamed to perm[v].
inline SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  const int n = g.num_vertices();
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidInput("permutation length does not match vertex count");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("relabel: argument is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  GraphBuilder b(n);
  for (const auto& [i, j] : g.edges()) {
    b.set_unchecked(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return std::move(b).build();
}

}  // namespace ergof

#endif  // ERGOF_GRAPH_HPP
