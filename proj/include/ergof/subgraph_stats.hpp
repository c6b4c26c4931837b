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

// Graph functionals built from subgraph counts.
//
// For a pattern H and a graph G on n vertices,
//
//   T_n(H) = sum over copies H~ of H in K_n of  prod_{e in H~} A_e
//   S_n(H) = sum over copies H~ of H in K_n of  prod_{e in H~} (A_e - p)
//
// where each unlabeled copy is counted once. Under G(n, p), E S_n(H) = 0 and
// Var S_n(H) = copies_count(H, n) * (p(1-p))^{m(H)}.
//
// The four shapes P2, P3, C3, H3 have O(n^2 / 64) paths through raw counts
// (edges, two-stars, triangles). `dense::` holds a second, independent route
// through the centered adjacency matrix; it exists for cross-checking.

#ifndef ERGOF_SUBGRAPH_STATS_HPP
#define ERGOF_SUBGRAPH_STATS_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/graph.hpp"
#include "ergof/pattern.hpp"

namespace ergof {

struct MomentPair {
  double mean = 0.0;
  double variance = 0.0;
};

/// binom(n, k) as a double; exact for the magnitudes used here.
constexpr double binom(std::int64_t n, int k) noexcept {
  if (k < 0 || n < k) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

/// Sufficient statistics shared by every built-in functional.
struct GraphSummary {
  int n = 0;
  std::int64_t edges = 0;
  std::int64_t two_stars = 0;   // sum_i binom(D_i, 2)
  std::int64_t triangles = 0;
  std::int64_t sum_sq_degree = 0;
};

inline std::int64_t triangle_count(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::int64_t closed = 0;  // each triangle seen once per edge
  for (int i = 0; i < n; ++i) {
    const auto ri = g.row(i);
    for (int j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      const auto rj = g.row(j);
      for (std::size_t w = 0; w < ri.size(); ++w) closed += std::popcount(ri[w] & rj[w]);
    }
  }
  return closed / 3;
}

inline GraphSummary summarize(const SimpleGraph& g) {
  GraphSummary s;
  s.n = g.num_vertices();
  s.edges = g.num_edges();
  for (int i = 0; i < s.n; ++i) {
    const std::int64_t d = g.degree(i);
    s.two_stars += d * (d - 1) / 2;
    s.sum_sq_degree += d * d;
  }
  s.triangles = triangle_count(g);
  return s;
}

namespace stats_detail {

inline void check_countable(const SubgraphPattern& h) {
  if (h.has_isolated_vertices()) {
    throw InvalidInput("pattern " + h.name() + " has isolated vertices; not a counting pattern");
  }
}

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("centering probability outside [0, 1]");
}

inline constexpr int kGenericMaxPatternVertices = 5;
inline constexpr int kGenericMaxGraphVertices = 64;

inline void check_generic_limits(const SubgraphPattern& h, int n) {
  if (h.num_vertices() > kGenericMaxPatternVertices || n > kGenericMaxGraphVertices) {
    throw UnsupportedSize("generic subgraph enumeration limited to n(H) <= 5 and n(G) <= 64");
  }
}

/// Visits every injective map V(H) -> [n] in lexicographic order, calling
/// `leaf(image)`; `extend(image, depth)` may prune a partial map.
template <typename Extend, typename Leaf>
void enumerate_embeddings(int pattern_n, int n, Extend&& extend, Leaf&& leaf) {
  std::vector<int> image(static_cast<std::size_t>(pattern_n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == pattern_n) {
      leaf(image);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      image[static_cast<std::size_t>(depth)] = v;
      if (!extend(image, depth)) continue;
      used[static_cast<std::size_t>(v)] = 1;
      self(self, depth + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
}

inline std::int64_t generic_raw_count(const SubgraphPattern& h, const SimpleGraph& g) {
  check_generic_limits(h, g.num_vertices());
  std::int64_t maps = 0;
  enumerate_embeddings(
      h.num_vertices(), g.num_vertices(),
      [&](const std::vector<int>& image, int depth) {
        for (int u = 0; u < depth; ++u) {
          if (h.has_edge(u, depth) && !g.has_edge(image[u], image[depth])) return false;
        }
        return true;
      },
      [&](const std::vector<int>&) { ++maps; });
  return maps / automorphism_count(h);
}

inline double generic_centered_count(const SubgraphPattern& h, const SimpleGraph& g, double p) {
  check_generic_limits(h, g.num_vertices());
  double sum = 0.0;
  enumerate_embeddings(
      h.num_vertices(), g.num_vertices(), [](const std::vector<int>&, int) { return true; },
      [&](const std::vector<int>& image) {
        double prod = 1.0;
        for (const auto& [a, b] : h.edges()) {
          prod *= (g.has_edge(image[a], image[b]) ? 1.0 : 0.0) - p;
        }
        sum += prod;
      });
  return sum / static_cast<double>(automorphism_count(h));
}

}  // namespace stats_detail

/// Number of (not necessarily induced) copies of h in g.
inline std::int64_t raw_count(const SubgraphPattern& h, const GraphSummary& s) {
  switch (classify(h)) {
    case BuiltinShape::kEdge:
      return s.edges;
    case BuiltinShape::kTwoStar:
      return s.two_stars;
    case BuiltinShape::kTriangle:
      return s.triangles;
    case BuiltinShape::kTwoDisjointEdges:
      // Unordered edge pairs minus those sharing a vertex.
      return s.edges * (s.edges - 1) / 2 - s.two_stars;
    case BuiltinShape::kOther:
      break;
  }
  throw InvalidInput("no closed form for pattern " + h.name());
}

inline std::int64_t raw_count(const SubgraphPattern& h, const SimpleGraph& g) {
  stats_detail::check_countable(h);
  if (h.num_vertices() > g.num_vertices()) return 0;
  if (classify(h) == BuiltinShape::kOther) return stats_detail::generic_raw_count(h, g);
  return raw_count(h, summarize(g));
}

/// S_n(h) at centering p, from the raw counts in `s`. Expanding the product
/// of (A_e - p) over a copy and summing gives a polynomial in p whose
/// coefficients are raw counts of the sub-patterns.
inline double centered_count(const SubgraphPattern& h, const GraphSummary& s, double p) {
  stats_detail::check_probability(p);
  const double n = s.n;
  const double m = static_cast<double>(s.edges);
  const double t2 = static_cast<double>(s.two_stars);
  switch (classify(h)) {
    case BuiltinShape::kEdge:
      return m - p * binom(s.n, 2);
    case BuiltinShape::kTwoStar:
      return t2 - p * 2.0 * m * (n - 2.0) + p * p * 3.0 * binom(s.n, 3);
    case BuiltinShape::kTriangle:
      return static_cast<double>(s.triangles) - p * t2 + p * p * (n - 2.0) * m -
             p * p * p * binom(s.n, 3);
    case BuiltinShape::kTwoDisjointEdges: {
      const double disjoint = static_cast<double>(s.edges * (s.edges - 1) / 2 - s.two_stars);
      const double partners = binom(s.n - 2, 2);  // edges of K_n disjoint from a given edge
      return disjoint - p * m * partners + p * p * binom(s.n, 2) * partners / 2.0;
    }
    case BuiltinShape::kOther:
      break;
  }
  throw InvalidInput("no closed form for pattern " + h.name());
}

inline double centered_count(const SubgraphPattern& h, const SimpleGraph& g, double p) {
  stats_detail::check_countable(h);
  stats_detail::check_probability(p);
  if (h.num_vertices() > g.num_vertices()) return 0.0;
  if (classify(h) == BuiltinShape::kOther) return stats_detail::generic_centered_count(h, g, p);
  return centered_count(h, summarize(g), p);
}

/// S_n(h) centered at the observed edge density p_hat.
inline double centered_count_estimated(const SubgraphPattern& h, const GraphSummary& s) {
  if (s.n < 2) throw InvalidInput("edge density needs at least 2 vertices");
  // sum_e (A_e - m / binom(n,2)) vanishes identically; avoid the rounding.
  if (classify(h) == BuiltinShape::kEdge) return 0.0;
  return centered_count(h, s, static_cast<double>(s.edges) / binom(s.n, 2));
}

inline double centered_count_estimated(const SubgraphPattern& h, const SimpleGraph& g) {
  stats_detail::check_countable(h);
  const double p_hat = mean_connectivity_hat(g);
  if (classify(h) == BuiltinShape::kEdge) return 0.0;
  return centered_count(h, g, p_hat);
}

/// How the variance constant of S_n(H) is computed.
enum class CopyConvention {
  /// (n)_{n(H)} / |aut(H)|: one term per unlabeled copy.
  kUnlabeledCopies,
  /// |aut(H)| * (n)_{n(H)}; kept for comparison only.
  kLiteralAutTimesFalling,
};

inline MomentPair sn_null_moments(const SubgraphPattern& h, std::int64_t n, double p,
                                  CopyConvention convention = CopyConvention::kUnlabeledCopies) {
  stats_detail::check_countable(h);
  if (n < h.num_vertices()) throw InvalidInput("n must be at least n(H)");
  if (!(p > 0.0 && p < 1.0)) throw InvalidInput("p must lie in (0, 1)");
  double constant = 0.0;
  if (convention == CopyConvention::kUnlabeledCopies) {
    constant = static_cast<double>(copies_count(h, n));
  } else {
    double falling = 1.0;
    for (int i = 0; i < h.num_vertices(); ++i) falling *= static_cast<double>(n - i);
    constant = static_cast<double>(automorphism_count(h)) * falling;
  }
  return {0.0, constant * std::pow(p * (1.0 - p), h.num_edges())};
}

/// V_n = n^-1 sum_i (D_i - mean D)^2.
inline double degree_variance(const GraphSummary& s) {
  const double n = s.n;
  const double total = 2.0 * static_cast<double>(s.edges);
  return (static_cast<double>(s.sum_sq_degree) - total * total / n) / n;
}

inline double degree_variance(const SimpleGraph& g) {
  const auto d = degrees(g);
  const std::int64_t n = static_cast<std::int64_t>(d.size());
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (int x : d.values) {
    sum += x;
    sum_sq += static_cast<std::int64_t>(x) * x;
  }
  // n * sum_sq - sum^2 is exact in 64 bits for n <= 4096.
  return static_cast<double>(n * sum_sq - sum * sum) / static_cast<double>(n * n);
}

/// Null mean and variance of V_n under G(n, p).
inline MomentPair vn_null_moments(std::int64_t n, double p) {
  if (n < 3) throw InvalidInput("degree-variance moments need n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");
  const double nd = static_cast<double>(n);
  const double pq = p * (1.0 - p);
  const double mean = (nd - 1.0) * (nd - 2.0) * pq / nd;
  const double variance =
      2.0 * (nd - 1.0) * (nd - 2.0) * (nd - 2.0) * pq * (1.0 + (nd - 6.0) * pq) / (nd * nd * nd);
  return {mean, variance};
}

/// Hoeffding parts of V_n - E_p(V_n): edge, two-star and disjoint-edge terms.
struct VnDecomposition {
  double edge_part = 0.0;
  double two_star_part = 0.0;
  double disjoint_part = 0.0;

  double sum() const noexcept { return edge_part + two_star_part + disjoint_part; }
};

inline VnDecomposition vn_decomposition(const GraphSummary& s, double p) {
  if (s.n < 4) throw UnsupportedSize("degree-variance decomposition needs n >= 4");
  stats_detail::check_probability(p);
  const double n = s.n;
  const double n2 = n * n;
  return {2.0 * (n - 2.0) * (1.0 - 2.0 * p) / n2 * centered_count(patterns::edge(), s, p),
          2.0 * (n - 4.0) / n2 * centered_count(patterns::two_star(), s, p),
          -8.0 / n2 * centered_count(patterns::two_disjoint_edges(), s, p)};
}

inline VnDecomposition vn_decomposition(const SimpleGraph& g, double p) {
  return vn_decomposition(summarize(g), p);
}

/// Null mean and variance of the raw triangle count T_n(C3).
inline MomentPair tn_c3_null_moments(std::int64_t n, double p) {
  if (n < 3) throw InvalidInput("triangle moments need n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");
  const double q = 1.0 - p;
  const double pq = p * q;
  const double c3 = binom(n, 3);
  const double nm2 = static_cast<double>(n - 2);
  return {c3 * p * p * p, c3 * pq * pq * pq + 3.0 * c3 * p * p * pq * pq +
                              binom(n, 2) * nm2 * nm2 * std::pow(p, 5) * q};
}

namespace dense {

/// Centered adjacency A - p(J - I) as a row-major n x n matrix.
inline std::vector<double> centered_adjacency(const SimpleGraph& g, double p) {
  const int n = g.num_vertices();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) a[static_cast<std::size_t>(i) * n + j] = (g.has_edge(i, j) ? 1.0 : 0.0) - p;
    }
  }
  return a;
}

/// S_n(h) for P2, P3, C3 and H3 from matrix identities on the centered
/// adjacency: half the entry sum, row-sum squares, trace(A^3) / 6, and the
/// square of the edge term minus its diagonal.
inline double centered_count(const SubgraphPattern& h, const SimpleGraph& g, double p) {
  stats_detail::check_probability(p);
  const int n = g.num_vertices();
  const auto a = centered_adjacency(g, p);
  const auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; };

  double total = 0.0;
  double total_sq = 0.0;
  double star = 0.0;
  for (int j = 0; j < n; ++j) {
    double row = 0.0;
    double row_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      row += at(i, j);
      row_sq += at(i, j) * at(i, j);
    }
    total += row;
    total_sq += row_sq;
    star += 0.5 * (row * row - row_sq);
  }
  const double sp2 = 0.5 * total;
  switch (classify(h)) {
    case BuiltinShape::kEdge:
      return sp2;
    case BuiltinShape::kTwoStar:
      return star;
    case BuiltinShape::kTriangle: {
      double trace = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          double a2 = 0.0;
          for (int k = 0; k < n; ++k) a2 += at(i, k) * at(k, j);
          trace += at(j, i) * a2;
        }
      }
      return trace / 6.0;
    }
    case BuiltinShape::kTwoDisjointEdges:
      return 0.5 * (sp2 * sp2 - 0.5 * total_sq) - star;
    case BuiltinShape::kOther:
      break;
  }
  throw InvalidInput("dense route covers P2, P3, C3 and H3 only");
}

}  // namespace dense

}  // namespace ergof

#endif  // ERGOF_SUBGRAPH_STATS_HPP
