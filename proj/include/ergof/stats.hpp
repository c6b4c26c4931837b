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

#ifndef ERGOF_STATS_HPP
#define ERGOF_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "ergof/error.hpp"

namespace ergof {

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Inverse standard-normal CDF.
inline double normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidInput("normal quantile level must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), q);
}

/// Lower inverse of the empirical CDF: the ceil(q * B)-th smallest value,
/// index clamped to [1, B]. No interpolation.
inline double empirical_quantile(std::vector<double> sample, double q) {
  if (sample.empty()) throw InvalidInput("empirical quantile of an empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw InvalidInput("quantile level must lie in [0, 1]");
  const auto b = static_cast<std::ptrdiff_t>(sample.size());
  auto k = static_cast<std::ptrdiff_t>(std::ceil(q * static_cast<double>(b)));
  k = std::clamp<std::ptrdiff_t>(k, 1, b);
  std::nth_element(sample.begin(), sample.begin() + (k - 1), sample.end());
  return sample[static_cast<std::size_t>(k - 1)];
}

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Wilson score interval for r successes in n trials at normal quantile z.
inline Interval wilson_interval(std::int64_t r, std::int64_t n, double z = 1.959963984540054) {
  if (n <= 0) return {0.0, 1.0};
  const double nd = static_cast<double>(n);
  const double phat = static_cast<double>(r) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double centre = (phat + z2 / (2.0 * nd)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nd + z2 / (4.0 * nd * nd)) / denom;
  // The bounds are exactly 0 and 1 at r = 0 and r = n; rounding would leave
  // them a hair inside.
  return {r == 0 ? 0.0 : std::max(0.0, centre - half), r == n ? 1.0 : std::min(1.0, centre + half)};
}

/// Kolmogorov-Smirnov distance sup |F_n - Phi|.
inline double ks_distance_to_normal(std::vector<double> sample) {
  if (sample.empty()) throw InvalidInput("KS distance of an empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = normal_cdf(sample[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Mean and unbiased variance in one pass (Welford).
struct RunningMoments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) noexcept {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  double variance() const noexcept {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
  double standard_error() const noexcept {
    return count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
  }
};

inline RunningMoments moments_of(std::span<const double> xs) {
  RunningMoments m;
  for (double x : xs) m.add(x);
  return m;
}

}  // namespace ergof

#endif  // ERGOF_STATS_HPP
