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

// Counter-based random numbers.
//
// Every draw is a pure function of (stream seed, counter), so the value used
// for edge k of a graph does not depend on the order in which edges are
// visited or on which worker thread samples the graph. Streams are split by
// hashing labels into the seed with `derive_seed`.

#ifndef ERGOF_RNG_HPP
#define ERGOF_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <string_view>

namespace ergof {

/// 128-bit unsigned integer (GCC/Clang extension).
__extension__ typedef unsigned __int128 uint128;

/// SplitMix64 finalizer (Stafford variant 13). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// 64-bit FNV-1a; used to turn scenario labels into seed material.
constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Folds `parts` into `seed`. Changing any part, or their order, yields an
/// unrelated stream seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> parts) noexcept {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  for (std::uint64_t part : parts) {
    h = mix64(h + kGoldenGamma + mix64(part));
  }
  return h;
}

/// A stream of independent 64-bit words indexed by counter. `bits(k)` is the
/// k-th output of a SplitMix64 generator started at `seed`.
class CounterStream {
 public:
  constexpr explicit CounterStream(std::uint64_t seed) noexcept : seed_(seed) {}

  constexpr std::uint64_t seed() const noexcept { return seed_; }

  constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix64(seed_ + (counter + 1) * kGoldenGamma);
  }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Bernoulli(p) draw; p <= 0 never fires, p >= 1 always fires.
  constexpr bool bernoulli(std::uint64_t counter, double p) const noexcept {
    return uniform(counter) < p;
  }

  /// Uniform integer in [0, bound) by 128-bit multiply; bias is below
  /// bound / 2^64.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<uint128>(bits(counter)) * bound) >> 64);
  }

  /// Standard normal via Box-Muller on counters 2k and 2k+1.
  double normal(std::uint64_t k) const noexcept {
    // 1 - u lies in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform(2 * k);
    const double u2 = uniform(2 * k + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t seed_;
};

/// Sequential adapter satisfying UniformRandomBitGenerator, for code that
/// wants a std-style engine.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : stream_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept { return stream_.bits(counter_++); }

  double uniform() noexcept { return stream_.uniform(counter_++); }

 private:
  CounterStream stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace ergof

#endif  // ERGOF_RNG_HPP
