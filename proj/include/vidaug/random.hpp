/**
 * Copyright 2026 The vidaug Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef VIDAUG_RANDOM_HPP_
#define VIDAUG_RANDOM_HPP_

#include <cstdint>
#include <vector>

namespace vidaug {

/// SplitMix64 output finalizer. A bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/**
 * Counter-based splittable random stream.
 *
 * A stream is identified by (seed, path). The key is a hash chain over the
 * path, and draw k is mix64(key + k * golden), so the output does not depend
 * on what other streams were used or in which order. Streams are cheap values;
 * pass them by value to keep callers' streams untouched.
 */
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0);

  /// Child stream; injective in label for a fixed parent.
  RngStream derive(std::uint64_t label) const;

  std::uint64_t next_u64();
  /// 53-bit uniform double in [0, 1).
  double next_unit();

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }
  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t seed_ = 0;
  std::vector<std::uint64_t> path_;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

inline RngStream derive_stream(const RngStream& parent, std::uint64_t label) {
  return parent.derive(label);
}

/// Value in [lo, hi); exactly lo when lo == hi. Throws on lo > hi.
double uniform(RngStream& stream, double lo, double hi);

/// Inclusive integer draw, floor(uniform(lo, hi + 1)).
int uniform_int(RngStream& stream, int lo, int hi);

/// Standard normal via Box-Muller.
double standard_normal(RngStream& stream);

/// Gamma(shape, 1) via Marsaglia-Tsang.
double gamma_sample(RngStream& stream, double shape);

/// Beta(alpha, alpha) in [0, 1]. Throws on alpha <= 0.
double beta_sample(RngStream& stream, double alpha);

/// Uniform permutation of {0..n-1} (Fisher-Yates).
std::vector<int> random_permutation(RngStream& stream, int n);

}  // namespace vidaug

#endif  // VIDAUG_RANDOM_HPP_
