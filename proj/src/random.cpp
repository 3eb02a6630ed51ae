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
#include "vidaug/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace vidaug {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kSeedSalt = 0x6A09E667F3BCC909ULL;
constexpr std::uint64_t kLabelSalt = 0xD1B54A32D192ED03ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), key_(mix64(seed ^ kSeedSalt)) {}

RngStream RngStream::derive(std::uint64_t label) const {
  RngStream child = *this;
  child.path_.push_back(label);
  child.key_ = mix64(key_ ^ mix64(label ^ kLabelSalt)) + kGolden;
  child.counter_ = 0;
  return child;
}

std::uint64_t RngStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double uniform(RngStream& stream, double lo, double hi) {
  if (lo > hi) throw std::invalid_argument("uniform: lo > hi");
  if (lo == hi) return lo;
  const double v = lo + stream.next_unit() * (hi - lo);
  // Guard the open upper bound against rounding up.
  return v < hi ? v : std::nextafter(hi, lo);
}

int uniform_int(RngStream& stream, int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const double v = std::floor(uniform(stream, static_cast<double>(lo), static_cast<double>(hi) + 1.0));
  return std::clamp(static_cast<int>(v), lo, hi);
}

double standard_normal(RngStream& stream) {
  const double u1 = 1.0 - stream.next_unit();  // (0, 1]
  const double u2 = stream.next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double gamma_sample(RngStream& stream, double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma_sample: shape must be > 0");
  if (shape < 1.0) {
    const double u = 1.0 - stream.next_unit();
    return gamma_sample(stream, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = standard_normal(stream);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - stream.next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double beta_sample(RngStream& stream, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("beta_sample: alpha must be > 0");
  const double x = gamma_sample(stream, alpha);
  const double y = gamma_sample(stream, alpha);
  const double sum = x + y;
  if (!(sum > 0.0)) return 0.5;
  return std::clamp(x / sum, 0.0, 1.0);
}

std::vector<int> random_permutation(RngStream& stream, int n) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = uniform_int(stream, 0, i);
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace vidaug
