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
#include "vidaug/schedules.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vidaug {
namespace {

void check_unit(double m, const char* what) {
  if (!(m >= 0.0 && m <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must be in [0,1], got " + std::to_string(m));
  }
}

void check_frames(int n) {
  if (n < 2) throw std::invalid_argument("schedule needs n >= 2, got " + std::to_string(n));
}

}  // namespace

void MagAugmentConfig::validate() const {
  if (beta < 1) throw std::invalid_argument("magaugment beta must be >= 1");
  if (perturbations < 0) throw std::invalid_argument("magaugment P must be >= 0");
  check_unit(m_min, "magaugment m_min");
  check_unit(m_max, "magaugment m_max");
  if (m_min > m_max) throw std::invalid_argument("magaugment m_min > m_max");
}

MagnitudeCurve static_schedule(double m, int n) {
  check_unit(m, "magnitude");
  check_frames(n);
  return MagnitudeCurve::from_knots(n, {{0, m}, {n - 1, m}});
}

MagnitudeCurve linear_schedule(double m_start, double m_end, int n) {
  check_unit(m_start, "start magnitude");
  check_unit(m_end, "end magnitude");
  check_frames(n);
  return MagnitudeCurve::from_knots(n, {{0, m_start}, {n - 1, m_end}});
}

std::pair<double, double> t_plus_endpoints(double m, RngStream stream) {
  check_unit(m, "magnitude");
  const double delta = uniform(stream, 0.0, 0.5 * m);
  return {std::clamp(m - delta, 0.0, 1.0), std::clamp(m + delta, 0.0, 1.0)};
}

MagAugmentResult magaugment_schedule(const MagnitudeCurve& base, const MagAugmentConfig& cfg,
                                     RngStream stream) {
  cfg.validate();
  const int n = base.size();
  if (cfg.perturbations == 0) return {base, false};
  const int max_half = (n - 1) / 2;
  if (max_half < 1) return {base, true};

  MagnitudeCurve cur = base;
  for (int k = 0; k < cfg.perturbations; ++k) {
    RngStream draw = stream.derive(static_cast<std::uint64_t>(k));
    const double peak = uniform(draw, cfg.m_min, cfg.m_max);
    const int half = std::min(uniform_int(draw, 1, cfg.beta), max_half);
    const int center = uniform_int(draw, half, n - 1 - half);
    const int left = center - half;
    const int right = center + half;

    std::vector<Knot> knots;
    knots.reserve(cur.knots().size() + 3);
    for (const Knot& knot : cur.knots()) {
      if (knot.t < left) knots.push_back(knot);
    }
    knots.push_back({left, cur[left]});
    knots.push_back({center, peak});
    knots.push_back({right, cur[right]});
    for (const Knot& knot : cur.knots()) {
      if (knot.t > right) knots.push_back(knot);
    }
    cur = MagnitudeCurve::from_knots(n, std::move(knots));
  }
  return {std::move(cur), false};
}

}  // namespace vidaug
