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
#ifndef VIDAUG_SCHEDULES_HPP_
#define VIDAUG_SCHEDULES_HPP_

#include "vidaug/curves.hpp"
#include "vidaug/random.hpp"

#include <utility>

namespace vidaug {

/// Magnitude swing sampling. Defaults are the best grid point (beta 8, two swings).
struct MagAugmentConfig {
  int beta = 8;          // max swing half-width in frames
  int perturbations = 2; // P
  double m_min = 0.0;
  double m_max = 1.0;

  void validate() const;
  friend bool operator==(const MagAugmentConfig&, const MagAugmentConfig&) = default;
};

MagnitudeCurve static_schedule(double m, int n);

/// m_t = m_start + t / (n - 1) * (m_end - m_start).
MagnitudeCurve linear_schedule(double m_start, double m_end, int n);

/// delta ~ U(0, m / 2); returns (m - delta, m + delta) clamped to [0, 1].
std::pair<double, double> t_plus_endpoints(double m, RngStream stream);

struct MagAugmentResult {
  MagnitudeCurve curve;
  /// Set when n < 3: no swing fits strictly inside the clip and base is returned.
  bool too_short = false;
};

/**
 * Adds cfg.perturbations short swings to a base curve.
 *
 * Each swing draws a peak M_p ~ U(m_min, m_max), a half-width
 * j ~ U{1..beta} clamped to floor((n - 1) / 2), and a 0-based center
 * p ~ U{j..n-1-j}. The window [p - j, p + j] is replaced by the two segments
 * through (p - j, cur[p - j]), (p, M_p), (p + j, cur[p + j]). Swings compose
 * in draw order, so later swings read the already perturbed curve. The clip
 * endpoints are never displaced.
 */
MagAugmentResult magaugment_schedule(const MagnitudeCurve& base, const MagAugmentConfig& cfg,
                                     RngStream stream);

}  // namespace vidaug

#endif  // VIDAUG_SCHEDULES_HPP_
