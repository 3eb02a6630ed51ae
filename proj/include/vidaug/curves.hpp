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
#ifndef VIDAUG_CURVES_HPP_
#define VIDAUG_CURVES_HPP_

#include "vidaug/clip.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <vector>

namespace vidaug {

/// a + f * (b - a), kept inside [min(a, b), max(a, b)].
template <typename Scalar>
Scalar lerp_clamped(Scalar a, Scalar b, Scalar f) {
  const Scalar v = a + f * (b - a);
  return std::clamp(v, std::min(a, b), std::max(a, b));
}

/// Fills out[t0..t1] with the straight line from (t0, v0) to (t1, v1).
/// The knot entries themselves are written exactly.
template <typename Derived>
void fill_segment(Eigen::DenseBase<Derived>& out, int t0, typename Derived::Scalar v0, int t1,
                  typename Derived::Scalar v1) {
  using Scalar = typename Derived::Scalar;
  out(t0) = v0;
  if (t1 == t0) return;
  const Scalar span = static_cast<Scalar>(t1 - t0);
  for (int t = t0 + 1; t < t1; ++t) {
    out(t) = lerp_clamped(v0, v1, static_cast<Scalar>(t - t0) / span);
  }
  out(t1) = v1;
}

struct Knot {
  int t = 0;
  double value = 0.0;
  friend bool operator==(const Knot&, const Knot&) = default;
};

/**
 * Per-frame normalized magnitude m_t in [0, 1].
 *
 * Always the piecewise-linear interpolation of its knots; the first knot sits
 * at t = 0 and the last at t = n - 1.
 */
class MagnitudeCurve {
 public:
  MagnitudeCurve() = default;

  /// Throws std::invalid_argument on unordered knots, bad endpoints or values outside [0, 1].
  static MagnitudeCurve from_knots(int n, std::vector<Knot> knots);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int t) const { return values_(t); }
  const Eigen::ArrayXd& values() const { return values_; }
  const std::vector<Knot>& knots() const { return knots_; }

  friend bool operator==(const MagnitudeCurve& a, const MagnitudeCurve& b) {
    return a.knots_ == b.knots_ && a.values_.size() == b.values_.size() &&
           (a.values_ == b.values_).all();
  }

 private:
  Eigen::ArrayXd values_;
  std::vector<Knot> knots_;
};

/**
 * Per-video box size plus per-frame box centers.
 *
 * Only frames in [t_begin, t_end] carry a box. Centers are linear between
 * centers(t_begin) and centers(t_end); outside the extent they repeat the
 * nearest endpoint.
 */
struct BoxTrajectory {
  int box_w = 0;
  int box_h = 0;
  int frame_w = 0;
  int frame_h = 0;
  int t_begin = 0;
  int t_end = 0;
  Eigen::Matrix<double, Eigen::Dynamic, 2> centers;

  int frames() const { return static_cast<int>(centers.rows()); }
  bool active(int t) const { return t >= t_begin && t <= t_end; }

  /// Integer pixel footprint at frame t; always inside the frame.
  PixelRect rect_at(int t) const;

  /// True when every center keeps the box inside the frame over the extent.
  bool fully_inside() const;
};

/// Builds a trajectory from explicit start/end centers over [t_begin, t_end].
BoxTrajectory make_box_trajectory(int box_w, int box_h, int frame_w, int frame_h, int n,
                                  int t_begin, int t_end, Eigen::Vector2d start,
                                  Eigen::Vector2d end);

}  // namespace vidaug

#endif  // VIDAUG_CURVES_HPP_
