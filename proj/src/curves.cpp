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
#include "vidaug/curves.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vidaug {

MagnitudeCurve MagnitudeCurve::from_knots(int n, std::vector<Knot> knots) {
  if (n < 1) throw std::invalid_argument("magnitude curve needs n >= 1");
  if (knots.empty() || knots.front().t != 0 || knots.back().t != n - 1) {
    throw std::invalid_argument("magnitude curve knots must start at 0 and end at n-1");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const double v = knots[i].value;
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("magnitude knot value out of [0,1]: " + std::to_string(v));
    }
    if (i > 0 && knots[i].t <= knots[i - 1].t) {
      throw std::invalid_argument("magnitude knots must be strictly increasing in t");
    }
  }
  MagnitudeCurve curve;
  curve.values_.resize(n);
  if (knots.size() == 1) {
    curve.values_(0) = knots.front().value;
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    fill_segment(curve.values_, knots[i - 1].t, knots[i - 1].value, knots[i].t, knots[i].value);
  }
  curve.knots_ = std::move(knots);
  return curve;
}

PixelRect BoxTrajectory::rect_at(int t) const {
  const double cx = centers(t, 0);
  const double cy = centers(t, 1);
  PixelRect r;
  r.w = box_w;
  r.h = box_h;
  r.x0 = std::clamp(static_cast<int>(std::floor(cx - box_w / 2.0 + 0.5)), 0, frame_w - box_w);
  r.y0 = std::clamp(static_cast<int>(std::floor(cy - box_h / 2.0 + 0.5)), 0, frame_h - box_h);
  return r;
}

bool BoxTrajectory::fully_inside() const {
  for (int t = t_begin; t <= t_end; ++t) {
    const double cx = centers(t, 0);
    const double cy = centers(t, 1);
    if (cx - box_w / 2.0 < 0.0 || cx + box_w / 2.0 > frame_w) return false;
    if (cy - box_h / 2.0 < 0.0 || cy + box_h / 2.0 > frame_h) return false;
  }
  return true;
}

BoxTrajectory make_box_trajectory(int box_w, int box_h, int frame_w, int frame_h, int n,
                                  int t_begin, int t_end, Eigen::Vector2d start,
                                  Eigen::Vector2d end) {
  if (box_w < 1 || box_h < 1 || box_w > frame_w || box_h > frame_h) {
    throw std::invalid_argument("box larger than frame");
  }
  if (t_begin < 0 || t_begin > t_end || t_end > n - 1) {
    throw std::invalid_argument("box temporal extent out of range");
  }
  BoxTrajectory traj;
  traj.box_w = box_w;
  traj.box_h = box_h;
  traj.frame_w = frame_w;
  traj.frame_h = frame_h;
  traj.t_begin = t_begin;
  traj.t_end = t_end;
  traj.centers.resize(n, 2);
  for (int axis = 0; axis < 2; ++axis) {
    auto column = traj.centers.col(axis);
    fill_segment(column, t_begin, start(axis), t_end, end(axis));
    for (int t = 0; t < t_begin; ++t) column(t) = start(axis);
    for (int t = t_end + 1; t < n; ++t) column(t) = end(axis);
  }
  return traj;
}

}  // namespace vidaug
