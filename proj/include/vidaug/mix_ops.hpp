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
#ifndef VIDAUG_MIX_OPS_HPP_
#define VIDAUG_MIX_OPS_HPP_

#include "vidaug/clip.hpp"
#include "vidaug/curves.hpp"
#include "vidaug/random.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string_view>

namespace vidaug {

/**
 * Two-clip delete, cut-and-paste and blend operators.
 *
 * Static kinds keep one box position and one mixing ratio for the whole clip.
 * Float kinds draw a start and an end box center (and/or a start and an end
 * ratio) and interpolate linearly between them. Boxes are always fully inside
 * the frame, so the soft label is the exact replaced or blended fraction and
 * never needs to be recounted.
 */
enum class MixKind {
  CutOut,
  CubeCutOut,
  CutMix,
  CubeCutMix,
  MixUp,
  FadeMixUp,
  CutMixUp,
  CubeCutMixUp,
  FrameCutMixUp,
  FloatCutOut,
  FloatCubeCutOut,
  FloatCutMix,
  FloatCubeCutMix,
  FloatCutMixUp,
  FloatCubeCutMixUp,
  FloatFrameCutMixUp,
};

inline constexpr int kNumMixKinds = 16;

/// Spatial/temporal footprint of a kind.
enum class MixRegion { Box, Cube, FrameBand, Whole };
/// What goes into the footprint.
enum class MixFill { Constant, Paste, Blend };

std::string_view mix_name(MixKind kind);
std::optional<MixKind> mix_from_name(std::string_view name);

MixRegion region_of(MixKind kind);
MixFill fill_of(MixKind kind);
bool needs_partner(MixKind kind);
bool has_floating_box(MixKind kind);
bool has_floating_lambda(MixKind kind);
bool is_float(MixKind kind);
/// Float kinds map to their static originals (FadeMixUp to MixUp); static kinds map to themselves.
MixKind static_counterpart(MixKind kind);

inline constexpr Pixel kCutOutFill = 128;
inline constexpr double kDefaultAlpha = 1.0;

struct RegionScale {
  double region_i = 0.0;  // I ~ Beta(alpha, alpha); replaced fraction is 1 - I
  int box_w = 0;
  int box_h = 0;
  int t_len = 0;
};

/// dims 2: sides W sqrt(1 - I), H sqrt(1 - I), t_len = n.
/// dims 3: sides and t_len scaled by (1 - I)^(1/3).
/// Sides clamp to [1, W] / [1, H], t_len to [1, n].
RegionScale region_scale_from(double region_i, int width, int height, int dims, int n);
RegionScale sample_region_scale(RngStream stream, double alpha, int width, int height, int dims,
                                int n);

/// Centers at t_a and t_b drawn from [w/2, W - w/2] x [h/2, H - h/2]; the end
/// center repeats the start when floating is false.
BoxTrajectory sample_box_trajectory(RngStream stream, int box_w, int box_h, int width, int height,
                                    int n, int t_a, int t_b, bool floating);

/// Mixing ratio over frames [t_begin, t_begin + size).
struct LambdaSchedule {
  double lambda = 0.0;   // base draw
  double epsilon = 0.0;  // endpoint spread
  double mean_lambda = 0.0;
  int t_begin = 0;
  Eigen::ArrayXd values;

  int size() const { return static_cast<int>(values.size()); }
  double at(int t) const { return values(t - t_begin); }
};

/// Linear from lambda - epsilon to lambda + epsilon over `length` frames.
LambdaSchedule make_lambda_schedule(double lambda, double epsilon, int length, int t_begin = 0);

/// lambda ~ Beta(alpha, alpha); floating adds epsilon ~ U(0, min(lambda, 1 - lambda)).
LambdaSchedule sample_lambda_schedule(RngStream stream, double alpha, int n, bool floating);

/// Every random choice of one mix application. Rendering is deterministic in these.
struct MixParams {
  MixKind kind = MixKind::CutOut;
  int frames = 0;
  int height = 0;
  int width = 0;
  int t_begin = 0;
  int t_end = 0;
  RegionScale scale;
  std::optional<BoxTrajectory> box;
  std::optional<LambdaSchedule> lambda;
  Pixel fill = kCutOutFill;

  /// Pixel positions (x, y, t) inside the footprint.
  std::int64_t footprint_count() const;
};

MixParams sample_mix_params(MixKind kind, int frames, int height, int width, double alpha,
                            RngStream stream, Pixel fill = kCutOutFill);

/// Collapses Float endpoints: box end center := start center, epsilon := 0.
MixParams with_static_endpoints(const MixParams& params);

struct Partner {
  const Clip& clip;
  int label;
};

struct MixResult {
  Clip clip;
  LabelMix label;
  MixParams params;
};

/// Soft-label weight from exact integer footprint counts.
double mix_weight(const MixParams& params);

MixResult render_mix(const MixParams& params, const Clip& clip_a, int label_a,
                     std::optional<Partner> partner);

MixResult apply_mix(MixKind kind, const Clip& clip_a, int label_a, std::optional<Partner> partner,
                    double alpha, RngStream stream, Pixel fill = kCutOutFill);

}  // namespace vidaug

#endif  // VIDAUG_MIX_OPS_HPP_
