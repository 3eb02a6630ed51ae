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
#ifndef VIDAUG_PIXEL_OPS_HPP_
#define VIDAUG_PIXEL_OPS_HPP_

#include "vidaug/clip.hpp"
#include "vidaug/curves.hpp"
#include "vidaug/random.hpp"

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace vidaug {

enum class OpKind {
  Identity,
  Rotate,
  Posterise,
  Equalise,
  Sharpness,
  TranslateX,
  TranslateY,
  Colour,
  AutoContrast,
  Solarise,
  Contrast,
  Brightness,
  ShearX,
  ShearY,
  ColourInvert,
  VideoReverse,
  FrameFadeIn,
  VideoCutMix,
};

inline constexpr int kNumOpKinds = 18;

/// The fourteen image operations of RandAugment, in canonical order.
inline constexpr std::array<OpKind, 14> kRandAugmentOps = {
    OpKind::Identity,   OpKind::Rotate,     OpKind::Posterise,    OpKind::Equalise,
    OpKind::Sharpness,  OpKind::TranslateX, OpKind::TranslateY,   OpKind::Colour,
    OpKind::AutoContrast, OpKind::Solarise, OpKind::Contrast,     OpKind::Brightness,
    OpKind::ShearX,     OpKind::ShearY};

std::string_view op_name(OpKind op);
std::optional<OpKind> op_from_name(std::string_view name);

/// False for Identity, AutoContrast, Equalise, ColourInvert and the three temporal ops.
bool has_magnitude(OpKind op);
/// True for VideoReverse, FrameFadeIn, VideoCutMix.
bool is_temporal(OpKind op);
/// True for ops whose direction is drawn per clip (geometric and enhancement ops).
bool is_signed(OpKind op);

/// Out-of-frame fill for geometric resampling.
inline constexpr Pixel kGeometricFill = 128;

/**
 * Maps a normalized magnitude to the op's native parameter.
 *
 *   Rotate            sign * m * 30 degrees
 *   ShearX / ShearY   sign * m * 0.3
 *   TranslateX / Y    sign * m * 0.3 * W (or H) pixels
 *   Colour, Contrast,
 *   Brightness,
 *   Sharpness         enhancement factor 1 + sign * m * 0.9
 *   Posterise         bits kept, 8 - round(4 m)
 *   Solarise          threshold, round(255 (1 - m))
 *
 * Throws for magnitude-free ops.
 */
double param_map(OpKind op, double m, int sign, int width, int height);

/// Applies an image op with a resolved parameter to one H x W x C frame.
void apply_frame_op(std::span<const Pixel> src, std::span<Pixel> dst, int height, int width,
                    int channels, OpKind op, double param);

/// Draws the per-clip direction (+1 or -1) of a signed op.
int draw_sign(RngStream& stream);

/// Frame t uses param_map(op, curve[t], sign, W, H). Frames with m_t = 0 are copied.
Clip apply_pixel_op(const Clip& clip, OpKind op, const MagnitudeCurve& curve, int sign);

/// Same as above with the sign drawn once from the stream.
Clip apply_pixel_op(const Clip& clip, OpKind op, const MagnitudeCurve& curve, RngStream stream);

}  // namespace vidaug

#endif  // VIDAUG_PIXEL_OPS_HPP_
