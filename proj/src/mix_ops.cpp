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
#include "vidaug/mix_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vidaug {
namespace {

constexpr std::array<std::string_view, kNumMixKinds> kMixNames = {
    "CutOut",          "CubeCutOut",      "CutMix",        "CubeCutMix",
    "MixUp",           "FadeMixUp",       "CutMixUp",      "CubeCutMixUp",
    "FrameCutMixUp",   "FloatCutOut",     "FloatCubeCutOut", "FloatCutMix",
    "FloatCubeCutMix", "FloatCutMixUp",   "FloatCubeCutMixUp", "FloatFrameCutMixUp"};

int round_to_int(double v) { return static_cast<int>(std::lround(v)); }

}  // namespace

std::string_view mix_name(MixKind kind) { return kMixNames[static_cast<int>(kind)]; }

std::optional<MixKind> mix_from_name(std::string_view name) {
  for (int i = 0; i < kNumMixKinds; ++i) {
    if (kMixNames[i] == name) return static_cast<MixKind>(i);
  }
  return std::nullopt;
}

MixKind static_counterpart(MixKind kind) {
  switch (kind) {
    case MixKind::FadeMixUp: return MixKind::MixUp;
    case MixKind::FloatCutOut: return MixKind::CutOut;
    case MixKind::FloatCubeCutOut: return MixKind::CubeCutOut;
    case MixKind::FloatCutMix: return MixKind::CutMix;
    case MixKind::FloatCubeCutMix: return MixKind::CubeCutMix;
    case MixKind::FloatCutMixUp: return MixKind::CutMixUp;
    case MixKind::FloatCubeCutMixUp: return MixKind::CubeCutMixUp;
    case MixKind::FloatFrameCutMixUp: return MixKind::FrameCutMixUp;
    default: return kind;
  }
}

bool is_float(MixKind kind) { return static_counterpart(kind) != kind; }

MixRegion region_of(MixKind kind) {
  switch (static_counterpart(kind)) {
    case MixKind::CutOut:
    case MixKind::CutMix:
    case MixKind::CutMixUp:
      return MixRegion::Box;
    case MixKind::CubeCutOut:
    case MixKind::CubeCutMix:
    case MixKind::CubeCutMixUp:
      return MixRegion::Cube;
    case MixKind::FrameCutMixUp:
      return MixRegion::FrameBand;
    default:
      return MixRegion::Whole;
  }
}

MixFill fill_of(MixKind kind) {
  switch (static_counterpart(kind)) {
    case MixKind::CutOut:
    case MixKind::CubeCutOut:
      return MixFill::Constant;
    case MixKind::CutMix:
    case MixKind::CubeCutMix:
      return MixFill::Paste;
    default:
      return MixFill::Blend;
  }
}

bool needs_partner(MixKind kind) { return fill_of(kind) != MixFill::Constant; }

bool has_floating_box(MixKind kind) {
  const MixRegion region = region_of(kind);
  return is_float(kind) && (region == MixRegion::Box || region == MixRegion::Cube);
}

bool has_floating_lambda(MixKind kind) { return is_float(kind) && fill_of(kind) == MixFill::Blend; }

RegionScale region_scale_from(double region_i, int width, int height, int dims, int n) {
  if (!(region_i >= 0.0 && region_i <= 1.0)) {
    throw std::invalid_argument("region scale I must be in [0,1]");
  }
  RegionScale scale;
  scale.region_i = region_i;
  const double keep = 1.0 - region_i;
  switch (dims) {
    case 1:  // temporal band of whole frames
      scale.box_w = width;
      scale.box_h = height;
      scale.t_len = std::clamp(round_to_int(n * keep), 1, n);
      return scale;
    case 2: {
      const double side = std::sqrt(keep);
      scale.box_w = std::clamp(round_to_int(width * side), 1, width);
      scale.box_h = std::clamp(round_to_int(height * side), 1, height);
      scale.t_len = n;
      return scale;
    }
    case 3: {
      const double side = std::cbrt(keep);
      scale.box_w = std::clamp(round_to_int(width * side), 1, width);
      scale.box_h = std::clamp(round_to_int(height * side), 1, height);
      scale.t_len = std::clamp(round_to_int(n * side), 1, n);
      return scale;
    }
    default:
      throw std::invalid_argument("region scale dims must be 1, 2 or 3");
  }
}

RegionScale sample_region_scale(RngStream stream, double alpha, int width, int height, int dims,
                                int n) {
  return region_scale_from(beta_sample(stream, alpha), width, height, dims, n);
}

BoxTrajectory sample_box_trajectory(RngStream stream, int box_w, int box_h, int width, int height,
                                    int n, int t_a, int t_b, bool floating) {
  if (box_w > width || box_h > height) throw std::invalid_argument("box larger than frame");
  auto draw_center = [&](RngStream s) {
    const double cx = uniform(s, box_w / 2.0, width - box_w / 2.0);
    const double cy = uniform(s, box_h / 2.0, height - box_h / 2.0);
    return Eigen::Vector2d(cx, cy);
  };
  const Eigen::Vector2d start = draw_center(stream.derive(0));
  const Eigen::Vector2d end = floating ? draw_center(stream.derive(1)) : start;
  return make_box_trajectory(box_w, box_h, width, height, n, t_a, t_b, start, end);
}

LambdaSchedule make_lambda_schedule(double lambda, double epsilon, int length, int t_begin) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in [0,1]");
  if (!(epsilon >= 0.0 && epsilon <= std::min(lambda, 1.0 - lambda))) {
    throw std::invalid_argument("lambda spread must be in [0, min(lambda, 1 - lambda)]");
  }
  if (length < 1) throw std::invalid_argument("lambda schedule needs length >= 1");
  LambdaSchedule schedule;
  schedule.lambda = lambda;
  schedule.epsilon = epsilon;
  schedule.mean_lambda = lambda;
  schedule.t_begin = t_begin;
  schedule.values.resize(length);
  if (length == 1) {
    schedule.values(0) = lambda;
  } else {
    fill_segment(schedule.values, 0, lambda - epsilon, length - 1, lambda + epsilon);
  }
  return schedule;
}

LambdaSchedule sample_lambda_schedule(RngStream stream, double alpha, int n, bool floating) {
  RngStream base = stream.derive(0);
  const double lambda = beta_sample(base, alpha);
  double epsilon = 0.0;
  if (floating) {
    RngStream spread = stream.derive(1);
    epsilon = uniform(spread, 0.0, std::min(lambda, 1.0 - lambda));
  }
  return make_lambda_schedule(lambda, epsilon, n);
}

std::int64_t MixParams::footprint_count() const {
  const std::int64_t frames_in = t_end - t_begin + 1;
  const std::int64_t area =
      box ? static_cast<std::int64_t>(box->box_w) * box->box_h
          : static_cast<std::int64_t>(width) * height;
  return area * frames_in;
}

MixParams sample_mix_params(MixKind kind, int frames, int height, int width, double alpha,
                            RngStream stream, Pixel fill) {
  if (!(alpha > 0.0)) throw std::invalid_argument("mix alpha must be > 0");
  if (frames < 1 || height < 1 || width < 1) throw std::invalid_argument("bad clip shape");
  MixParams p;
  p.kind = kind;
  p.frames = frames;
  p.height = height;
  p.width = width;
  p.fill = fill;
  p.t_begin = 0;
  p.t_end = frames - 1;

  const MixRegion region = region_of(kind);
  if (region == MixRegion::Whole) {
    p.scale = {0.0, width, height, frames};
  } else {
    const int dims = region == MixRegion::Box ? 2 : region == MixRegion::Cube ? 3 : 1;
    p.scale = sample_region_scale(stream.derive(1), alpha, width, height, dims, frames);
    if (region != MixRegion::Box) {
      RngStream extent = stream.derive(2);
      p.t_begin = uniform_int(extent, 0, frames - p.scale.t_len);
      p.t_end = p.t_begin + p.scale.t_len - 1;
    }
    if (region == MixRegion::Box || region == MixRegion::Cube) {
      p.box = sample_box_trajectory(stream.derive(3), p.scale.box_w, p.scale.box_h, width, height,
                                    frames, p.t_begin, p.t_end, has_floating_box(kind));
    }
  }
  if (fill_of(kind) == MixFill::Blend) {
    p.lambda = sample_lambda_schedule(stream.derive(4), alpha, p.t_end - p.t_begin + 1,
                                      has_floating_lambda(kind));
    p.lambda->t_begin = p.t_begin;
  }
  return p;
}

MixParams with_static_endpoints(const MixParams& params) {
  MixParams p = params;
  if (p.box) {
    const Eigen::Vector2d start = p.box->centers.row(p.t_begin).transpose();
    p.box = make_box_trajectory(p.box->box_w, p.box->box_h, p.width, p.height, p.frames, p.t_begin,
                                p.t_end, start, start);
  }
  if (p.lambda) {
    p.lambda = make_lambda_schedule(p.lambda->lambda, 0.0, p.lambda->size(), p.lambda->t_begin);
  }
  return p;
}

double mix_weight(const MixParams& params) {
  const MixFill fill = fill_of(params.kind);
  if (fill == MixFill::Constant) return 0.0;
  const std::int64_t total =
      static_cast<std::int64_t>(params.frames) * params.height * params.width;
  const double fraction =
      static_cast<double>(params.footprint_count()) / static_cast<double>(total);
  if (fill == MixFill::Paste) return fraction;
  return fraction * params.lambda->mean_lambda;
}

MixResult render_mix(const MixParams& params, const Clip& clip_a, int label_a,
                     std::optional<Partner> partner) {
  if (clip_a.frames() != params.frames || clip_a.height() != params.height ||
      clip_a.width() != params.width) {
    throw std::invalid_argument("mix: clip shape does not match sampled parameters");
  }
  const MixFill fill = fill_of(params.kind);
  if (fill != MixFill::Constant) {
    if (!partner) {
      throw std::invalid_argument(std::string(mix_name(params.kind)) + " requires a partner clip");
    }
    if (!partner->clip.same_shape(clip_a)) {
      throw std::invalid_argument("mix: partner clip shape mismatch");
    }
  }

  MixResult result{clip_a, {}, params};
  Clip& out = result.clip;
  const int channels = clip_a.channels();
  for (int t = params.t_begin; t <= params.t_end; ++t) {
    const PixelRect rect =
        params.box ? params.box->rect_at(t) : PixelRect{0, 0, params.width, params.height};
    const double lambda = params.lambda ? params.lambda->at(t) : 0.0;
    for (int y = rect.y0; y < rect.y0 + rect.h; ++y) {
      Pixel* dst = &out.at(t, y, rect.x0, 0);
      const std::size_t count = static_cast<std::size_t>(rect.w) * channels;
      switch (fill) {
        case MixFill::Constant:
          std::fill(dst, dst + count, params.fill);
          break;
        case MixFill::Paste: {
          const Pixel* src = &partner->clip.at(t, y, rect.x0, 0);
          std::copy(src, src + count, dst);
          break;
        }
        case MixFill::Blend: {
          const Pixel* src = &partner->clip.at(t, y, rect.x0, 0);
          for (std::size_t i = 0; i < count; ++i) {
            const double a = dst[i];
            dst[i] = saturate_round(a + lambda * (src[i] - a));
          }
          break;
        }
      }
    }
  }

  const int label_b = fill == MixFill::Constant ? label_a : partner->label;
  result.label = {label_a, label_b, mix_weight(params)};
  return result;
}

MixResult apply_mix(MixKind kind, const Clip& clip_a, int label_a, std::optional<Partner> partner,
                    double alpha, RngStream stream, Pixel fill) {
  require_augmentable(clip_a, mix_name(kind));
  if (needs_partner(kind) && !partner) {
    throw std::invalid_argument(std::string(mix_name(kind)) + " requires a partner clip");
  }
  const MixParams params =
      sample_mix_params(kind, clip_a.frames(), clip_a.height(), clip_a.width(), alpha, stream, fill);
  return render_mix(params, clip_a, label_a, partner);
}

}  // namespace vidaug
