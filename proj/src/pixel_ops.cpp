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
#include "vidaug/pixel_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vidaug {
namespace {

constexpr std::array<std::string_view, kNumOpKinds> kOpNames = {
    "Identity",   "Rotate",     "Posterise",    "Equalise",     "Sharpness",    "TranslateX",
    "TranslateY", "Colour",     "AutoContrast", "Solarise",     "Contrast",     "Brightness",
    "ShearX",     "ShearY",     "ColourInvert", "VideoReverse", "FrameFadeIn",  "VideoCutMix"};

using Lut = std::array<Pixel, 256>;

struct FrameRef {
  std::span<const Pixel> src;
  std::span<Pixel> dst;
  int height;
  int width;
  int channels;

  std::size_t at(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
};

// Integer luma, ITU-R 601-2 weights rounded to nearest.
inline int luma(const Pixel* px) { return (px[0] * 299 + px[1] * 587 + px[2] * 114 + 500) / 1000; }

void apply_lut_per_channel(const FrameRef& f, const std::vector<Lut>& luts) {
  const std::size_t pixels = static_cast<std::size_t>(f.height) * f.width;
  for (std::size_t i = 0; i < pixels; ++i) {
    for (int c = 0; c < f.channels; ++c) {
      const std::size_t k = i * f.channels + c;
      f.dst[k] = luts[c][f.src[k]];
    }
  }
}

std::vector<std::array<std::int64_t, 256>> histograms(const FrameRef& f) {
  std::vector<std::array<std::int64_t, 256>> hist(f.channels);
  for (auto& h : hist) h.fill(0);
  const std::size_t pixels = static_cast<std::size_t>(f.height) * f.width;
  for (std::size_t i = 0; i < pixels; ++i) {
    for (int c = 0; c < f.channels; ++c) ++hist[c][f.src[i * f.channels + c]];
  }
  return hist;
}

template <typename SourceCoord>
void resample_bilinear(const FrameRef& f, SourceCoord source) {
  auto sample = [&](int x, int y, int c) -> double {
    if (x < 0 || y < 0 || x >= f.width || y >= f.height) return kGeometricFill;
    return f.src[f.at(y, x, c)];
  };
  for (int y = 0; y < f.height; ++y) {
    for (int x = 0; x < f.width; ++x) {
      const auto [xs, ys] = source(static_cast<double>(x), static_cast<double>(y));
      const double xf = std::floor(xs);
      const double yf = std::floor(ys);
      const double fx = xs - xf;
      const double fy = ys - yf;
      // Far outside: all four taps are fill.
      if (xf < -2.0 || yf < -2.0 || xf > f.width + 1.0 || yf > f.height + 1.0) {
        for (int c = 0; c < f.channels; ++c) f.dst[f.at(y, x, c)] = kGeometricFill;
        continue;
      }
      const int x0 = static_cast<int>(xf);
      const int y0 = static_cast<int>(yf);
      for (int c = 0; c < f.channels; ++c) {
        const double v = (1.0 - fx) * (1.0 - fy) * sample(x0, y0, c) +
                         fx * (1.0 - fy) * sample(x0 + 1, y0, c) +
                         (1.0 - fx) * fy * sample(x0, y0 + 1, c) + fx * fy * sample(x0 + 1, y0 + 1, c);
        f.dst[f.at(y, x, c)] = saturate_round(v);
      }
    }
  }
}

void rotate(const FrameRef& f, double degrees) {
  const double theta = degrees * std::numbers::pi / 180.0;
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  const double cx = (f.width - 1) / 2.0;
  const double cy = (f.height - 1) / 2.0;
  resample_bilinear(f, [&](double x, double y) {
    const double dx = x - cx;
    const double dy = y - cy;
    return std::pair{cx + cs * dx + sn * dy, cy - sn * dx + cs * dy};
  });
}

void shear_x(const FrameRef& f, double k) {
  const double cy = (f.height - 1) / 2.0;
  resample_bilinear(f, [&](double x, double y) { return std::pair{x + k * (y - cy), y}; });
}

void shear_y(const FrameRef& f, double k) {
  const double cx = (f.width - 1) / 2.0;
  resample_bilinear(f, [&](double x, double y) { return std::pair{x, y + k * (x - cx)}; });
}

void translate(const FrameRef& f, double tx, double ty) {
  resample_bilinear(f, [&](double x, double y) { return std::pair{x - tx, y - ty}; });
}

// out = degenerate + factor * (in - degenerate)
void blend_with_scalar(const FrameRef& f, double degenerate, double factor) {
  Lut lut;
  for (int v = 0; v < 256; ++v) lut[v] = saturate_round(degenerate + factor * (v - degenerate));
  std::vector<Lut> luts(f.channels, lut);
  apply_lut_per_channel(f, luts);
}

void colour(const FrameRef& f, double factor) {
  if (f.channels == 1) {
    std::copy(f.src.begin(), f.src.end(), f.dst.begin());
    return;
  }
  const std::size_t pixels = static_cast<std::size_t>(f.height) * f.width;
  for (std::size_t i = 0; i < pixels; ++i) {
    const Pixel* px = f.src.data() + i * 3;
    const double gray = luma(px);
    for (int c = 0; c < 3; ++c) f.dst[i * 3 + c] = saturate_round(gray + factor * (px[c] - gray));
  }
}

void contrast(const FrameRef& f, double factor) {
  const std::size_t pixels = static_cast<std::size_t>(f.height) * f.width;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < pixels; ++i) {
    total += f.channels == 3 ? luma(f.src.data() + i * 3) : f.src[i];
  }
  const double mean = std::floor(static_cast<double>(total) / static_cast<double>(pixels) + 0.5);
  blend_with_scalar(f, mean, factor);
}

void sharpness(const FrameRef& f, double factor) {
  for (int y = 0; y < f.height; ++y) {
    for (int x = 0; x < f.width; ++x) {
      const bool border = y == 0 || x == 0 || y == f.height - 1 || x == f.width - 1;
      for (int c = 0; c < f.channels; ++c) {
        const int p = f.src[f.at(y, x, c)];
        int blurred = p;
        if (!border) {
          int sum = 4 * p;  // centre weight 5, counted once more in the 3x3 loop
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) sum += f.src[f.at(y + dy, x + dx, c)];
          }
          blurred = (2 * sum + 13) / 26;
        }
        f.dst[f.at(y, x, c)] = saturate_round(blurred + factor * (p - blurred));
      }
    }
  }
}

void posterise(const FrameRef& f, int bits) {
  const Pixel mask = static_cast<Pixel>(0xFF << (8 - bits));
  std::transform(f.src.begin(), f.src.end(), f.dst.begin(),
                 [mask](Pixel p) { return static_cast<Pixel>(p & mask); });
}

void solarise(const FrameRef& f, int threshold) {
  std::transform(f.src.begin(), f.src.end(), f.dst.begin(), [threshold](Pixel p) {
    return p >= threshold ? static_cast<Pixel>(255 - p) : p;
  });
}

void equalise(const FrameRef& f) {
  const auto hist = histograms(f);
  std::vector<Lut> luts(f.channels);
  for (int c = 0; c < f.channels; ++c) {
    Lut& lut = luts[c];
    for (int v = 0; v < 256; ++v) lut[v] = static_cast<Pixel>(v);
    std::int64_t total = 0;
    std::int64_t last = 0;
    int nonzero = 0;
    for (int v = 0; v < 256; ++v) {
      if (hist[c][v] > 0) {
        total += hist[c][v];
        last = hist[c][v];
        ++nonzero;
      }
    }
    if (nonzero <= 1) continue;
    const std::int64_t step = (total - last) / 255;
    if (step == 0) continue;
    std::int64_t acc = step / 2;
    for (int v = 0; v < 256; ++v) {
      lut[v] = static_cast<Pixel>(std::min<std::int64_t>(acc / step, 255));
      acc += hist[c][v];
    }
  }
  apply_lut_per_channel(f, luts);
}

void auto_contrast(const FrameRef& f) {
  const auto hist = histograms(f);
  std::vector<Lut> luts(f.channels);
  for (int c = 0; c < f.channels; ++c) {
    int lo = 0;
    while (lo < 255 && hist[c][lo] == 0) ++lo;
    int hi = 255;
    while (hi > 0 && hist[c][hi] == 0) --hi;
    Lut& lut = luts[c];
    if (hi <= lo) {
      for (int v = 0; v < 256; ++v) lut[v] = static_cast<Pixel>(v);
      continue;
    }
    const double scale = 255.0 / (hi - lo);
    for (int v = 0; v < 256; ++v) lut[v] = saturate_round((v - lo) * scale);
  }
  apply_lut_per_channel(f, luts);
}

}  // namespace

std::string_view op_name(OpKind op) { return kOpNames[static_cast<int>(op)]; }

std::optional<OpKind> op_from_name(std::string_view name) {
  for (int i = 0; i < kNumOpKinds; ++i) {
    if (kOpNames[i] == name) return static_cast<OpKind>(i);
  }
  return std::nullopt;
}

bool has_magnitude(OpKind op) {
  switch (op) {
    case OpKind::Identity:
    case OpKind::AutoContrast:
    case OpKind::Equalise:
    case OpKind::ColourInvert:
    case OpKind::VideoReverse:
    case OpKind::FrameFadeIn:
    case OpKind::VideoCutMix:
      return false;
    default:
      return true;
  }
}

bool is_temporal(OpKind op) {
  return op == OpKind::VideoReverse || op == OpKind::FrameFadeIn || op == OpKind::VideoCutMix;
}

bool is_signed(OpKind op) {
  return has_magnitude(op) && op != OpKind::Posterise && op != OpKind::Solarise;
}

double param_map(OpKind op, double m, int sign, int width, int height) {
  if (!has_magnitude(op)) {
    throw std::invalid_argument("param_map: " + std::string(op_name(op)) + " has no magnitude");
  }
  const double s = sign < 0 ? -1.0 : 1.0;
  switch (op) {
    case OpKind::Rotate:
      return s * m * 30.0;
    case OpKind::ShearX:
    case OpKind::ShearY:
      return s * m * 0.3;
    case OpKind::TranslateX:
      return s * m * 0.3 * width;
    case OpKind::TranslateY:
      return s * m * 0.3 * height;
    case OpKind::Colour:
    case OpKind::Contrast:
    case OpKind::Brightness:
    case OpKind::Sharpness:
      return 1.0 + s * m * 0.9;
    case OpKind::Posterise:
      return 8.0 - std::round(4.0 * m);
    case OpKind::Solarise:
      return std::round(255.0 * (1.0 - m));
    default:
      break;
  }
  throw std::logic_error("param_map: unhandled op");
}

void apply_frame_op(std::span<const Pixel> src, std::span<Pixel> dst, int height, int width,
                    int channels, OpKind op, double param) {
  const FrameRef f{src, dst, height, width, channels};
  switch (op) {
    case OpKind::Identity:
      std::copy(src.begin(), src.end(), dst.begin());
      return;
    case OpKind::Rotate:
      return rotate(f, param);
    case OpKind::ShearX:
      return shear_x(f, param);
    case OpKind::ShearY:
      return shear_y(f, param);
    case OpKind::TranslateX:
      return translate(f, param, 0.0);
    case OpKind::TranslateY:
      return translate(f, 0.0, param);
    case OpKind::Colour:
      return colour(f, param);
    case OpKind::Contrast:
      return contrast(f, param);
    case OpKind::Brightness:
      return blend_with_scalar(f, 0.0, param);
    case OpKind::Sharpness:
      return sharpness(f, param);
    case OpKind::Posterise:
      return posterise(f, static_cast<int>(param));
    case OpKind::Solarise:
      return solarise(f, static_cast<int>(param));
    case OpKind::Equalise:
      return equalise(f);
    case OpKind::AutoContrast:
      return auto_contrast(f);
    case OpKind::ColourInvert:
      std::transform(src.begin(), src.end(), dst.begin(),
                     [](Pixel p) { return static_cast<Pixel>(255 - p); });
      return;
    default:
      break;
  }
  throw std::invalid_argument("apply_frame_op: " + std::string(op_name(op)) +
                              " is a temporal op");
}

int draw_sign(RngStream& stream) { return uniform(stream, 0.0, 1.0) < 0.5 ? -1 : 1; }

Clip apply_pixel_op(const Clip& clip, OpKind op, const MagnitudeCurve& curve, int sign) {
  require_augmentable(clip, op_name(op));
  if (is_temporal(op)) {
    throw std::invalid_argument("apply_pixel_op: " + std::string(op_name(op)) +
                                " is temporal; use the single-video ops");
  }
  if (curve.size() != clip.frames()) {
    throw std::invalid_argument("apply_pixel_op: curve length " + std::to_string(curve.size()) +
                                " != frame count " + std::to_string(clip.frames()));
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("apply_pixel_op: sign must be +1 or -1");

  Clip out(clip.frames(), clip.height(), clip.width(), clip.channels());
  for (int t = 0; t < clip.frames(); ++t) {
    if (op == OpKind::Identity || (has_magnitude(op) && curve[t] == 0.0)) {
      std::ranges::copy(clip.frame(t), out.frame(t).begin());
      continue;
    }
    const double param =
        has_magnitude(op) ? param_map(op, curve[t], sign, clip.width(), clip.height()) : 0.0;
    apply_frame_op(clip.frame(t), out.frame(t), clip.height(), clip.width(), clip.channels(), op,
                   param);
  }
  return out;
}

Clip apply_pixel_op(const Clip& clip, OpKind op, const MagnitudeCurve& curve, RngStream stream) {
  return apply_pixel_op(clip, op, curve, draw_sign(stream));
}

}  // namespace vidaug
