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
#include "reference_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vidaug::reference {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kFill = 128;

Pixel to_pixel(double v) { return static_cast<Pixel>(std::clamp(std::floor(v + 0.5), 0.0, 255.0)); }

int gray_of(const Clip& clip, int t, int y, int x) {
  return (clip.at(t, y, x, 0) * 299 + clip.at(t, y, x, 1) * 587 + clip.at(t, y, x, 2) * 114 +
          500) /
         1000;
}

struct Coord {
  double x;
  double y;
};

template <typename Map>
std::vector<Pixel> warp(const Clip& clip, int t, Map inverse_map) {
  const int h = clip.height();
  const int w = clip.width();
  const int ch = clip.channels();
  std::vector<Pixel> out(static_cast<std::size_t>(h) * w * ch);
  auto tap = [&](long long x, long long y, int c) -> double {
    if (x < 0 || y < 0 || x >= w || y >= h) return kFill;
    return clip.at(t, static_cast<int>(y), static_cast<int>(x), c);
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Coord src = inverse_map(static_cast<double>(x), static_cast<double>(y));
      const double fx0 = std::floor(src.x);
      const double fy0 = std::floor(src.y);
      const double ax = src.x - fx0;
      const double ay = src.y - fy0;
      const long long ix = static_cast<long long>(std::clamp(fx0, -1e9, 1e9));
      const long long iy = static_cast<long long>(std::clamp(fy0, -1e9, 1e9));
      for (int c = 0; c < ch; ++c) {
        const double v = (1.0 - ax) * (1.0 - ay) * tap(ix, iy, c) + ax * (1.0 - ay) * tap(ix + 1, iy, c) +
                         (1.0 - ax) * ay * tap(ix, iy + 1, c) + ax * ay * tap(ix + 1, iy + 1, c);
        out[(static_cast<std::size_t>(y) * w + x) * ch + c] = to_pixel(v);
      }
    }
  }
  return out;
}

template <typename PerValue>
std::vector<Pixel> pointwise(const Clip& clip, int t, PerValue fn) {
  std::vector<Pixel> out;
  out.reserve(clip.frame_size());
  for (int y = 0; y < clip.height(); ++y)
    for (int x = 0; x < clip.width(); ++x)
      for (int c = 0; c < clip.channels(); ++c) out.push_back(fn(clip.at(t, y, x, c), y, x, c));
  return out;
}

}  // namespace

double param(OpKind op, double m, int sign, int width, int height) {
  const double s = sign;
  switch (op) {
    case OpKind::Rotate: return s * m * 30.0;
    case OpKind::ShearX:
    case OpKind::ShearY: return s * m * 0.3;
    case OpKind::TranslateX: return s * m * 0.3 * width;
    case OpKind::TranslateY: return s * m * 0.3 * height;
    case OpKind::Colour:
    case OpKind::Contrast:
    case OpKind::Brightness:
    case OpKind::Sharpness: return 1.0 + s * m * 0.9;
    case OpKind::Posterise: return 8.0 - std::round(4.0 * m);
    case OpKind::Solarise: return std::round(255.0 * (1.0 - m));
    default: return 0.0;
  }
}

std::vector<Pixel> frame_op(const Clip& clip, int t, OpKind op, double m, int sign) {
  const int h = clip.height();
  const int w = clip.width();
  const int ch = clip.channels();
  const auto copy = [&] {
    const auto f = clip.frame(t);
    return std::vector<Pixel>(f.begin(), f.end());
  };
  if (has_magnitude(op) && m == 0.0) return copy();
  const double p = param(op, m, sign, w, h);
  const double cx = (w - 1) / 2.0;
  const double cy = (h - 1) / 2.0;

  switch (op) {
    case OpKind::Identity:
      return copy();
    case OpKind::Rotate: {
      const double rad = p * kPi / 180.0;
      const double cs = std::cos(rad);
      const double sn = std::sin(rad);
      return warp(clip, t, [&](double x, double y) {
        const double dx = x - cx;
        const double dy = y - cy;
        return Coord{cx + cs * dx + sn * dy, cy - sn * dx + cs * dy};
      });
    }
    case OpKind::ShearX:
      return warp(clip, t, [&](double x, double y) { return Coord{x + p * (y - cy), y}; });
    case OpKind::ShearY:
      return warp(clip, t, [&](double x, double y) { return Coord{x, y + p * (x - cx)}; });
    case OpKind::TranslateX:
      return warp(clip, t, [&](double x, double y) { return Coord{x - p, y}; });
    case OpKind::TranslateY:
      return warp(clip, t, [&](double x, double y) { return Coord{x, y - p}; });
    case OpKind::Brightness:
      return pointwise(clip, t, [&](Pixel v, int, int, int) { return to_pixel(0.0 + p * (v - 0.0)); });
    case OpKind::Colour:
      if (ch == 1) return copy();
      return pointwise(clip, t, [&](Pixel v, int y, int x, int) {
        const double g = gray_of(clip, t, y, x);
        return to_pixel(g + p * (v - g));
      });
    case OpKind::Contrast: {
      double total = 0.0;
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) total += ch == 3 ? gray_of(clip, t, y, x) : clip.at(t, y, x, 0);
      const double mean = std::floor(total / (static_cast<double>(h) * w) + 0.5);
      return pointwise(clip, t, [&](Pixel v, int, int, int) { return to_pixel(mean + p * (v - mean)); });
    }
    case OpKind::Sharpness: {
      static constexpr int kKernel[3][3] = {{1, 1, 1}, {1, 5, 1}, {1, 1, 1}};
      return pointwise(clip, t, [&](Pixel v, int y, int x, int c) {
        double smooth = v;
        if (y > 0 && x > 0 && y < h - 1 && x < w - 1) {
          int acc = 0;
          for (int ky = 0; ky < 3; ++ky)
            for (int kx = 0; kx < 3; ++kx) acc += kKernel[ky][kx] * clip.at(t, y + ky - 1, x + kx - 1, c);
          smooth = std::floor(acc / 13.0 + 0.5);
        }
        return to_pixel(smooth + p * (v - smooth));
      });
    }
    case OpKind::Posterise: {
      const int drop = 1 << (8 - static_cast<int>(p));
      return pointwise(clip, t, [&](Pixel v, int, int, int) { return static_cast<Pixel>(v - v % drop); });
    }
    case OpKind::Solarise: {
      const int threshold = static_cast<int>(p);
      return pointwise(clip, t, [&](Pixel v, int, int, int) {
        return static_cast<Pixel>(v < threshold ? v : 255 - v);
      });
    }
    case OpKind::ColourInvert:
      return pointwise(clip, t, [](Pixel v, int, int, int) { return static_cast<Pixel>(255 - v); });
    case OpKind::AutoContrast: {
      std::vector<int> lo(ch, 255);
      std::vector<int> hi(ch, 0);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          for (int c = 0; c < ch; ++c) {
            lo[c] = std::min<int>(lo[c], clip.at(t, y, x, c));
            hi[c] = std::max<int>(hi[c], clip.at(t, y, x, c));
          }
      return pointwise(clip, t, [&](Pixel v, int, int, int c) {
        if (hi[c] <= lo[c]) return v;
        const double scale = 255.0 / (hi[c] - lo[c]);
        return to_pixel((v - lo[c]) * scale);
      });
    }
    case OpKind::Equalise: {
      // Cumulative-histogram LUT with the last occupied bin excluded from the step.
      std::vector<std::vector<long long>> hist(ch, std::vector<long long>(256, 0));
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          for (int c = 0; c < ch; ++c) hist[c][clip.at(t, y, x, c)]++;
      std::vector<std::vector<int>> lut(ch, std::vector<int>(256));
      for (int c = 0; c < ch; ++c) {
        std::vector<long long> occupied;
        for (long long count : hist[c])
          if (count) occupied.push_back(count);
        long long sum = 0;
        for (long long count : occupied) sum += count;
        const long long step = occupied.size() <= 1 ? 0 : (sum - occupied.back()) / 255;
        for (int v = 0; v < 256; ++v) lut[c][v] = v;
        if (step == 0) continue;
        long long running = step / 2;
        for (int v = 0; v < 256; ++v) {
          lut[c][v] = static_cast<int>(std::min(running / step, 255LL));
          running += hist[c][v];
        }
      }
      return pointwise(clip, t, [&](Pixel v, int, int, int c) { return static_cast<Pixel>(lut[c][v]); });
    }
    default:
      throw std::invalid_argument("reference::frame_op: temporal op");
  }
}

Clip clip_op(const Clip& clip, OpKind op, const std::vector<double>& magnitudes, int sign) {
  Clip out(clip.frames(), clip.height(), clip.width(), clip.channels());
  for (int t = 0; t < clip.frames(); ++t) {
    const auto frame = frame_op(clip, t, op, magnitudes[t], sign);
    std::copy(frame.begin(), frame.end(), out.frame(t).begin());
  }
  return out;
}

}  // namespace vidaug::reference
