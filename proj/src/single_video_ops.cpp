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
#include "vidaug/single_video_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vidaug {

Clip video_reverse(const Clip& clip) {
  require_augmentable(clip, "VideoReverse");
  Clip out(clip.frames(), clip.height(), clip.width(), clip.channels());
  const int n = clip.frames();
  for (int t = 0; t < n; ++t) std::ranges::copy(clip.frame(n - 1 - t), out.frame(t).begin());
  return out;
}

double fade_lambda(int t, int n) {
  if (n < 2 || t < 0 || t > n - 1) {
    throw std::invalid_argument("fade_lambda: t=" + std::to_string(t) + " out of range for n=" +
                                std::to_string(n));
  }
  // 2t <= n is t <= n/2 without the integer division.
  return 2 * t <= n ? static_cast<double>(t) / n : static_cast<double>(n - t) / n;
}

Clip frame_fade_in(const Clip& clip) {
  require_augmentable(clip, "FrameFadeIn");
  const int n = clip.frames();
  Clip out(n, clip.height(), clip.width(), clip.channels());
  for (int t = 0; t < n; ++t) {
    const double lambda = fade_lambda(t, n);
    const auto own = clip.frame(t);
    const auto partner = clip.frame(n - 1 - t);
    auto dst = out.frame(t);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      const double a = own[i];
      dst[i] = saturate_round(a + lambda * (partner[i] - a));
    }
  }
  return out;
}

VideoCutMixPlan sample_video_cutmix(int frames, int height, int width, RngStream stream) {
  const double side = std::sqrt(kVideoCutMixArea);
  const int w = static_cast<int>(std::lround(side * width));
  const int h = static_cast<int>(std::lround(side * height));
  if (w < 1 || h < 1) {
    throw std::invalid_argument("VideoCutMix: frame too small for the cut box");
  }
  VideoCutMixPlan plan;
  RngStream position = stream.derive(0);
  plan.box = {uniform_int(position, 0, width - w), uniform_int(position, 0, height - h), w, h};
  RngStream shuffle = stream.derive(1);
  plan.source = random_permutation(shuffle, frames);
  return plan;
}

Clip render_video_cutmix(const Clip& clip, const VideoCutMixPlan& plan) {
  const int n = clip.frames();
  if (static_cast<int>(plan.source.size()) != n) {
    throw std::invalid_argument("VideoCutMix: permutation length mismatch");
  }
  const PixelRect& box = plan.box;
  if (box.x0 < 0 || box.y0 < 0 || box.x0 + box.w > clip.width() ||
      box.y0 + box.h > clip.height()) {
    throw std::invalid_argument("VideoCutMix: box outside frame");
  }
  Clip out = clip;
  const std::size_t row_bytes = static_cast<std::size_t>(box.w) * clip.channels();
  for (int t = 0; t < n; ++t) {
    const int src_t = plan.source[t];
    for (int y = box.y0; y < box.y0 + box.h; ++y) {
      const Pixel* from = &clip.at(src_t, y, box.x0, 0);
      std::copy(from, from + row_bytes, &out.at(t, y, box.x0, 0));
    }
  }
  return out;
}

Clip video_cutmix(const Clip& clip, RngStream stream) {
  require_augmentable(clip, "VideoCutMix");
  return render_video_cutmix(clip,
                             sample_video_cutmix(clip.frames(), clip.height(), clip.width(), stream));
}

}  // namespace vidaug
