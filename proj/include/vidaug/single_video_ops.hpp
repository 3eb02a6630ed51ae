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
#ifndef VIDAUG_SINGLE_VIDEO_OPS_HPP_
#define VIDAUG_SINGLE_VIDEO_OPS_HPP_

#include "vidaug/clip.hpp"
#include "vidaug/random.hpp"

#include <vector>

namespace vidaug {

// All three ops keep the clip's label (LabelMix::unmixed).

/// Frame t of the output is frame n - 1 - t of the input.
Clip video_reverse(const Clip& clip);

/// Fade ratio for 0-based frame t of n: t / n up to n / 2, (n - t) / n after.
/// Zero at t = 0, largest at t = floor(n / 2), never above 0.5.
double fade_lambda(int t, int n);

/// x~_t = (1 - lambda_t) x_t + lambda_t x_{n-1-t}, rounded to nearest.
Clip frame_fade_in(const Clip& clip);

/// Area fraction of the VideoCutMix box.
inline constexpr double kVideoCutMixArea = 0.2;

struct VideoCutMixPlan {
  PixelRect box;
  /// source[t] is the frame pasted into the box at frame t.
  std::vector<int> source;
};

/// Box of round(sqrt(0.2) W) x round(sqrt(0.2) H) at a uniform position, plus a
/// uniform frame permutation. Throws if a side would be under one pixel.
VideoCutMixPlan sample_video_cutmix(int frames, int height, int width, RngStream stream);

Clip render_video_cutmix(const Clip& clip, const VideoCutMixPlan& plan);

/// Pastes the static box from a shuffled copy of the clip into every frame.
Clip video_cutmix(const Clip& clip, RngStream stream);

}  // namespace vidaug

#endif  // VIDAUG_SINGLE_VIDEO_OPS_HPP_
