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
#include "vidaug/clip.hpp"

#include <stdexcept>
#include <string>

namespace vidaug {
namespace {

void check_shape(int frames, int height, int width, int channels) {
  if (frames < 1 || height < 1 || width < 1) {
    throw std::invalid_argument("clip dimensions must be positive");
  }
  if (channels != 1 && channels != 3) {
    throw std::invalid_argument("clip channels must be 1 or 3, got " + std::to_string(channels));
  }
}

}  // namespace

Clip::Clip(int frames, int height, int width, int channels, Pixel fill)
    : frames_(frames), height_(height), width_(width), channels_(channels) {
  check_shape(frames, height, width, channels);
  data_.assign(frame_size() * frames, fill);
}

Clip::Clip(int frames, int height, int width, int channels, std::vector<Pixel> data)
    : frames_(frames), height_(height), width_(width), channels_(channels), data_(std::move(data)) {
  check_shape(frames, height, width, channels);
  if (data_.size() != frame_size() * frames) {
    throw std::invalid_argument("clip payload size " + std::to_string(data_.size()) +
                                " does not match shape");
  }
}

std::span<const Pixel> Clip::frame(int t) const {
  return {data_.data() + frame_size() * t, frame_size()};
}

std::span<Pixel> Clip::frame(int t) { return {data_.data() + frame_size() * t, frame_size()}; }

ConstFrameMap Clip::frame_array(int t) const {
  return ConstFrameMap(data_.data() + frame_size() * t, height_,
                       static_cast<Eigen::Index>(width_) * channels_);
}

FrameMap Clip::frame_array(int t) {
  return FrameMap(data_.data() + frame_size() * t, height_,
                  static_cast<Eigen::Index>(width_) * channels_);
}

void require_augmentable(const Clip& clip, std::string_view op) {
  if (clip.frames() < 2 || clip.height() < 8 || clip.width() < 8) {
    throw std::invalid_argument(std::string(op) + ": clip must have n >= 2, H >= 8, W >= 8 (got " +
                                std::to_string(clip.frames()) + "x" +
                                std::to_string(clip.height()) + "x" +
                                std::to_string(clip.width()) + ")");
  }
}

}  // namespace vidaug
