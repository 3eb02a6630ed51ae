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
#ifndef VIDAUG_CLIP_HPP_
#define VIDAUG_CLIP_HPP_

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vidaug {

using Pixel = std::uint8_t;

/// Row-major view of one frame: H rows, W*C interleaved columns.
using FrameArray = Eigen::Array<Pixel, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FrameMap = Eigen::Map<FrameArray>;
using ConstFrameMap = Eigen::Map<const FrameArray>;

/**
 * Dense frame stack of n frames, each H x W x C, 8 bits per channel.
 *
 * Storage is frame-major, row-major, channel-interleaved, which is also the
 * CLIPRAW payload order. The container accepts any positive shape so that
 * small files can be read; augmentation entry points call
 * require_augmentable() for the n >= 2, H >= 8, W >= 8 contract.
 */
class Clip {
 public:
  Clip() = default;
  Clip(int frames, int height, int width, int channels, Pixel fill = 0);
  Clip(int frames, int height, int width, int channels, std::vector<Pixel> data);

  int frames() const { return frames_; }
  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t frame_size() const {
    return static_cast<std::size_t>(height_) * width_ * channels_;
  }
  bool empty() const { return data_.empty(); }

  std::span<const Pixel> frame(int t) const;
  std::span<Pixel> frame(int t);

  ConstFrameMap frame_array(int t) const;
  FrameMap frame_array(int t);

  const Pixel& at(int t, int y, int x, int c) const { return data_[index(t, y, x, c)]; }
  Pixel& at(int t, int y, int x, int c) { return data_[index(t, y, x, c)]; }

  const std::vector<Pixel>& data() const { return data_; }
  std::vector<Pixel>& data() { return data_; }

  bool same_shape(const Clip& other) const {
    return frames_ == other.frames_ && height_ == other.height_ && width_ == other.width_ &&
           channels_ == other.channels_;
  }

  friend bool operator==(const Clip&, const Clip&) = default;

 private:
  std::size_t index(int t, int y, int x, int c) const {
    return ((static_cast<std::size_t>(t) * height_ + y) * width_ + x) * channels_ + c;
  }

  int frames_ = 0;
  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<Pixel> data_;
};

/// Throws std::invalid_argument unless n >= 2, H >= 8 and W >= 8.
void require_augmentable(const Clip& clip, std::string_view op);

/// Rounds half up and clamps into [0, 255].
/// NaN maps to 0. Branch-free so blend loops vectorize.
inline Pixel saturate_round(double v) {
  double x = v + 0.5;
  x = x > 0.0 ? x : 0.0;
  x = x < 255.0 ? x : 255.0;
  return static_cast<Pixel>(static_cast<int>(x));
}

/// Soft-label outcome of an augmentation.
struct LabelMix {
  int label_a = 0;
  int label_b = 0;
  double weight_b = 0.0;

  static LabelMix unmixed(int label) { return {label, label, 0.0}; }
  friend bool operator==(const LabelMix&, const LabelMix&) = default;
};

/// Integer pixel rectangle [x0, x0 + w) x [y0, y0 + h).
struct PixelRect {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;

  bool contains(int x, int y) const { return x >= x0 && x < x0 + w && y >= y0 && y < y0 + h; }
  std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

}  // namespace vidaug

#endif  // VIDAUG_CLIP_HPP_
