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
#ifndef VIDAUG_CLIP_IO_HPP_
#define VIDAUG_CLIP_IO_HPP_

#include "vidaug/clip.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vidaug {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ClipFormat { Png, ClipRaw };

std::string_view format_name(ClipFormat f);
std::optional<ClipFormat> format_from_name(std::string_view name);

/// CLIPRAW: "CLR1", then little-endian u32 n, H, W, C, then n*H*W*C bytes.
inline constexpr char kClipRawMagic[4] = {'C', 'L', 'R', '1'};

/// Single image (one frame), 8-bit gray or RGB.
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<Pixel> data;
};

Image read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& image);

/// Frame file name inside a PNG clip directory: frame_00000.png, ...
std::string frame_file_name(int t);

Clip read_clipraw(const std::filesystem::path& path);
void write_clipraw(const Clip& clip, const std::filesystem::path& path);

/// A directory is read as PNG frames, anything else as CLIPRAW.
Clip read_clip(const std::filesystem::path& path);
void write_clip(const Clip& clip, const std::filesystem::path& path, ClipFormat format);

}  // namespace vidaug

#endif  // VIDAUG_CLIP_IO_HPP_
