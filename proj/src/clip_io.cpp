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
#include "vidaug/clip_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>

namespace vidaug {
namespace fs = std::filesystem;

namespace {

void put_u32(std::array<char, 4>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
}

std::uint32_t get_u32(const unsigned char* in) {
  return static_cast<std::uint32_t>(in[0]) | (static_cast<std::uint32_t>(in[1]) << 8) |
         (static_cast<std::uint32_t>(in[2]) << 16) | (static_cast<std::uint32_t>(in[3]) << 24);
}

// Parses "frame_NNNNN.png"; returns -1 for other names.
int parse_frame_index(const std::string& name) {
  constexpr std::string_view prefix = "frame_";
  constexpr std::string_view suffix = ".png";
  if (name.size() != prefix.size() + 5 + suffix.size()) return -1;
  if (name.compare(0, prefix.size(), prefix) != 0) return -1;
  if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) return -1;
  int value = 0;
  for (std::size_t i = prefix.size(); i < prefix.size() + 5; ++i) {
    if (name[i] < '0' || name[i] > '9') return -1;
    value = value * 10 + (name[i] - '0');
  }
  return value;
}

Clip read_png_directory(const fs::path& dir) {
  std::map<int, fs::path> frames;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const int index = parse_frame_index(entry.path().filename().string());
    if (index >= 0) frames.emplace(index, entry.path());
  }
  if (frames.empty()) throw IoError("no frame_*.png files in " + dir.string());
  const int n = frames.rbegin()->first + 1;
  for (int t = 0; t < n; ++t) {
    if (!frames.contains(t)) throw IoError("missing frame index " + std::to_string(t));
  }

  Image first = read_png(frames.at(0));
  std::vector<Pixel> data;
  data.reserve(first.data.size() * n);
  data.insert(data.end(), first.data.begin(), first.data.end());
  for (int t = 1; t < n; ++t) {
    Image img = read_png(frames.at(t));
    if (img.height != first.height || img.width != first.width ||
        img.channels != first.channels) {
      throw IoError("inconsistent PNG dimensions at frame index " + std::to_string(t));
    }
    data.insert(data.end(), img.data.begin(), img.data.end());
  }
  return Clip(n, first.height, first.width, first.channels, std::move(data));
}

}  // namespace

std::string_view format_name(ClipFormat f) { return f == ClipFormat::Png ? "png" : "clipraw"; }

std::optional<ClipFormat> format_from_name(std::string_view name) {
  if (name == "png") return ClipFormat::Png;
  if (name == "clipraw") return ClipFormat::ClipRaw;
  return std::nullopt;
}

std::string frame_file_name(int t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%05d.png", t);
  return buf;
}

Image read_png(const fs::path& path) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.string().c_str())) {
    throw IoError("cannot read PNG " + path.string() + ": " + png.message);
  }
  Image image;
  const bool colour = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = colour ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  image.height = static_cast<int>(png.height);
  image.width = static_cast<int>(png.width);
  image.channels = colour ? 3 : 1;
  image.data.resize(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, image.data.data(), 0, nullptr)) {
    png_image_free(&png);
    throw IoError("cannot decode PNG " + path.string() + ": " + png.message);
  }
  return image;
}

void write_png(const fs::path& path, const Image& image) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = image.channels == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png, path.string().c_str(), 0, image.data.data(), 0, nullptr)) {
    throw IoError("cannot write PNG " + path.string() + ": " + png.message);
  }
}

Clip read_clipraw(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  unsigned char header[20];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (in.gcount() < 4 || std::memcmp(header, kClipRawMagic, 4) != 0) {
    throw IoError("bad magic in " + path.string());
  }
  if (in.gcount() != static_cast<std::streamsize>(sizeof(header))) {
    throw IoError("truncated CLIPRAW header in " + path.string());
  }
  const std::uint32_t n = get_u32(header + 4);
  const std::uint32_t h = get_u32(header + 8);
  const std::uint32_t w = get_u32(header + 12);
  const std::uint32_t c = get_u32(header + 16);
  if (n == 0 || h == 0 || w == 0 || (c != 1 && c != 3) || n > (1u << 20) || h > (1u << 16) ||
      w > (1u << 16)) {
    throw IoError("invalid CLIPRAW shape in " + path.string());
  }
  const std::size_t bytes = static_cast<std::size_t>(n) * h * w * c;
  std::vector<Pixel> data(bytes);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(bytes));
  if (static_cast<std::size_t>(in.gcount()) != bytes) {
    throw IoError("truncated CLIPRAW payload in " + path.string());
  }
  return Clip(static_cast<int>(n), static_cast<int>(h), static_cast<int>(w), static_cast<int>(c),
              std::move(data));
}

void write_clipraw(const Clip& clip, const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(kClipRawMagic, 4);
  for (int v : {clip.frames(), clip.height(), clip.width(), clip.channels()}) {
    std::array<char, 4> word;
    put_u32(word, static_cast<std::uint32_t>(v));
    out.write(word.data(), 4);
  }
  out.write(reinterpret_cast<const char*>(clip.data().data()),
            static_cast<std::streamsize>(clip.data().size()));
  if (!out) throw IoError("write failed for " + path.string());
}

Clip read_clip(const fs::path& path) {
  if (fs::is_directory(path)) return read_png_directory(path);
  return read_clipraw(path);
}

void write_clip(const Clip& clip, const fs::path& path, ClipFormat format) {
  if (format == ClipFormat::ClipRaw) {
    write_clipraw(clip, path);
    return;
  }
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec || !fs::is_directory(path)) throw IoError("cannot create directory " + path.string());
  for (const auto& entry : fs::directory_iterator(path)) {
    if (parse_frame_index(entry.path().filename().string()) >= 0) fs::remove(entry.path());
  }
  for (int t = 0; t < clip.frames(); ++t) {
    const auto frame = clip.frame(t);
    Image image{clip.height(), clip.width(), clip.channels(),
                std::vector<Pixel>(frame.begin(), frame.end())};
    write_png(path / frame_file_name(t), image);
  }
}

}  // namespace vidaug
