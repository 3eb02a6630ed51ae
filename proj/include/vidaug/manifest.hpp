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
#ifndef VIDAUG_MANIFEST_HPP_
#define VIDAUG_MANIFEST_HPP_

#include "vidaug/clip.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace vidaug {

inline constexpr int kManifestFormatVersion = 1;

// Manifests are JSON Lines. The first line is {"format_version": 1}; every
// following non-empty line is one entry object.

struct ManifestEntry {
  std::string clip_id;
  std::string path;  // relative paths resolve against the manifest directory
  int label_id = 0;
  int n = 0;
  int height = 0;
  int width = 0;
  int channels = 0;

  bool matches(const Clip& clip) const {
    return clip.frames() == n && clip.height() == height && clip.width() == width &&
           clip.channels() == channels;
  }
};

struct ClipManifest {
  int format_version = kManifestFormatVersion;
  std::vector<ManifestEntry> entries;
};

/// Throws std::runtime_error on malformed lines or duplicate clip ids.
ClipManifest parse_manifest(const std::string& text);
ClipManifest load_manifest(const std::filesystem::path& path);
std::string format_manifest(const ClipManifest& manifest);

struct ResultEntry {
  std::string clip_id;
  std::string path;
  LabelMix label;
  std::optional<std::string> partner_id;
  std::vector<std::uint64_t> seed_path;
  int n = 0;
  int height = 0;
  int width = 0;
  int channels = 0;
};

std::string format_result_line(const ResultEntry& entry);
std::string format_results(const std::vector<ResultEntry>& entries);
std::vector<ResultEntry> parse_results(const std::string& text);

}  // namespace vidaug

#endif  // VIDAUG_MANIFEST_HPP_
