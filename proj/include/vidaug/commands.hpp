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
#ifndef VIDAUG_COMMANDS_HPP_
#define VIDAUG_COMMANDS_HPP_

#include "vidaug/clip_io.hpp"
#include "vidaug/manifest.hpp"
#include "vidaug/policy.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace vidaug {

/// Stream labels under RngStream(seed) used by the batch commands.
inline constexpr std::uint64_t kPairingStream = 0;
inline constexpr std::uint64_t kClipStreams = 1;

struct AugmentOptions {
  std::filesystem::path manifest;
  PolicySpec policy;
  std::filesystem::path out_dir;
  ClipFormat format = ClipFormat::ClipRaw;
  int jobs = 1;
};

struct AugmentReport {
  std::vector<ResultEntry> results;
  std::vector<std::string> errors;  // "clip_id: message", manifest order

  int exit_code() const { return errors.empty() ? 0 : 1; }
};

/**
 * Augments every manifest entry and writes out_dir/<clip_id>[.clipraw] plus
 * out_dir/manifest.jsonl. Clip i uses RngStream(seed).derive(1).derive(i);
 * mix partners come from a permutation drawn on RngStream(seed).derive(0).
 * Output bytes do not depend on `jobs`.
 */
AugmentReport cmd_augment(const AugmentOptions& options);

/// Writes "sample_id,t,m_t" rows (9 decimals) for `count` sampled curves.
void cmd_schedule(const PolicySpec& spec, int n, int count, std::ostream& csv);
void cmd_schedule(const PolicySpec& spec, int n, int count, const std::filesystem::path& out_csv);

/// Up to max_panels evenly spaced frame indices, first and last included.
std::vector<int> preview_frame_indices(int n, int max_panels = 8);

/// Horizontal strip of the selected frames.
Image contact_sheet(const Clip& clip, int max_panels = 8);

/// Applies the policy to one clip and writes its contact sheet. Mix stages
/// without an explicit partner use the colour-inverted input as partner.
void cmd_preview(const std::filesystem::path& clip_path, const PolicySpec& spec,
                 const std::filesystem::path& out_png,
                 const std::optional<std::filesystem::path>& partner_path = std::nullopt);

struct SynthOptions {
  std::filesystem::path out_dir;
  int count = 8;
  int frames = 16;
  int height = 64;
  int width = 64;
  int channels = 3;
  int num_labels = 10;
  std::uint64_t seed = 0;
  ClipFormat format = ClipFormat::ClipRaw;
};

/// Moving-pattern clip; deterministic in (seed, index).
Clip synthetic_clip(int frames, int height, int width, int channels, std::uint64_t seed,
                    int index);

/// Writes `count` synthetic clips and out_dir/manifest.jsonl describing them.
void cmd_synth(const SynthOptions& options);

}  // namespace vidaug

#endif  // VIDAUG_COMMANDS_HPP_
