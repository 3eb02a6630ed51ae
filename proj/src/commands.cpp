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
#include "vidaug/commands.hpp"

#include "vidaug/pixel_ops.hpp"
#include "vidaug/schedules.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

namespace vidaug {
namespace fs = std::filesystem;

namespace {

fs::path resolve(const fs::path& base_dir, const std::string& path) {
  const fs::path p(path);
  return p.is_absolute() ? p : base_dir / p;
}

void check_clip_id(const std::string& id) {
  if (id.empty() || id == "." || id == ".." || id.find('/') != std::string::npos ||
      id.find('\\') != std::string::npos || id == "manifest.jsonl") {
    throw std::runtime_error("clip_id '" + id + "' is not usable as an output file name");
  }
}

std::string output_name(const std::string& clip_id, ClipFormat format) {
  return format == ClipFormat::ClipRaw ? clip_id + ".clipraw" : clip_id;
}

Clip load_entry(const fs::path& base_dir, const ManifestEntry& entry) {
  Clip clip = read_clip(resolve(base_dir, entry.path));
  if (!entry.matches(clip)) {
    throw std::runtime_error("on-disk shape " + std::to_string(clip.frames()) + "x" +
                             std::to_string(clip.height()) + "x" + std::to_string(clip.width()) +
                             "x" + std::to_string(clip.channels()) +
                             " does not match manifest");
  }
  return clip;
}

Clip invert(const Clip& clip) {
  Clip out = clip;
  for (Pixel& p : out.data()) p = static_cast<Pixel>(255 - p);
  return out;
}

}  // namespace

AugmentReport cmd_augment(const AugmentOptions& options) {
  options.policy.validate();
  const ClipManifest manifest = load_manifest(options.manifest);
  const fs::path base_dir = options.manifest.parent_path();
  fs::create_directories(options.out_dir);

  const int count = static_cast<int>(manifest.entries.size());
  const RngStream root(options.policy.seed);
  const bool paired = options.policy.mix && needs_partner(*options.policy.mix);
  std::vector<int> partner_of;
  if (paired) {
    RngStream pairing = root.derive(kPairingStream);
    partner_of = random_permutation(pairing, count);
  }

  std::vector<std::optional<ResultEntry>> results(count);
  std::vector<std::string> errors(count);

  auto process = [&](int i) {
    const ManifestEntry& entry = manifest.entries[i];
    try {
      check_clip_id(entry.clip_id);
      const Clip clip = load_entry(base_dir, entry);
      std::optional<Clip> partner_clip;
      std::optional<Partner> partner;
      ResultEntry result;
      if (paired) {
        const ManifestEntry& other = manifest.entries[partner_of[i]];
        partner_clip = load_entry(base_dir, other);
        partner.emplace(Partner{*partner_clip, other.label_id});
        result.partner_id = other.clip_id;
      }
      const RngStream stream = root.derive(kClipStreams).derive(static_cast<std::uint64_t>(i));
      PolicyResult out = apply_policy(clip, entry.label_id, options.policy, partner, stream);

      const std::string name = output_name(entry.clip_id, options.format);
      write_clip(out.clip, options.out_dir / name, options.format);
      result.clip_id = entry.clip_id;
      result.path = name;
      result.label = out.label;
      result.seed_path = stream.path();
      result.n = out.clip.frames();
      result.height = out.clip.height();
      result.width = out.clip.width();
      result.channels = out.clip.channels();
      results[i] = std::move(result);
    } catch (const std::exception& e) {
      errors[i] = entry.clip_id + ": " + e.what();
    }
  };

  const int jobs = std::clamp(options.jobs, 1, std::max(count, 1));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) process(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) process(i);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  AugmentReport report;
  for (int i = 0; i < count; ++i) {
    if (results[i]) report.results.push_back(std::move(*results[i]));
    if (!errors[i].empty()) report.errors.push_back(std::move(errors[i]));
  }
  std::ofstream out(options.out_dir / "manifest.jsonl", std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write output manifest in " + options.out_dir.string());
  out << format_results(report.results);
  return report;
}

void cmd_schedule(const PolicySpec& spec, int n, int count, std::ostream& csv) {
  spec.validate();
  if (n < 2) throw std::invalid_argument("schedule needs n >= 2");
  if (count < 0) throw std::invalid_argument("schedule count must be >= 0");
  const RngStream root(spec.seed);
  csv << "sample_id,t,m_t\n";
  char buf[64];
  for (int i = 0; i < count; ++i) {
    const MagnitudeCurve curve = sample_curve(spec, n, root.derive(static_cast<std::uint64_t>(i)));
    for (int t = 0; t < n; ++t) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%.9f\n", i, t, curve[t]);
      csv << buf;
    }
  }
}

void cmd_schedule(const PolicySpec& spec, int n, int count, const fs::path& out_csv) {
  std::ofstream out(out_csv, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + out_csv.string());
  cmd_schedule(spec, n, count, out);
}

std::vector<int> preview_frame_indices(int n, int max_panels) {
  std::vector<int> indices;
  if (n <= 0 || max_panels <= 0) return indices;
  if (n <= max_panels) {
    for (int t = 0; t < n; ++t) indices.push_back(t);
    return indices;
  }
  if (max_panels == 1) return {0};
  for (int i = 0; i < max_panels; ++i) {
    indices.push_back(static_cast<int>(std::lround(static_cast<double>(i) * (n - 1) /
                                                   (max_panels - 1))));
  }
  return indices;
}

Image contact_sheet(const Clip& clip, int max_panels) {
  const std::vector<int> panels = preview_frame_indices(clip.frames(), max_panels);
  Image sheet;
  sheet.height = clip.height();
  sheet.width = clip.width() * static_cast<int>(panels.size());
  sheet.channels = clip.channels();
  sheet.data.resize(static_cast<std::size_t>(sheet.height) * sheet.width * sheet.channels);
  const std::size_t row = static_cast<std::size_t>(clip.width()) * clip.channels();
  for (std::size_t p = 0; p < panels.size(); ++p) {
    for (int y = 0; y < clip.height(); ++y) {
      const Pixel* src = &clip.at(panels[p], y, 0, 0);
      Pixel* dst = sheet.data.data() + (static_cast<std::size_t>(y) * sheet.width) * sheet.channels +
                   p * row;
      std::copy(src, src + row, dst);
    }
  }
  return sheet;
}

void cmd_preview(const fs::path& clip_path, const PolicySpec& spec, const fs::path& out_png,
                 const std::optional<fs::path>& partner_path) {
  const Clip clip = read_clip(clip_path);
  std::optional<Clip> partner_clip;
  std::optional<Partner> partner;
  if (spec.mix && needs_partner(*spec.mix)) {
    partner_clip = partner_path ? read_clip(*partner_path) : invert(clip);
    partner.emplace(Partner{*partner_clip, 1});
  }
  const PolicyResult result = apply_policy(clip, 0, spec, partner, RngStream(spec.seed));
  write_png(out_png, contact_sheet(result.clip));
}

Clip synthetic_clip(int frames, int height, int width, int channels, std::uint64_t seed,
                    int index) {
  RngStream stream = RngStream(seed).derive(static_cast<std::uint64_t>(index));
  const double vx = uniform(stream, -2.0, 2.0);
  const double vy = uniform(stream, -2.0, 2.0);
  const double x0 = uniform(stream, 0.0, width);
  const double y0 = uniform(stream, 0.0, height);
  const double radius = uniform(stream, 0.1, 0.3) * std::min(width, height);
  std::array<int, 3> tint{};
  for (int& v : tint) v = uniform_int(stream, 40, 215);

  Clip clip(frames, height, width, channels);
  for (int t = 0; t < frames; ++t) {
    const double cx = x0 + vx * t;
    const double cy = y0 + vy * t;
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        const double dx = x - cx;
        const double dy = y - cy;
        const bool inside = dx * dx + dy * dy < radius * radius;
        for (int c = 0; c < channels; ++c) {
          const int background = (x * 3 + y * 2 + t * 5 + c * 40) % 256;
          clip.at(t, y, x, c) = static_cast<Pixel>(inside ? tint[c] : background);
        }
      }
    }
  }
  return clip;
}

void cmd_synth(const SynthOptions& options) {
  fs::create_directories(options.out_dir);
  ClipManifest manifest;
  for (int i = 0; i < options.count; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "clip_%05d", i);
    const Clip clip = synthetic_clip(options.frames, options.height, options.width,
                                     options.channels, options.seed, i);
    const std::string name = output_name(id, options.format);
    write_clip(clip, options.out_dir / name, options.format);
    manifest.entries.push_back({id, name, i % std::max(options.num_labels, 1), options.frames,
                                options.height, options.width, options.channels});
  }
  std::ofstream out(options.out_dir / "manifest.jsonl", std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write manifest in " + options.out_dir.string());
  out << format_manifest(manifest);
}

}  // namespace vidaug
