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
#include "vidaug/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

namespace {

vidaug::PolicySpec load_policy(const std::string& path, const std::optional<std::uint64_t>& seed,
                               const std::string& denylist) {
  vidaug::PolicySpec spec = vidaug::load_policy_config(path);
  if (seed) spec.seed = *seed;
  if (!denylist.empty()) spec.denylist = vidaug::parse_op_list(denylist);
  spec.validate();
  return spec;
}

const std::map<std::string, vidaug::ClipFormat> kFormats = {
    {"png", vidaug::ClipFormat::Png}, {"clipraw", vidaug::ClipFormat::ClipRaw}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vidaug: temporal video augmentation over frame-stack clips"};
  app.require_subcommand(1);

  std::string policy_path;
  std::optional<std::uint64_t> seed;
  std::string denylist;

  auto* augment = app.add_subcommand("augment", "Augment every clip of a manifest");
  std::string manifest_path;
  std::string out_dir;
  int jobs = 1;
  vidaug::ClipFormat format = vidaug::ClipFormat::ClipRaw;
  augment->add_option("--manifest", manifest_path, "Input manifest (JSON Lines)")->required();
  augment->add_option("--policy", policy_path, "Policy config file")->required();
  augment->add_option("--out", out_dir, "Output directory")->required();
  augment->add_option("--seed", seed, "Override the policy seed");
  augment->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  augment->add_option("--format", format, "Output clip format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  augment->add_option("--denylist", denylist, "Comma separated ops to exclude");

  auto* schedule = app.add_subcommand("schedule", "Export sampled magnitude curves as CSV");
  int frames = 32;
  int count = 100;
  std::string out_csv;
  schedule->add_option("--policy", policy_path, "Policy config file")->required();
  schedule->add_option("--frames,-n", frames, "Frames per curve")->check(CLI::Range(2, 1 << 20));
  schedule->add_option("--count", count, "Number of curves")->check(CLI::NonNegativeNumber);
  schedule->add_option("--out", out_csv, "Output CSV (stdout when omitted)");
  schedule->add_option("--seed", seed, "Override the policy seed");

  auto* preview = app.add_subcommand("preview", "Write a contact sheet of one augmented clip");
  std::string clip_path;
  std::string partner_path;
  std::string out_png;
  preview->add_option("--clip", clip_path, "Clip (CLIPRAW file or PNG frame directory)")
      ->required();
  preview->add_option("--policy", policy_path, "Policy config file")->required();
  preview->add_option("--out", out_png, "Output PNG")->required();
  preview->add_option("--partner", partner_path, "Partner clip for mix stages");
  preview->add_option("--seed", seed, "Override the policy seed");
  preview->add_option("--denylist", denylist, "Comma separated ops to exclude");

  auto* synth = app.add_subcommand("synth", "Write a synthetic clip corpus and manifest");
  vidaug::SynthOptions synth_opts;
  std::string synth_out;
  std::uint64_t synth_seed = 0;
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--count", synth_opts.count, "Number of clips");
  synth->add_option("--frames", synth_opts.frames, "Frames per clip");
  synth->add_option("--height", synth_opts.height, "Frame height");
  synth->add_option("--width", synth_opts.width, "Frame width");
  synth->add_option("--channels", synth_opts.channels, "1 or 3");
  synth->add_option("--labels", synth_opts.num_labels, "Number of distinct labels");
  synth->add_option("--seed", synth_seed, "Corpus seed");
  synth->add_option("--format", synth_opts.format, "Clip format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*augment) {
      vidaug::AugmentOptions opts;
      opts.manifest = manifest_path;
      opts.policy = load_policy(policy_path, seed, denylist);
      opts.out_dir = out_dir;
      opts.format = format;
      opts.jobs = jobs;
      const vidaug::AugmentReport report = vidaug::cmd_augment(opts);
      for (const std::string& err : report.errors) std::cerr << "error: " << err << "\n";
      std::cerr << report.results.size() << " clips augmented, " << report.errors.size()
                << " failed\n";
      return report.exit_code();
    }
    if (*schedule) {
      const vidaug::PolicySpec spec = load_policy(policy_path, seed, "");
      if (out_csv.empty()) {
        vidaug::cmd_schedule(spec, frames, count, std::cout);
      } else {
        vidaug::cmd_schedule(spec, frames, count, std::filesystem::path(out_csv));
      }
      return 0;
    }
    if (*preview) {
      const vidaug::PolicySpec spec = load_policy(policy_path, seed, denylist);
      std::optional<std::filesystem::path> partner;
      if (!partner_path.empty()) partner = partner_path;
      vidaug::cmd_preview(clip_path, spec, out_png, partner);
      return 0;
    }
    if (*synth) {
      synth_opts.out_dir = synth_out;
      synth_opts.seed = synth_seed;
      vidaug::cmd_synth(synth_opts);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
