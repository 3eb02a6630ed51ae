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
#ifndef VIDAUG_POLICY_HPP_
#define VIDAUG_POLICY_HPP_

#include "vidaug/clip.hpp"
#include "vidaug/curves.hpp"
#include "vidaug/mix_ops.hpp"
#include "vidaug/pixel_ops.hpp"
#include "vidaug/random.hpp"
#include "vidaug/schedules.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace vidaug {

enum class Variant {
  RA,          // static magnitude, 14 image ops
  RA_T_plus,   // linear M - delta .. M + delta, adds ColourInvert
  RA_Tpp,      // RA_T_plus plus VideoReverse, FrameFadeIn, VideoCutMix
  RA_Tpp_Mag,  // RA_Tpp with magnitude swings on every magnitude op
};

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

/// Candidate ops of a variant before the denylist is applied.
std::span<const OpKind> variant_ops(Variant v);

struct PolicySpec {
  Variant variant = Variant::RA_Tpp;
  int num_ops = 2;          // N
  double magnitude = 0.5;   // M in [0, 1]
  std::optional<MagAugmentConfig> mag;  // RA_Tpp_Mag uses defaults when unset
  std::optional<MixKind> mix;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  std::vector<OpKind> denylist;
  Pixel fill = kCutOutFill;

  void validate() const;
  /// Variant ops minus the denylist, in canonical order.
  std::vector<OpKind> active_ops() const;
  MagAugmentConfig mag_config() const { return mag.value_or(MagAugmentConfig{}); }
};

struct PolicyStep {
  OpKind op = OpKind::Identity;
  MagnitudeCurve curve;
  RngStream stream;  // op-local draws: sign, VideoCutMix box and shuffle
};

/// Magnitude curve the variant assigns to a magnitude op.
MagnitudeCurve sample_curve(const PolicySpec& spec, int n, RngStream stream);

/**
 * Draws N ops with replacement, uniformly over the active set.
 *
 * Selection rejects denied ops against the full variant list, so a denylist
 * only changes the slots where a denied op would have been drawn. Each slot
 * has its own derived stream for selection, curve and op-local draws.
 */
std::vector<PolicyStep> sample_policy(const PolicySpec& spec, int n, RngStream stream);

Clip apply_step(const Clip& clip, const PolicyStep& step);

struct PolicyResult {
  Clip clip;
  LabelMix label;
  std::vector<PolicyStep> steps;
};

/// Applies the sampled ops in draw order, then the optional mix stage.
/// The label reflects the mix stage only.
PolicyResult apply_policy(const Clip& clip, int label, const PolicySpec& spec,
                          std::optional<Partner> partner, RngStream stream);

inline PolicyResult apply_policy(const Clip& clip, int label, const PolicySpec& spec,
                                 std::optional<Partner> partner = std::nullopt) {
  return apply_policy(clip, label, spec, partner, RngStream(spec.seed));
}

}  // namespace vidaug

#endif  // VIDAUG_POLICY_HPP_
