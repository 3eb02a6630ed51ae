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
#include "vidaug/policy.hpp"

#include "vidaug/single_video_ops.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace vidaug {
namespace {

constexpr std::array<OpKind, 15> kRandAugmentTOps = {
    OpKind::Identity,   OpKind::Rotate,     OpKind::Posterise,    OpKind::Equalise,
    OpKind::Sharpness,  OpKind::TranslateX, OpKind::TranslateY,   OpKind::Colour,
    OpKind::AutoContrast, OpKind::Solarise, OpKind::Contrast,     OpKind::Brightness,
    OpKind::ShearX,     OpKind::ShearY,     OpKind::ColourInvert};

constexpr std::array<OpKind, 18> kRandAugmentTppOps = {
    OpKind::Identity,     OpKind::Rotate,       OpKind::Posterise,   OpKind::Equalise,
    OpKind::Sharpness,    OpKind::TranslateX,   OpKind::TranslateY,  OpKind::Colour,
    OpKind::AutoContrast, OpKind::Solarise,     OpKind::Contrast,    OpKind::Brightness,
    OpKind::ShearX,       OpKind::ShearY,       OpKind::ColourInvert, OpKind::VideoReverse,
    OpKind::FrameFadeIn,  OpKind::VideoCutMix};

constexpr std::array<std::string_view, 4> kVariantNames = {"RA", "RA_T_plus", "RA_Tpp",
                                                           "RA_Tpp_Mag"};

// Slot-local stream labels.
constexpr std::uint64_t kSelect = 0;
constexpr std::uint64_t kCurve = 1;
constexpr std::uint64_t kOpDraws = 2;

bool denied(const PolicySpec& spec, OpKind op) {
  return std::ranges::find(spec.denylist, op) != spec.denylist.end();
}

}  // namespace

std::string_view variant_name(Variant v) { return kVariantNames[static_cast<int>(v)]; }

std::optional<Variant> variant_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
    if (kVariantNames[i] == name) return static_cast<Variant>(i);
  }
  return std::nullopt;
}

std::span<const OpKind> variant_ops(Variant v) {
  switch (v) {
    case Variant::RA:
      return kRandAugmentOps;
    case Variant::RA_T_plus:
      return kRandAugmentTOps;
    case Variant::RA_Tpp:
    case Variant::RA_Tpp_Mag:
      return kRandAugmentTppOps;
  }
  throw std::logic_error("unknown variant");
}

void PolicySpec::validate() const {
  if (num_ops < 1) throw std::invalid_argument("policy N must be >= 1");
  if (!(magnitude >= 0.0 && magnitude <= 1.0)) {
    throw std::invalid_argument("policy M must be in [0,1]");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("policy alpha must be > 0");
  if (denied(*this, OpKind::Identity)) {
    throw std::invalid_argument("Identity cannot be denylisted");
  }
  if (mag) mag->validate();
  if (active_ops().empty()) throw std::invalid_argument("policy has an empty active op set");
}

std::vector<OpKind> PolicySpec::active_ops() const {
  std::vector<OpKind> ops;
  for (OpKind op : variant_ops(variant)) {
    if (!denied(*this, op)) ops.push_back(op);
  }
  return ops;
}

MagnitudeCurve sample_curve(const PolicySpec& spec, int n, RngStream stream) {
  if (spec.variant == Variant::RA) return static_schedule(spec.magnitude, n);
  const auto [m_start, m_end] = t_plus_endpoints(spec.magnitude, stream.derive(0));
  MagnitudeCurve base = linear_schedule(m_start, m_end, n);
  if (spec.variant != Variant::RA_Tpp_Mag) return base;
  return magaugment_schedule(base, spec.mag_config(), stream.derive(1)).curve;
}

std::vector<PolicyStep> sample_policy(const PolicySpec& spec, int n, RngStream stream) {
  spec.validate();
  const std::span<const OpKind> candidates = variant_ops(spec.variant);
  const int k = static_cast<int>(candidates.size());
  std::vector<PolicyStep> steps;
  steps.reserve(spec.num_ops);
  for (int i = 0; i < spec.num_ops; ++i) {
    const RngStream slot = stream.derive(static_cast<std::uint64_t>(i));
    RngStream select = slot.derive(kSelect);
    OpKind op;
    do {
      op = candidates[uniform_int(select, 0, k - 1)];
    } while (denied(spec, op));

    PolicyStep step;
    step.op = op;
    step.curve = has_magnitude(op) ? sample_curve(spec, n, slot.derive(kCurve))
                                   : static_schedule(0.0, n);
    step.stream = slot.derive(kOpDraws);
    steps.push_back(std::move(step));
  }
  return steps;
}

Clip apply_step(const Clip& clip, const PolicyStep& step) {
  switch (step.op) {
    case OpKind::VideoReverse:
      return video_reverse(clip);
    case OpKind::FrameFadeIn:
      return frame_fade_in(clip);
    case OpKind::VideoCutMix:
      return video_cutmix(clip, step.stream);
    default:
      return apply_pixel_op(clip, step.op, step.curve, step.stream);
  }
}

PolicyResult apply_policy(const Clip& clip, int label, const PolicySpec& spec,
                          std::optional<Partner> partner, RngStream stream) {
  require_augmentable(clip, "policy");
  if (spec.mix && needs_partner(*spec.mix) && !partner) {
    throw std::invalid_argument("policy mix stage " + std::string(mix_name(*spec.mix)) +
                                " requires a partner clip");
  }
  PolicyResult result;
  result.steps = sample_policy(spec, clip.frames(), stream.derive(0));
  result.clip = clip;
  for (const PolicyStep& step : result.steps) result.clip = apply_step(result.clip, step);
  result.label = LabelMix::unmixed(label);
  if (spec.mix) {
    MixResult mixed = apply_mix(*spec.mix, result.clip, label, partner, spec.alpha,
                                stream.derive(1), spec.fill);
    result.clip = std::move(mixed.clip);
    result.label = mixed.label;
  }
  return result;
}

}  // namespace vidaug
