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
#ifndef VIDAUG_CONFIG_HPP_
#define VIDAUG_CONFIG_HPP_

#include "vidaug/policy.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vidaug {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kPolicyFormatVersion = 1;

/**
 * Policy files are "key = value" lines; '#' starts a comment.
 *
 *   format_version = 1          required
 *   variant  = RA | RA_T_plus | RA_Tpp | RA_Tpp_Mag
 *   N        = 2
 *   M        = 0.5
 *   beta     = 8                MagAugment keys; any of them enables the block
 *   P        = 2
 *   m_min    = 0
 *   m_max    = 1
 *   mix      = none | CutOut | ... | FloatFrameCutMixUp
 *   alpha    = 1.0
 *   seed     = 0
 *   denylist = VideoReverse,FrameFadeIn
 *   fill     = 128
 */
PolicySpec parse_policy_config(std::string_view text);
PolicySpec load_policy_config(const std::filesystem::path& path);
std::string format_policy_config(const PolicySpec& spec);

/// Comma separated op names; throws ConfigError on unknown names.
std::vector<OpKind> parse_op_list(std::string_view text);

}  // namespace vidaug

#endif  // VIDAUG_CONFIG_HPP_
