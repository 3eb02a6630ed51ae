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
#include "vidaug/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace vidaug {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("invalid value for '" + std::string(key) + "': " + std::string(value));
  }
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<OpKind> parse_op_list(std::string_view text) {
  std::vector<OpKind> ops;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (!item.empty()) {
      const auto op = op_from_name(item);
      if (!op) throw ConfigError("unknown op '" + std::string(item) + "'");
      ops.push_back(*op);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ops;
}

PolicySpec parse_policy_config(std::string_view text) {
  PolicySpec spec;
  std::set<std::string, std::less<>> seen;
  bool has_version = false;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }

    if (key == "format_version") {
      const int version = parse_number<int>(key, value);
      if (version != kPolicyFormatVersion) {
        throw ConfigError("unsupported format_version " + std::to_string(version));
      }
      has_version = true;
    } else if (key == "variant") {
      const auto v = variant_from_name(value);
      if (!v) throw ConfigError("unknown variant '" + std::string(value) + "'");
      spec.variant = *v;
    } else if (key == "N") {
      spec.num_ops = parse_number<int>(key, value);
    } else if (key == "M") {
      spec.magnitude = parse_number<double>(key, value);
    } else if (key == "beta") {
      if (!spec.mag) spec.mag.emplace();
      spec.mag->beta = parse_number<int>(key, value);
    } else if (key == "P") {
      if (!spec.mag) spec.mag.emplace();
      spec.mag->perturbations = parse_number<int>(key, value);
    } else if (key == "m_min") {
      if (!spec.mag) spec.mag.emplace();
      spec.mag->m_min = parse_number<double>(key, value);
    } else if (key == "m_max") {
      if (!spec.mag) spec.mag.emplace();
      spec.mag->m_max = parse_number<double>(key, value);
    } else if (key == "mix") {
      if (value == "none") {
        spec.mix.reset();
      } else {
        const auto kind = mix_from_name(value);
        if (!kind) throw ConfigError("unknown mix kind '" + std::string(value) + "'");
        spec.mix = *kind;
      }
    } else if (key == "alpha") {
      spec.alpha = parse_number<double>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "denylist") {
      spec.denylist = parse_op_list(value);
    } else if (key == "fill") {
      const int fill = parse_number<int>(key, value);
      if (fill < 0 || fill > 255) throw ConfigError("fill must be in [0,255]");
      spec.fill = static_cast<Pixel>(fill);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) +
                        "'");
    }
  }
  if (!has_version) throw ConfigError("missing format_version");
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

PolicySpec load_policy_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open policy config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_policy_config(buf.str());
}

std::string format_policy_config(const PolicySpec& spec) {
  std::ostringstream os;
  os << "format_version = " << kPolicyFormatVersion << "\n";
  os << "variant = " << variant_name(spec.variant) << "\n";
  os << "N = " << spec.num_ops << "\n";
  os << "M = " << format_double(spec.magnitude) << "\n";
  if (spec.mag) {
    os << "beta = " << spec.mag->beta << "\n";
    os << "P = " << spec.mag->perturbations << "\n";
    os << "m_min = " << format_double(spec.mag->m_min) << "\n";
    os << "m_max = " << format_double(spec.mag->m_max) << "\n";
  }
  os << "mix = " << (spec.mix ? mix_name(*spec.mix) : std::string_view("none")) << "\n";
  os << "alpha = " << format_double(spec.alpha) << "\n";
  os << "seed = " << spec.seed << "\n";
  if (!spec.denylist.empty()) {
    os << "denylist = ";
    for (std::size_t i = 0; i < spec.denylist.size(); ++i) {
      os << (i ? "," : "") << op_name(spec.denylist[i]);
    }
    os << "\n";
  }
  os << "fill = " << static_cast<int>(spec.fill) << "\n";
  return os.str();
}

}  // namespace vidaug
