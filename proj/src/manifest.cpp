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
#include "vidaug/manifest.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vidaug {
namespace {

using json = nlohmann::ordered_json;

template <typename Fn>
void for_each_line(const std::string& text, Fn fn) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::exception& e) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
    fn(line_no, value);
  }
}

void check_header(int line_no, const json& value, bool& have_header) {
  if (!value.contains("format_version")) {
    throw std::runtime_error("manifest line " + std::to_string(line_no) +
                             ": expected format_version header");
  }
  const int version = value.at("format_version").get<int>();
  if (version != kManifestFormatVersion) {
    throw std::runtime_error("unsupported manifest format_version " + std::to_string(version));
  }
  have_header = true;
}

json header() { return json{{"format_version", kManifestFormatVersion}}; }

}  // namespace

ClipManifest parse_manifest(const std::string& text) {
  ClipManifest manifest;
  bool have_header = false;
  std::set<std::string> ids;
  for_each_line(text, [&](int line_no, const json& value) {
    if (!have_header) {
      check_header(line_no, value, have_header);
      return;
    }
    try {
      ManifestEntry e;
      e.clip_id = value.at("clip_id").get<std::string>();
      e.path = value.at("path").get<std::string>();
      e.label_id = value.at("label_id").get<int>();
      e.n = value.at("n").get<int>();
      e.height = value.at("H").get<int>();
      e.width = value.at("W").get<int>();
      e.channels = value.at("C").get<int>();
      if (!ids.insert(e.clip_id).second) {
        throw std::runtime_error("duplicate clip_id '" + e.clip_id + "'");
      }
      manifest.entries.push_back(std::move(e));
    } catch (const json::exception& e) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  if (!have_header && !text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos) {
    throw std::runtime_error("manifest missing format_version header");
  }
  return manifest;
}

ClipManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string format_manifest(const ClipManifest& manifest) {
  std::string out = header().dump() + "\n";
  for (const ManifestEntry& e : manifest.entries) {
    json line = {{"clip_id", e.clip_id}, {"path", e.path}, {"label_id", e.label_id},
                 {"n", e.n},             {"H", e.height},  {"W", e.width},
                 {"C", e.channels}};
    out += line.dump() + "\n";
  }
  return out;
}

std::string format_result_line(const ResultEntry& e) {
  json line = {{"clip_id", e.clip_id},
               {"path", e.path},
               {"label_a", e.label.label_a},
               {"label_b", e.label.label_b},
               {"weight_b", e.label.weight_b},
               {"partner_id", e.partner_id ? json(*e.partner_id) : json(nullptr)},
               {"seed_path", e.seed_path},
               {"n", e.n},
               {"H", e.height},
               {"W", e.width},
               {"C", e.channels}};
  return line.dump();
}

std::string format_results(const std::vector<ResultEntry>& entries) {
  std::string out = header().dump() + "\n";
  for (const ResultEntry& e : entries) out += format_result_line(e) + "\n";
  return out;
}

std::vector<ResultEntry> parse_results(const std::string& text) {
  std::vector<ResultEntry> entries;
  bool have_header = false;
  for_each_line(text, [&](int line_no, const json& value) {
    if (!have_header) {
      check_header(line_no, value, have_header);
      return;
    }
    ResultEntry e;
    e.clip_id = value.at("clip_id").get<std::string>();
    e.path = value.at("path").get<std::string>();
    e.label.label_a = value.at("label_a").get<int>();
    e.label.label_b = value.at("label_b").get<int>();
    e.label.weight_b = value.at("weight_b").get<double>();
    if (!value.at("partner_id").is_null()) e.partner_id = value.at("partner_id").get<std::string>();
    e.seed_path = value.at("seed_path").get<std::vector<std::uint64_t>>();
    e.n = value.at("n").get<int>();
    e.height = value.at("H").get<int>();
    e.width = value.at("W").get<int>();
    e.channels = value.at("C").get<int>();
    entries.push_back(std::move(e));
  });
  return entries;
}

}  // namespace vidaug
