// Copyright 2026 The ver-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "verforge/error.h"
#include "verforge/harness.h"
#include "verforge/text.h"

namespace verforge {
namespace {

namespace fs = std::filesystem;

std::string ResolvePath(const std::string &value, const std::string &base_dir) {
  if (value.empty()) return value;
  fs::path p(value);
  if (p.is_absolute() || base_dir.empty()) return p.lexically_normal().string();
  return (fs::path(base_dir) / p).lexically_normal().string();
}

template <typename T>
T ParseUnsigned(std::string_view key, std::string_view value, size_t line) {
  T out{};
  auto r = std::from_chars(value.data(), value.data() + value.size(), out);
  if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
    throw UsageError("config line " + std::to_string(line) + ": " +
                     std::string(key) + " expects a non-negative integer, got '" +
                     std::string(value) + "'");
  }
  return out;
}

bool ParseSwitch(std::string_view key, std::string_view value, size_t line) {
  std::string v = AsciiLower(value);
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw UsageError("config line " + std::to_string(line) + ": " +
                   std::string(key) + " expects on/off, got '" +
                   std::string(value) + "'");
}

}  // namespace

PipelineConfig PipelineConfig::Parse(std::string_view text,
                                     const std::string &base_dir) {
  PipelineConfig config;
  bool have_dump = false;
  bool have_out = false;
  size_t line_number = 0;
  for (const std::string &raw : SplitString(text, "\n")) {
    ++line_number;
    std::string_view line = raw;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = TrimView(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_number) +
                       ": expected key = value");
    }
    std::string key(TrimView(line.substr(0, eq)));
    std::string value(TrimView(line.substr(eq + 1)));
    if (key == "dump_path") {
      config.dump_path = ResolvePath(value, base_dir);
      have_dump = !value.empty();
    } else if (key == "page_blocklist") {
      config.page_blocklist = ResolvePath(value, base_dir);
    } else if (key == "entityset_blocklist") {
      config.entityset_blocklist = ResolvePath(value, base_dir);
    } else if (key == "coref_plugin") {
      config.coref_plugin = value;
    } else if (key == "retrieval") {
      config.retrieval = ParseSwitch(key, value, line_number);
    } else if (key == "retrieval_mode") {
      if (value == "topk") {
        config.greedy_coverage = false;
      } else if (value == "greedy") {
        config.greedy_coverage = true;
      } else {
        throw UsageError("config line " + std::to_string(line_number) +
                         ": retrieval_mode expects topk or greedy");
      }
    } else if (key == "seed") {
      config.seed = ParseUnsigned<uint64_t>(key, value, line_number);
    } else if (key == "out_dir") {
      config.out_dir = ResolvePath(value, base_dir);
      have_out = !value.empty();
    } else if (key == "jobs") {
      config.jobs = ParseUnsigned<size_t>(key, value, line_number);
      if (config.jobs == 0) config.jobs = 1;
    } else {
      throw UsageError("config line " + std::to_string(line_number) +
                       ": unknown key '" + key + "'");
    }
  }
  if (!have_dump) throw UsageError("config: dump_path is required");
  if (!have_out) throw UsageError("config: out_dir is required");
  return config;
}

PipelineConfig PipelineConfig::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return Parse(text.str(), fs::path(path).parent_path().string());
}

}  // namespace verforge
