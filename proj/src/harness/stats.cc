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

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "verforge/harness.h"

namespace verforge {

CorpusStats ComputeCorpusStats(std::span<const Example> examples) {
  CorpusStats stats;
  for (const Example &e : examples) {
    ++stats.histogram[e.entities.size()];
    ++stats.total;
    switch (e.kind()) {
      case ExampleKind::kDefinition:
        ++stats.definition;
        break;
      case ExampleKind::kRelation:
        ++stats.relation;
        break;
      case ExampleKind::kHyper:
        ++stats.hyper;
        break;
    }
  }
  return stats;
}

std::string CorpusStatsToJson(const CorpusStats &stats) {
  nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
  for (const auto &[size, count] : stats.histogram) {
    histogram[std::to_string(size)] = count;
  }
  nlohmann::ordered_json j;
  j["total"] = stats.total;
  j["histogram"] = std::move(histogram);
  j["by_kind"] = {{"definition", stats.definition},
                  {"relation", stats.relation},
                  {"hyper", stats.hyper}};
  return j.dump(2);
}

std::string RenderHistogram(const CorpusStats &stats) {
  constexpr size_t kWidth = 50;
  uint64_t peak = 0;
  for (const auto &entry : stats.histogram) peak = std::max(peak, entry.second);
  std::ostringstream out;
  out << "|E|  count\n";
  for (const auto &[size, count] : stats.histogram) {
    size_t bar = peak == 0 ? 0 : static_cast<size_t>((count * kWidth + peak - 1) / peak);
    out << (size < 10 ? "  " : size < 100 ? " " : "") << size << "  "
        << std::string(bar, '#') << ' ' << count << '\n';
  }
  out << "total " << stats.total << " (definition " << stats.definition
      << ", relation " << stats.relation << ", hyper " << stats.hyper << ")\n";
  return out.str();
}

}  // namespace verforge
