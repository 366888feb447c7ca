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

#include <json.hpp>

#include "verforge/error.h"
#include "verforge/metrics.h"

namespace verforge {

ScoreReport Evaluate(std::span<const EvalPair> pairs,
                     const std::vector<std::string> &metrics,
                     const std::vector<std::vector<std::string>> *concepts) {
  ScoreReport report;
  report.n_pairs = pairs.size();
  for (const std::string &name : metrics) {
    if (name == "bleu") {
      report.bleu = Bleu(pairs);
    } else if (name == "rouge_l") {
      report.rouge_l = RougeL(pairs);
    } else if (name == "meteor_lite") {
      report.meteor_lite = MeteorLite(pairs);
    } else if (name == "cider") {
      report.cider = Cider(pairs);
    } else if (name == "coverage") {
      if (concepts == nullptr || concepts->size() != pairs.size()) {
        throw UsageError("coverage needs a concept list for every pair");
      }
      if (pairs.empty()) throw DataError("coverage: no pairs");
      double sum = 0;
      for (size_t i = 0; i < pairs.size(); ++i) {
        sum += ConceptCoverage((*concepts)[i], pairs[i].hypothesis);
      }
      report.coverage = sum / static_cast<double>(pairs.size());
    } else {
      throw UsageError("unknown metric '" + name + "'");
    }
  }
  return report;
}

std::string ScoreReportToJson(const ScoreReport &report) {
  nlohmann::ordered_json j;
  j["n_pairs"] = report.n_pairs;
  if (report.bleu) j["bleu"] = *report.bleu;
  if (report.rouge_l) j["rouge_l"] = *report.rouge_l;
  if (report.meteor_lite) j["meteor_lite"] = *report.meteor_lite;
  if (report.cider) j["cider"] = *report.cider;
  if (report.coverage) j["coverage"] = *report.coverage;
  return j.dump(2);
}

}  // namespace verforge
