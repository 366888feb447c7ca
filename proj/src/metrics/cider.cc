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
#include <cmath>
#include <set>

#include "ngram.h"
#include "verforge/error.h"
#include "verforge/metrics.h"

namespace verforge {

namespace {

constexpr int kCiderMaxOrder = 4;

using internal::NgramCounts;

double Similarity(const NgramCounts &hyp, const NgramCounts &ref,
                  const std::map<std::string, size_t> &df, double log_n) {
  if (hyp == ref) return 1.0;
  auto weight = [&](const std::string &gram, size_t count) {
    auto it = df.find(gram);
    double d = it == df.end() ? 1.0 : std::max<double>(1.0, it->second);
    return static_cast<double>(count) * (log_n - std::log(d));
  };
  double dot = 0;
  double hyp_norm = 0;
  double ref_norm = 0;
  for (const auto &[gram, count] : hyp) {
    double w = weight(gram, count);
    hyp_norm += w * w;
    auto it = ref.find(gram);
    if (it != ref.end()) dot += w * weight(gram, it->second);
  }
  for (const auto &[gram, count] : ref) {
    double w = weight(gram, count);
    ref_norm += w * w;
  }
  if (hyp_norm == 0 || ref_norm == 0) return 0.0;
  return std::min(1.0, dot / (std::sqrt(hyp_norm) * std::sqrt(ref_norm)));
}

}  // namespace

double Cider(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw DataError("CIDEr needs at least one pair");
  std::map<std::string, size_t> df[kCiderMaxOrder];
  for (const EvalPair &pair : pairs) {
    for (int n = 1; n <= kCiderMaxOrder; ++n) {
      std::set<std::string> grams;
      for (const Tokens &ref : pair.references) {
        for (const auto &entry : internal::CountNgrams(ref, n)) {
          grams.insert(entry.first);
        }
      }
      for (const std::string &g : grams) ++df[n - 1][g];
    }
  }
  const double log_n = std::log(static_cast<double>(pairs.size()));

  double total = 0;
  for (const EvalPair &pair : pairs) {
    if (pair.references.empty()) throw DataError("evaluation pair has no reference");
    NgramCounts hyp[kCiderMaxOrder];
    for (int n = 1; n <= kCiderMaxOrder; ++n) {
      hyp[n - 1] = internal::CountNgrams(pair.hypothesis, n);
    }
    double score = 0;
    for (const Tokens &ref_tokens : pair.references) {
      // Orders where neither side has an n-gram carry no evidence and are
      // left out of the mean.
      double sum = 0;
      int orders = 0;
      for (int n = 1; n <= kCiderMaxOrder; ++n) {
        NgramCounts ref = internal::CountNgrams(ref_tokens, n);
        if (hyp[n - 1].empty() && ref.empty()) continue;
        sum += Similarity(hyp[n - 1], ref, df[n - 1], log_n);
        ++orders;
      }
      score += orders == 0 ? 1.0 : sum / orders;
    }
    total += 10.0 * score / pair.references.size();
  }
  return total / pairs.size();
}

double ConceptCoverage(const std::vector<std::string> &concepts,
                       const Tokens &hypothesis) {
  if (concepts.empty()) throw DataError("concept list is empty");
  std::set<std::string> stems;
  for (const std::string &t : hypothesis) stems.insert(PorterStem(t));
  size_t covered = 0;
  for (const std::string &concept_text : concepts) {
    Tokens parts = Tokenize(concept_text);
    bool present = !parts.empty();
    for (const std::string &p : parts) {
      if (stems.count(PorterStem(p)) == 0) present = false;
    }
    if (present) ++covered;
  }
  return static_cast<double>(covered) / concepts.size();
}

}  // namespace verforge
