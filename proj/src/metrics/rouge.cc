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

#include "verforge/error.h"
#include "verforge/metrics.h"

namespace verforge {

namespace {

size_t Lcs(const Tokens &a, const Tokens &b) {
  std::vector<size_t> row(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = 0;
    for (size_t j = 1; j <= b.size(); ++j) {
      size_t up = row[j];
      row[j] = a[i - 1] == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

double RougeLPair(const Tokens &hypothesis,
                  const std::vector<Tokens> &references) {
  double best = 0;
  if (hypothesis.empty()) return 0;
  for (const Tokens &ref : references) {
    size_t lcs = Lcs(hypothesis, ref);
    if (lcs == 0) continue;
    double p = static_cast<double>(lcs) / hypothesis.size();
    double r = static_cast<double>(lcs) / ref.size();
    best = std::max(best, 2 * p * r / (p + r));
  }
  return best;
}

double RougeL(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw DataError("ROUGE-L needs at least one pair");
  double sum = 0;
  for (const EvalPair &pair : pairs) {
    sum += RougeLPair(pair.hypothesis, pair.references);
  }
  return sum / pairs.size();
}

}  // namespace verforge
