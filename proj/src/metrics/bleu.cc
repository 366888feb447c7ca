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
#include <cstdlib>

#include "ngram.h"
#include "verforge/error.h"
#include "verforge/metrics.h"

namespace verforge {

double Bleu(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw DataError("BLEU needs at least one hypothesis");
  double correct[kBleuMaxOrder] = {};
  double total[kBleuMaxOrder] = {};
  double hyp_len = 0;
  double ref_len = 0;

  for (const EvalPair &pair : pairs) {
    if (pair.references.empty()) throw DataError("evaluation pair has no reference");
    const size_t c = pair.hypothesis.size();
    hyp_len += static_cast<double>(c);
    size_t best = pair.references[0].size();
    for (const Tokens &ref : pair.references) {
      size_t r = ref.size();
      size_t d = r > c ? r - c : c - r;
      size_t bd = best > c ? best - c : c - best;
      if (d < bd || (d == bd && r < best)) best = r;
    }
    ref_len += static_cast<double>(best);

    for (int n = 1; n <= kBleuMaxOrder; ++n) {
      internal::NgramCounts hyp = internal::CountNgrams(pair.hypothesis, n);
      internal::NgramCounts max_ref;
      for (const Tokens &ref : pair.references) {
        for (const auto &[gram, count] : internal::CountNgrams(ref, n)) {
          size_t &slot = max_ref[gram];
          slot = std::max(slot, count);
        }
      }
      for (const auto &[gram, count] : hyp) {
        total[n - 1] += static_cast<double>(count);
        auto it = max_ref.find(gram);
        if (it != max_ref.end()) {
          correct[n - 1] += static_cast<double>(std::min(count, it->second));
        }
      }
    }
  }

  double log_sum = 0;
  int orders = 0;
  for (int n = 0; n < kBleuMaxOrder; ++n) {
    if (total[n] == 0) continue;
    if (correct[n] == 0) return 0.0;
    log_sum += std::log(correct[n] / total[n]);
    ++orders;
  }
  if (orders == 0 || hyp_len == 0) return 0.0;
  double bp = hyp_len < ref_len ? std::exp(1.0 - ref_len / hyp_len) : 1.0;
  return 100.0 * bp * std::exp(log_sum / orders);
}

}  // namespace verforge
