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

#ifndef VERFORGE_METRICS_NGRAM_H_
#define VERFORGE_METRICS_NGRAM_H_

#include <map>
#include <string>
#include <vector>

#include "verforge/metrics.h"

namespace verforge::internal {

// n-grams are keyed by their tokens joined with '\x1f'.
using NgramCounts = std::map<std::string, size_t>;

inline NgramCounts CountNgrams(const Tokens &tokens, int n) {
  NgramCounts counts;
  if (tokens.size() < static_cast<size_t>(n)) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key.push_back('\x1f');
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace verforge::internal

#endif  // VERFORGE_METRICS_NGRAM_H_
