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
#include <climits>
#include <cmath>
#include <functional>

#include "verforge/error.h"
#include "verforge/metrics.h"

namespace verforge {

namespace {

Tokens Stems(const Tokens &tokens) {
  Tokens out;
  out.reserve(tokens.size());
  for (const std::string &t : tokens) out.push_back(PorterStem(t));
  return out;
}

Alignment GreedyAlign(const Tokens &hyp, const Tokens &ref) {
  Alignment a;
  std::vector<bool> used(ref.size(), false);
  long prev = -1;
  for (size_t i = 0; i < hyp.size(); ++i) {
    long pick = -1;
    if (prev >= 0 && static_cast<size_t>(prev + 1) < ref.size() &&
        !used[prev + 1] && ref[prev + 1] == hyp[i]) {
      pick = prev + 1;
    } else {
      for (size_t j = 0; j < ref.size(); ++j) {
        if (!used[j] && ref[j] == hyp[i]) {
          pick = static_cast<long>(j);
          break;
        }
      }
    }
    if (pick < 0) {
      prev = -1;
      continue;
    }
    used[pick] = true;
    ++a.matches;
    if (!(prev >= 0 && pick == prev + 1)) ++a.chunks;
    prev = pick;
  }
  return a;
}

}  // namespace

Alignment AlignUnigrams(const Tokens &hypothesis, const Tokens &reference) {
  const Tokens hyp = Stems(hypothesis);
  const Tokens ref = Stems(reference);

  // Only reference positions that can match something take a mask bit.
  std::vector<size_t> slot_pos;
  for (size_t j = 0; j < ref.size(); ++j) {
    if (std::find(hyp.begin(), hyp.end(), ref[j]) != hyp.end()) {
      slot_pos.push_back(j);
    }
  }
  const size_t slots = slot_pos.size();
  if (slots == 0) return {};
  const size_t n = hyp.size();
  if (slots >= 30 || n * ((size_t{1} << slots) * (slots + 1)) > kMeteorExactStates) {
    return GreedyAlign(hyp, ref);
  }

  std::vector<std::vector<size_t>> candidates(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t s = 0; s < slots; ++s) {
      if (ref[slot_pos[s]] == hyp[i]) candidates[i].push_back(s);
    }
  }

  // Score = matches * kWeight - chunks, maximized.
  constexpr int kWeight = 1 << 16;
  const size_t masks = size_t{1} << slots;
  std::vector<int> memo(n * masks * (slots + 1), INT_MIN);
  std::function<int(size_t, size_t, size_t)> best = [&](size_t i, size_t mask,
                                                        size_t prev) -> int {
    if (i == n) return 0;
    int &cell = memo[(i * masks + mask) * (slots + 1) + prev];
    if (cell != INT_MIN) return cell;
    int value = best(i + 1, mask, 0);
    for (size_t s : candidates[i]) {
      if (mask & (size_t{1} << s)) continue;
      bool continues = prev > 0 && slot_pos[prev - 1] + 1 == slot_pos[s];
      int v = kWeight - (continues ? 0 : 1) +
              best(i + 1, mask | (size_t{1} << s), s + 1);
      value = std::max(value, v);
    }
    cell = value;
    return value;
  };
  int v = best(0, 0, 0);
  Alignment a;
  if (v <= 0) return a;
  a.matches = static_cast<size_t>((v + kWeight - 1) / kWeight);
  a.chunks = a.matches * kWeight - static_cast<size_t>(v);
  return a;
}

double MeteorLitePair(const Tokens &hypothesis,
                      const std::vector<Tokens> &references) {
  double best = 0;
  if (hypothesis.empty()) return 0;
  for (const Tokens &ref : references) {
    if (ref.empty()) continue;
    Alignment a = AlignUnigrams(hypothesis, ref);
    if (a.matches == 0) continue;
    double m = static_cast<double>(a.matches);
    double p = m / hypothesis.size();
    double r = m / ref.size();
    double fmean = 10 * p * r / (r + 9 * p);
    double frag = static_cast<double>(a.chunks) / m;
    double penalty = 0.5 * frag * frag * frag;
    best = std::max(best, fmean * (1 - penalty));
  }
  return best;
}

double MeteorLite(std::span<const EvalPair> pairs) {
  if (pairs.empty()) throw DataError("METEOR needs at least one pair");
  double sum = 0;
  for (const EvalPair &pair : pairs) {
    sum += MeteorLitePair(pair.hypothesis, pair.references);
  }
  return sum / pairs.size();
}

}  // namespace verforge
