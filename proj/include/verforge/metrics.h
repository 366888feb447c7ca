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

#ifndef VERFORGE_METRICS_H_
#define VERFORGE_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace verforge {

using Tokens = std::vector<std::string>;

// The one tokenizer behind every metric: ASCII-lowercase, split on
// whitespace, and every ASCII punctuation character becomes its own token.
Tokens Tokenize(std::string_view text);

// Porter (1980) stemmer, following the reference C implementation. Tokens
// that are not all lowercase ASCII letters are returned unchanged.
std::string PorterStem(std::string_view word);

struct EvalPair {
  Tokens hypothesis;
  std::vector<Tokens> references;  // at least one
};

EvalPair MakeEvalPair(std::string_view hypothesis,
                      const std::vector<std::string> &references);

constexpr int kBleuMaxOrder = 4;

// Corpus BLEU-4 in [0, 100]. Clipped n-gram counts are pooled over the
// corpus; the reference length of each pair is the closest reference length
// (shorter on ties); no smoothing. Orders for which the corpus has no
// hypothesis n-grams at all are left out of the geometric mean. Throws a data
// Error on an empty corpus.
double Bleu(std::span<const EvalPair> pairs);

// Best F1 (beta = 1) of the token LCS over the references of one pair.
double RougeLPair(const Tokens &hypothesis, const std::vector<Tokens> &references);
// Mean of RougeLPair over the corpus, in [0, 1].
double RougeL(std::span<const EvalPair> pairs);

struct Alignment {
  size_t matches = 0;
  size_t chunks = 0;
};

// Unigram alignment under exact-or-stem equality that maximizes matches and
// then minimizes chunks. Exact for small inputs; beyond kMeteorExactStates
// DP states a left-to-right greedy alignment is used (matches stay maximal,
// chunks may not be minimal).
Alignment AlignUnigrams(const Tokens &hypothesis, const Tokens &reference);

constexpr size_t kMeteorExactStates = size_t{1} << 22;

// METEOR without synonym or paraphrase tables:
//   Fmean = 10PR / (R + 9P), penalty = 0.5 (chunks / matches)^3,
//   score = Fmean (1 - penalty); best over references.
double MeteorLitePair(const Tokens &hypothesis,
                      const std::vector<Tokens> &references);
double MeteorLite(std::span<const EvalPair> pairs);

// CIDEr in [0, 10]: TF-IDF n-gram vectors (n = 1..4) with
// idf = log(N / max(1, df)), df counted over the reference sets of this
// corpus. Cosine similarity per reference, averaged over references and
// orders, times 10. Where a cosine is undefined (a zero vector, e.g. a
// single-pair corpus or sentences shorter than n) it is 1 when the
// hypothesis and reference n-gram counts are identical and 0 otherwise.
double Cider(std::span<const EvalPair> pairs);

// Fraction of concepts whose stemmed tokens all occur among the stemmed
// hypothesis tokens. Throws a data Error on an empty concept list.
double ConceptCoverage(const std::vector<std::string> &concepts,
                       const Tokens &hypothesis);

struct ScoreReport {
  std::optional<double> bleu;
  std::optional<double> rouge_l;
  std::optional<double> meteor_lite;
  std::optional<double> cider;
  std::optional<double> coverage;
  size_t n_pairs = 0;
};

// Metric names accepted by Evaluate.
inline constexpr std::string_view kMetricNames[] = {
    "bleu", "rouge_l", "meteor_lite", "cider", "coverage"};

// Scores the requested metrics. `concepts` (one list per pair) is required
// only for "coverage", whose corpus value is the mean over pairs. Unknown
// metric names and missing concepts are usage errors.
ScoreReport Evaluate(std::span<const EvalPair> pairs,
                     const std::vector<std::string> &metrics,
                     const std::vector<std::vector<std::string>> *concepts = nullptr);

// {"n_pairs": ..., "bleu": ..., ...}; unrequested metrics are omitted.
std::string ScoreReportToJson(const ScoreReport &report);

}  // namespace verforge

#endif  // VERFORGE_METRICS_H_
