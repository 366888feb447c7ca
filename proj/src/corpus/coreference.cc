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

#include <array>

#include "verforge/corpus.h"
#include "verforge/error.h"
#include "verforge/text.h"

namespace verforge {

namespace {

constexpr std::array<std::string_view, 4> kPronouns = {"It", "He", "She",
                                                       "They"};

// "This" only counts as a bare pronoun when a verb follows it.
constexpr std::array<std::string_view, 18> kThisFollowers = {
    "is",     "was",     "has",     "had",      "can",   "could",
    "may",    "might",   "will",    "would",    "includes", "included",
    "refers", "means",   "became",  "remains",  "allows", "makes"};

bool ContainsWordIgnoreCase(std::string_view text, std::string_view word) {
  if (word.empty() || text.size() < word.size()) return false;
  for (size_t i = 0; i + word.size() <= text.size(); ++i) {
    if (!EqualsIgnoreAsciiCase(text.substr(i, word.size()), word)) continue;
    bool left = i == 0 || !IsWordChar(text[i - 1]);
    size_t e = i + word.size();
    bool right = e == text.size() || !IsWordChar(text[e]);
    if (left && right) return true;
  }
  return false;
}

// Length of the bare pronoun at the start of `text`, or 0.
size_t LeadingPronoun(std::string_view text) {
  size_t n = 0;
  while (n < text.size() && IsWordChar(text[n])) ++n;
  if (n == text.size() || !IsAsciiSpace(text[n])) return 0;
  std::string_view word = text.substr(0, n);
  for (std::string_view p : kPronouns) {
    if (word == p) return n;
  }
  if (word != "This") return 0;
  size_t b = n;
  while (b < text.size() && IsAsciiSpace(text[b])) ++b;
  size_t e = b;
  while (e < text.size() && IsWordChar(text[e])) ++e;
  std::string_view next = text.substr(b, e - b);
  for (std::string_view f : kThisFollowers) {
    if (next == f) return n;
  }
  return 0;
}

}  // namespace

std::vector<Sentence> PronounCoreference::Resolve(
    std::vector<Sentence> sentences, std::string_view page_title) const {
  const std::string surface = StripParenthetical(page_title);
  if (surface.empty()) return sentences;
  const size_t last = std::min(sentences.size(), kSentencesPerPage);
  for (size_t k = 1; k < last; ++k) {
    const std::string &previous = sentences[k - 1].text;
    if (!ContainsWordIgnoreCase(previous, surface) &&
        !ContainsWordIgnoreCase(previous, page_title)) {
      continue;
    }
    std::string &text = sentences[k].text;
    size_t n = LeadingPronoun(text);
    if (n == 0) continue;
    text = surface + text.substr(n);
  }
  return sentences;
}

std::unique_ptr<CoreferenceResolver> MakeCoreference(std::string_view name) {
  if (name == "heuristic" || name.empty()) {
    return std::make_unique<PronounCoreference>();
  }
  if (name == "none" || name == "identity") {
    return std::make_unique<IdentityCoreference>();
  }
  throw UsageError("unknown coreference plugin '" + std::string(name) +
                   "' (expected heuristic or none)");
}

}  // namespace verforge
