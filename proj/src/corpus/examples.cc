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
#include <fstream>
#include <unordered_set>

#include "verforge/corpus.h"
#include "verforge/error.h"
#include "verforge/text.h"

namespace verforge {

ExampleKind KindForSize(size_t num_entities) {
  if (num_entities <= 1) return ExampleKind::kDefinition;
  if (num_entities == 2) return ExampleKind::kRelation;
  return ExampleKind::kHyper;
}

std::string_view KindName(ExampleKind kind) {
  switch (kind) {
    case ExampleKind::kDefinition:
      return "definition";
    case ExampleKind::kRelation:
      return "relation";
    case ExampleKind::kHyper:
      return "hyper";
  }
  return "definition";
}

ExampleKind ParseKind(std::string_view name) {
  if (name == "definition") return ExampleKind::kDefinition;
  if (name == "relation") return ExampleKind::kRelation;
  if (name == "hyper") return ExampleKind::kHyper;
  throw DataError("unknown example kind '" + std::string(name) + "'");
}

std::vector<Example> ExtractExamples(std::string_view page_title,
                                     const std::vector<Sentence> &sentences,
                                     const MentionMap &map) {
  std::vector<Example> examples;
  if (sentences.empty()) return examples;

  Example definition;
  definition.entities = {AsciiLower(page_title)};
  definition.entity_ids = {std::string(page_title)};
  definition.sentence = sentences[0].text;
  definition.source_page = std::string(page_title);
  definition.sentence_index = 0;
  examples.push_back(std::move(definition));

  std::set<std::string> seen;
  const size_t last = std::min(sentences.size(), kSentencesPerPage);
  for (size_t k = 0; k < last; ++k) {
    const Sentence &sentence = sentences[k];
    Example example;
    std::unordered_set<std::string> ids;
    for (MentionMatch &m : FindMentions(sentence.text, map, &seen)) {
      if (!ids.insert(m.entity).second) continue;
      example.entities.push_back(std::move(m.surface));
      example.entity_ids.push_back(std::move(m.entity));
    }
    // Single-entity pairs only come from the definition rule above.
    if (example.entities.size() < 2) continue;
    example.sentence = sentence.text;
    example.source_page = std::string(page_title);
    example.sentence_index = k;
    examples.push_back(std::move(example));
  }
  return examples;
}

std::vector<Example> ExtractExamples(const CleanPage &page,
                                     const MentionMap &map,
                                     const CoreferenceResolver *coref) {
  std::vector<Sentence> sentences = SegmentSentences(page.plain_text);
  if (sentences.size() > kSentencesPerPage) sentences.resize(kSentencesPerPage);
  if (coref != nullptr) sentences = coref->Resolve(std::move(sentences), page.title);
  return ExtractExamples(page.title, sentences, map);
}

std::string NormalizeEntitySet(const std::vector<std::string> &entities) {
  std::vector<std::string> lowered;
  lowered.reserve(entities.size());
  for (const std::string &e : entities) lowered.push_back(AsciiLower(Trim(e)));
  std::sort(lowered.begin(), lowered.end());
  std::string out;
  for (size_t i = 0; i < lowered.size(); ++i) {
    if (i > 0) out.push_back('\t');
    out += lowered[i];
  }
  return out;
}

namespace {

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read blocklist " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (TrimView(line).empty()) continue;
    lines.push_back(line);
  }
  if (in.bad()) throw IoError("error reading blocklist " + path);
  return lines;
}

}  // namespace

Blocklists Blocklists::Load(const std::string &page_path,
                            const std::string &entityset_path) {
  Blocklists lists;
  if (!page_path.empty()) {
    for (const std::string &line : ReadLines(page_path)) {
      std::string title = CanonicalizeTitle(line);
      if (!title.empty()) lists.pages.insert(title);
    }
  }
  if (!entityset_path.empty()) {
    for (const std::string &line : ReadLines(entityset_path)) {
      lists.entity_sets.insert(NormalizeEntitySet(SplitString(line, "\t")));
    }
  }
  return lists;
}

BlocklistResult ApplyBlocklists(std::vector<Example> examples,
                                const Blocklists &lists) {
  BlocklistResult result;
  result.kept.reserve(examples.size());
  for (Example &example : examples) {
    if (!lists.pages.empty() &&
        lists.pages.count(CanonicalizeTitle(example.source_page)) > 0) {
      ++result.dropped.page;
      continue;
    }
    if (!lists.entity_sets.empty() &&
        (lists.entity_sets.count(NormalizeEntitySet(example.entities)) > 0 ||
         lists.entity_sets.count(NormalizeEntitySet(example.entity_ids)) > 0)) {
      ++result.dropped.entity_set;
      continue;
    }
    result.kept.push_back(std::move(example));
  }
  return result;
}

}  // namespace verforge
