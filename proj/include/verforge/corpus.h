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

#ifndef VERFORGE_CORPUS_H_
#define VERFORGE_CORPUS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "verforge/wikidump.h"

namespace verforge {

struct Sentence {
  std::string text;
  size_t index = 0;
  // Span in the page plain text. Coreference substitution may make `text`
  // differ from that span.
  size_t byte_start = 0;
  size_t byte_end = 0;

  bool operator==(const Sentence &) const = default;
};

// Splits on [.?!] followed by whitespace and an uppercase letter, quote or
// digit. Newlines always end a sentence. No split happens after known
// abbreviations, after single-letter initials that continue a name, or inside
// parentheses and brackets.
std::vector<Sentence> SegmentSentences(std::string_view plain_text);

// Pluggable coreference stage. Implementations must keep the number and order
// of sentences.
class CoreferenceResolver {
 public:
  virtual ~CoreferenceResolver() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Sentence> Resolve(std::vector<Sentence> sentences,
                                        std::string_view page_title) const = 0;
};

class IdentityCoreference : public CoreferenceResolver {
 public:
  std::string name() const override { return "none"; }
  std::vector<Sentence> Resolve(std::vector<Sentence> sentences,
                                std::string_view) const override {
    return sentences;
  }
};

// Replaces a sentence-initial bare pronoun (It, He, She, They, or "This"
// followed by a verb) in sentences 2-5 with the page title when the previous
// sentence mentions the title.
class PronounCoreference : public CoreferenceResolver {
 public:
  std::string name() const override { return "heuristic"; }
  std::vector<Sentence> Resolve(std::vector<Sentence> sentences,
                                std::string_view page_title) const override;
};

// "heuristic" or "none"; throws a usage Error otherwise.
std::unique_ptr<CoreferenceResolver> MakeCoreference(std::string_view name);

// Per-page mention surface -> entity identifier (canonical page title).
class MentionMap {
 public:
  explicit MentionMap(std::string source_page = "");

  // First insertion of a surface wins. Returns false (and counts a collision
  // when the entity differs) if the surface is already present.
  bool Add(std::string_view mention, std::string_view entity,
           bool title_surface = false);

  // Entity for an exact surface, or nullptr.
  const std::string *Find(std::string_view mention) const;

  // Surfaces equal to `lowered` up to ASCII case, in insertion order.
  const std::vector<std::string> *FindLowered(std::string_view lowered) const;

  bool IsTitleSurface(std::string_view mention) const {
    return title_surfaces_.count(std::string(mention)) > 0;
  }

  const std::string &source_page() const { return source_page_; }
  const std::map<std::string, std::string> &entries() const { return entries_; }
  // Distinct surface lengths in bytes, longest first.
  const std::vector<size_t> &lengths() const { return lengths_; }
  size_t longest_mention() const { return lengths_.empty() ? 0 : lengths_[0]; }
  uint64_t collisions() const { return collisions_; }

 private:
  std::string source_page_;
  std::map<std::string, std::string> entries_;
  std::unordered_map<std::string, std::vector<std::string>> by_lower_;
  std::set<std::string> title_surfaces_;
  std::vector<size_t> lengths_;
  uint64_t collisions_ = 0;
};

// Self-entries for the title and its parenthetical-free form, then one entry
// per anchor in page order.
MentionMap BuildMentionMap(const CleanPage &page);

enum class ExampleKind { kDefinition, kRelation, kHyper };

ExampleKind KindForSize(size_t num_entities);
std::string_view KindName(ExampleKind kind);
// Throws a data Error for unknown names.
ExampleKind ParseKind(std::string_view name);

// One entity set -> sentence pair.
//
// `entities` holds the surfaces as they occur in the sentence (the lowercased
// title for the definition pair); `entity_ids` holds the parallel canonical
// page titles, which drive deduplication, blocklisting and retrieval.
struct Example {
  std::vector<std::string> entities;
  std::vector<std::string> entity_ids;
  std::string sentence;
  std::string source_page;
  size_t sentence_index = 0;

  ExampleKind kind() const { return KindForSize(entities.size()); }
  bool operator==(const Example &) const = default;
};

struct MentionMatch {
  size_t start = 0;
  size_t end = 0;
  std::string surface;  // matched text as it occurs
  std::string entity;
};

// Longest-match-first, left to right, non-overlapping scan at word
// boundaries. A surface matches exactly as written; it matches case-
// insensitively if it is a title surface or is in `seen` (matched exactly
// earlier in the page). Exact matches are added to `seen`.
std::vector<MentionMatch> FindMentions(std::string_view sentence,
                                       const MentionMap &map,
                                       std::set<std::string> *seen);

constexpr size_t kSentencesPerPage = 5;

// Emits the definition pair {lowercased title} -> sentence 0, plus one pair
// per sentence among the first five whose entity set has at least two
// members.
std::vector<Example> ExtractExamples(std::string_view page_title,
                                     const std::vector<Sentence> &sentences,
                                     const MentionMap &map);

// Segments the page, applies `coref` (may be null) and extracts.
std::vector<Example> ExtractExamples(const CleanPage &page,
                                     const MentionMap &map,
                                     const CoreferenceResolver *coref = nullptr);

// lowercase, sort, join with '\t'.
std::string NormalizeEntitySet(const std::vector<std::string> &entities);

struct Blocklists {
  std::set<std::string> pages;        // canonical titles
  std::set<std::string> entity_sets;  // normalized

  // Empty path means "no list". Throws an IO Error if a file cannot be read.
  static Blocklists Load(const std::string &page_path,
                         const std::string &entityset_path);
};

struct BlocklistTally {
  uint64_t page = 0;
  uint64_t entity_set = 0;
};

struct BlocklistResult {
  std::vector<Example> kept;
  BlocklistTally dropped;
};

// Drops examples from blocked pages and examples whose entity set (surfaces
// or identifiers) is blocked.
BlocklistResult ApplyBlocklists(std::vector<Example> examples,
                                const Blocklists &lists);

}  // namespace verforge

#endif  // VERFORGE_CORPUS_H_
