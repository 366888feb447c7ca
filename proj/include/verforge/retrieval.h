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

#ifndef VERFORGE_RETRIEVAL_H_
#define VERFORGE_RETRIEVAL_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "verforge/corpus.h"
#include "verforge/rng.h"

namespace verforge {

using ExampleId = uint32_t;

constexpr uint32_t kIndexFormatVersion = 1;
constexpr int kMaxRetrieved = 10;

struct ScoredExample {
  ExampleId id = 0;
  uint32_t overlap = 0;

  bool operator==(const ScoredExample &) const = default;
};

struct RetrievalResult {
  std::vector<ScoredExample> ranked;
  int h_used = 0;
};

// Inverted index from entity identifier to the examples mentioning it.
//
// Example ids are positions in a canonical ordering of the examples (by source
// page, sentence index, entity set, sentence), so the index is the same for
// any permutation of the input. Immutable after Build.
class OverlapIndex {
 public:
  OverlapIndex() = default;

  static OverlapIndex Build(std::vector<Example> examples);

  size_t size() const { return examples_.size(); }
  size_t num_entities() const { return entities_.size(); }
  const Example &example(ExampleId id) const { return examples_.at(id); }
  const std::vector<Example> &examples() const { return examples_; }
  const std::vector<std::string> &entities() const { return entities_; }

  // Sorted, duplicate-free ids for an entity identifier; empty if unknown.
  const std::vector<ExampleId> &Postings(std::string_view entity) const;

  // Id of an example equal to `example`, if indexed.
  std::optional<ExampleId> Find(const Example &example) const;

  // Single-file binary format: header (magic, version, counts), entity
  // dictionary, postings, example store. Throws IO/data Errors.
  void Save(const std::string &path) const;
  static OverlapIndex Load(const std::string &path);

  bool operator==(const OverlapIndex &other) const {
    return examples_ == other.examples_ && entities_ == other.entities_ &&
           postings_ == other.postings_;
  }

 private:
  void Rebuild();

  std::vector<Example> examples_;
  std::vector<std::string> entities_;  // sorted
  std::vector<std::vector<ExampleId>> postings_;
  std::unordered_map<std::string, uint32_t> entity_slot_;
};

struct QueryOptions {
  size_t k = kMaxRetrieved;
  // Never returned, together with every example whose sentence text equals
  // the excluded one.
  std::optional<ExampleId> exclude;
  // (source_page, sentence_index) of the query's own sentence.
  std::optional<std::pair<std::string, size_t>> provenance;
  // Re-score against entities not yet covered by earlier picks instead of
  // ranking against the fixed query.
  bool greedy_coverage = false;
};

// Up to k ids with overlap >= 1, ranked by (overlap desc, id asc). `overlap` is
// |entities(id) ∩ query| in both modes.
std::vector<ScoredExample> QueryOverlap(const OverlapIndex &index,
                                        const std::vector<std::string> &query,
                                        const QueryOptions &options);

// Uniform integer on [0, kMaxRetrieved].
int SampleH(Rng &rng);

struct Augmentation {
  RetrievalResult result;
  std::vector<std::string> retrieved;  // sentences in rank order
};

// Draws h, then retrieves up to h distinct sentences overlapping the example's
// entities, excluding the example itself.
Augmentation Augment(const OverlapIndex &index, ExampleId id, Rng &rng,
                     bool greedy_coverage = false);

// Splits "a; b ;c" on ';' and trims each piece; empty pieces are dropped.
std::vector<std::string> ParseEntityList(std::string_view text);

}  // namespace verforge

#endif  // VERFORGE_RETRIEVAL_H_
