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
#include <set>
#include <tuple>

#include "verforge/retrieval.h"
#include "verforge/text.h"

namespace verforge {

namespace {

bool CanonicalLess(const Example &a, const Example &b) {
  return std::tie(a.source_page, a.sentence_index, a.entity_ids, a.entities,
                  a.sentence) < std::tie(b.source_page, b.sentence_index,
                                         b.entity_ids, b.entities, b.sentence);
}

const std::vector<ExampleId> kNoPostings;

}  // namespace

OverlapIndex OverlapIndex::Build(std::vector<Example> examples) {
  std::stable_sort(examples.begin(), examples.end(), CanonicalLess);
  OverlapIndex index;
  index.examples_ = std::move(examples);
  index.Rebuild();
  return index;
}

void OverlapIndex::Rebuild() {
  std::vector<std::pair<std::string_view, ExampleId>> pairs;
  for (size_t id = 0; id < examples_.size(); ++id) {
    for (const std::string &entity : examples_[id].entity_ids) {
      pairs.emplace_back(entity, static_cast<ExampleId>(id));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  entities_.clear();
  postings_.clear();
  entity_slot_.clear();
  for (const auto &[entity, id] : pairs) {
    if (entities_.empty() || entities_.back() != entity) {
      entities_.emplace_back(entity);
      postings_.emplace_back();
    }
    postings_.back().push_back(id);
  }
  entity_slot_.reserve(entities_.size());
  for (size_t i = 0; i < entities_.size(); ++i) {
    entity_slot_.emplace(entities_[i], static_cast<uint32_t>(i));
  }
}

const std::vector<ExampleId> &OverlapIndex::Postings(
    std::string_view entity) const {
  auto it = entity_slot_.find(std::string(entity));
  return it == entity_slot_.end() ? kNoPostings : postings_[it->second];
}

std::optional<ExampleId> OverlapIndex::Find(const Example &example) const {
  auto it = std::lower_bound(examples_.begin(), examples_.end(), example,
                             CanonicalLess);
  if (it == examples_.end() || !(*it == example)) return std::nullopt;
  return static_cast<ExampleId>(it - examples_.begin());
}

namespace {

bool Excluded(const OverlapIndex &index, ExampleId id,
              const QueryOptions &options) {
  const Example &candidate = index.example(id);
  if (options.exclude) {
    if (id == *options.exclude) return true;
    if (candidate.sentence == index.example(*options.exclude).sentence) {
      return true;
    }
  }
  if (options.provenance && candidate.sentence_index == options.provenance->second &&
      candidate.source_page == options.provenance->first) {
    return true;
  }
  return false;
}

bool RankBefore(const ScoredExample &a, const ScoredExample &b) {
  if (a.overlap != b.overlap) return a.overlap > b.overlap;
  return a.id < b.id;
}

// Overlap counts for every candidate sharing an entity with `query`.
std::vector<ScoredExample> ScoreAll(const OverlapIndex &index,
                                    const std::vector<std::string> &query,
                                    const QueryOptions &options) {
  std::vector<ExampleId> hits;
  for (const std::string &entity : query) {
    const std::vector<ExampleId> &postings = index.Postings(entity);
    hits.insert(hits.end(), postings.begin(), postings.end());
  }
  std::sort(hits.begin(), hits.end());
  std::vector<ScoredExample> scored;
  for (size_t i = 0; i < hits.size();) {
    size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    if (!Excluded(index, hits[i], options)) {
      scored.push_back({hits[i], static_cast<uint32_t>(j - i)});
    }
    i = j;
  }
  return scored;
}

std::vector<std::string> Dedupe(const std::vector<std::string> &query) {
  std::vector<std::string> unique = query;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  return unique;
}

uint32_t CountShared(const Example &example,
                     const std::vector<std::string> &sorted_query) {
  uint32_t shared = 0;
  std::vector<std::string> ids = example.entity_ids;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const std::string &id : ids) {
    if (std::binary_search(sorted_query.begin(), sorted_query.end(), id)) {
      ++shared;
    }
  }
  return shared;
}

}  // namespace

std::vector<ScoredExample> QueryOverlap(const OverlapIndex &index,
                                        const std::vector<std::string> &query,
                                        const QueryOptions &options) {
  if (options.k == 0 || query.empty()) return {};
  const std::vector<std::string> unique = Dedupe(query);
  std::vector<ScoredExample> scored = ScoreAll(index, unique, options);

  if (!options.greedy_coverage) {
    size_t k = std::min(options.k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + k, scored.end(),
                      RankBefore);
    scored.resize(k);
    return scored;
  }

  // Greedy coverage: each pick maximizes overlap with still-uncovered query
  // entities; once everything is covered, coverage restarts from the full
  // query.
  std::vector<ScoredExample> picked;
  std::vector<std::string> uncovered = unique;
  std::vector<bool> taken(scored.size(), false);
  while (picked.size() < options.k && picked.size() < scored.size()) {
    size_t best = scored.size();
    uint32_t best_gain = 0;
    for (size_t i = 0; i < scored.size(); ++i) {
      if (taken[i]) continue;
      uint32_t gain = CountShared(index.example(scored[i].id), uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == scored.size()) {
      if (uncovered.size() == unique.size()) break;
      uncovered = unique;
      continue;
    }
    taken[best] = true;
    picked.push_back(scored[best]);
    std::vector<std::string> ids = index.example(scored[best].id).entity_ids;
    std::sort(ids.begin(), ids.end());
    std::vector<std::string> rest;
    std::set_difference(uncovered.begin(), uncovered.end(), ids.begin(),
                        ids.end(), std::back_inserter(rest));
    uncovered = std::move(rest);
  }
  return picked;
}

int SampleH(Rng &rng) {
  return static_cast<int>(rng.UniformInt(0, kMaxRetrieved));
}

Augmentation Augment(const OverlapIndex &index, ExampleId id, Rng &rng,
                     bool greedy_coverage) {
  const Example &example = index.example(id);
  Augmentation out;
  out.result.h_used = SampleH(rng);
  QueryOptions options;
  options.k = static_cast<size_t>(out.result.h_used);
  options.exclude = id;
  options.provenance = std::make_pair(example.source_page, example.sentence_index);
  options.greedy_coverage = greedy_coverage;
  const size_t h = options.k;
  // Several examples can share one sentence; keep the first of each and widen
  // the query until h distinct sentences are found or matches run out.
  while (true) {
    std::vector<ScoredExample> ranked =
        QueryOverlap(index, example.entity_ids, options);
    out.result.ranked.clear();
    out.retrieved.clear();
    std::set<std::string_view> seen;
    for (const ScoredExample &s : ranked) {
      if (out.retrieved.size() == h) break;
      const std::string &sentence = index.example(s.id).sentence;
      if (!seen.insert(sentence).second) continue;
      out.result.ranked.push_back(s);
      out.retrieved.push_back(sentence);
    }
    if (out.retrieved.size() == h || ranked.size() < options.k) break;
    options.k *= 2;
  }
  return out;
}

std::vector<std::string> ParseEntityList(std::string_view text) {
  std::vector<std::string> out;
  for (const std::string &piece : SplitString(text, ";")) {
    std::string trimmed = Trim(piece);
    if (!trimmed.empty()) out.push_back(std::move(trimmed));
  }
  return out;
}

}  // namespace verforge
