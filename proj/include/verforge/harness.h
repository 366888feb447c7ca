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

#ifndef VERFORGE_HARNESS_H_
#define VERFORGE_HARNESS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "verforge/corpus.h"
#include "verforge/encoding.h"
#include "verforge/retrieval.h"

namespace verforge {

struct CorpusStats {
  std::map<size_t, uint64_t> histogram;  // |E| -> count
  uint64_t total = 0;
  uint64_t definition = 0;
  uint64_t relation = 0;
  uint64_t hyper = 0;

  bool operator==(const CorpusStats &) const = default;
};

CorpusStats ComputeCorpusStats(std::span<const Example> examples);
std::string CorpusStatsToJson(const CorpusStats &stats);
// Text bar chart, one line per entity-set size.
std::string RenderHistogram(const CorpusStats &stats);

// How many examples a low-resource run keeps.
class SampleSpec {
 public:
  static SampleSpec Fraction(double fraction);
  static SampleSpec Count(size_t count);
  // "10%", "0.1" (fraction) or "500" (count). Throws a usage Error.
  static SampleSpec Parse(std::string_view text);

  // Resolves against a corpus size; throws a data Error if the spec asks for
  // more than the corpus holds or is out of range.
  size_t Resolve(size_t corpus_size) const;

 private:
  std::optional<double> fraction_;
  size_t count_ = 0;
};

// The regimes used in the low-resource experiments.
inline constexpr std::array<std::string_view, 4> kLowResourcePresets = {
    "10%", "50", "500", "5000"};

// Indices of a uniform sample without replacement, ascending.
std::vector<size_t> SampleIndices(size_t corpus_size, size_t count,
                                  uint64_t seed);

// Selected examples in their original order.
std::vector<Example> SampleLowResource(std::span<const Example> examples,
                                       const SampleSpec &spec, uint64_t seed);

struct PipelineConfig {
  std::string dump_path;
  std::string page_blocklist;
  std::string entityset_blocklist;
  std::string coref_plugin = "heuristic";
  bool retrieval = false;
  bool greedy_coverage = false;
  uint64_t seed = 0;
  std::string out_dir;
  size_t jobs = 1;

  // Flat "key = value" file; '#' starts a comment. Relative paths are taken
  // relative to the config file's directory. Throws usage/IO Errors.
  static PipelineConfig Load(const std::string &path);
  static PipelineConfig Parse(std::string_view text, const std::string &base_dir);
};

struct PipelineManifest {
  uint64_t pages_streamed = 0;
  uint64_t pages_kept = 0;
  SkipTally pages_skipped;
  std::map<std::string, uint64_t> strip_warnings;
  uint64_t mention_collisions = 0;
  uint64_t examples_extracted = 0;
  uint64_t examples_emitted = 0;
  BlocklistTally examples_filtered;
  uint64_t records_written = 0;
  uint64_t records_rejected = 0;
  std::array<uint64_t, kMaxRetrieved + 1> h_used_histogram{};
  CorpusStats stats;
};

std::string ManifestToJson(const PipelineManifest &manifest,
                           const PipelineConfig &config);

// Output file names inside out_dir.
inline constexpr std::string_view kCorpusFile = "corpus.jsonl";
inline constexpr std::string_view kRecordsFile = "records.jsonl";
inline constexpr std::string_view kStatsFile = "stats.json";
inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kIndexFile = "index.bin";

// Pages of a dump turned into examples, in dump order.
struct ExtractionOutput {
  std::vector<CleanPage> pages;  // only filled when keep_pages is set
  std::vector<Example> examples;
  PipelineManifest counts;
};

// wikidump -> corpus stage, parallel over pages with an ordered merge.
ExtractionOutput ExtractFromDump(std::istream &dump,
                                 const CoreferenceResolver &coref,
                                 size_t jobs, bool keep_pages = false);

// Runs wikidump -> corpus -> blocklists -> (retrieval) -> encoding and writes
// corpus.jsonl, records.jsonl, stats.json, manifest.json (and index.bin with
// retrieval on) into out_dir. Outputs go through ".partial" files; on error
// the message names the failing stage.
PipelineManifest RunPipeline(const PipelineConfig &config);

struct EncodeResult {
  std::vector<EncodedRecord> records;
  uint64_t rejected = 0;
  std::array<uint64_t, kMaxRetrieved + 1> h_used_histogram{};
};

// Encodes examples in order. With an index, each example is augmented with
// its own generator seeded by DeriveSeed(seed, id), id being the example's
// index id, so the output does not depend on `jobs`. Examples whose text
// cannot be encoded are counted in `rejected`.
EncodeResult EncodeExamples(const std::vector<Example> &examples,
                            const OverlapIndex *index, uint64_t seed,
                            bool greedy_coverage, size_t jobs);

}  // namespace verforge

#endif  // VERFORGE_HARNESS_H_
