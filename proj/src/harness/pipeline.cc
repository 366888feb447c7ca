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

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "harness/parallel.h"
#include "verforge/error.h"
#include "verforge/harness.h"
#include "verforge/jsonl.h"
#include "verforge/rng.h"

namespace verforge {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr size_t kPagesPerWorkerBatch = 64;

struct PageWork {
  RawPage raw;
  CleanPage clean;
  std::vector<Example> examples;
  uint64_t collisions = 0;
};

// Runs `fn` and prefixes any Error with the stage name.
template <typename Fn>
auto InStage(std::string_view stage, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(e.kind(), std::string(stage) + ": " + e.what());
  } catch (const std::exception &e) {
    throw Error(ErrorKind::kData, std::string(stage) + ": " + e.what());
  }
}

std::string FileName(const std::string &path) {
  return path.empty() ? std::string() : fs::path(path).filename().string();
}

}  // namespace

ExtractionOutput ExtractFromDump(std::istream &dump,
                                 const CoreferenceResolver &coref, size_t jobs,
                                 bool keep_pages) {
  ExtractionOutput out;
  PageStream stream(dump);
  jobs = std::max<size_t>(1, jobs);
  const size_t batch_size = kPagesPerWorkerBatch * jobs;
  std::vector<PageWork> batch;
  bool more = true;
  while (more) {
    batch.clear();
    RawPage raw;
    while (batch.size() < batch_size && (more = stream.Next(&raw))) {
      batch.push_back(PageWork{std::move(raw), {}, {}, 0});
      raw = RawPage();
    }
    internal::ParallelFor(batch.size(), jobs, [&](size_t i) {
      PageWork &w = batch[i];
      w.clean = CleanRawPage(w.raw);
      w.raw.markup.clear();
      MentionMap map = BuildMentionMap(w.clean);
      w.collisions = map.collisions();
      w.examples = ExtractExamples(w.clean, map, &coref);
    });
    // Ordered merge, single owner of the tallies.
    for (PageWork &w : batch) {
      ++out.counts.pages_kept;
      for (const StripWarning &warning : w.clean.warnings) {
        ++out.counts.strip_warnings[warning.kind];
      }
      out.counts.mention_collisions += w.collisions;
      out.counts.examples_extracted += w.examples.size();
      for (Example &e : w.examples) out.examples.push_back(std::move(e));
      if (keep_pages) out.pages.push_back(std::move(w.clean));
    }
  }
  out.counts.pages_streamed = stream.pages_seen();
  out.counts.pages_skipped = stream.skipped();
  return out;
}

EncodeResult EncodeExamples(const std::vector<Example> &examples,
                            const OverlapIndex *index, uint64_t seed,
                            bool greedy_coverage, size_t jobs) {
  std::vector<std::optional<EncodedRecord>> slots(examples.size());
  std::vector<int> h_used(examples.size(), -1);
  internal::ParallelFor(examples.size(), jobs, [&](size_t i) {
    const Example &example = examples[i];
    std::vector<std::string> retrieved;
    std::optional<int> h;
    if (index != nullptr) {
      std::optional<ExampleId> id = index->Find(example);
      if (!id) throw DataError("example missing from index: " + example.sentence);
      Rng rng(DeriveSeed(seed, *id));
      Augmentation aug = Augment(*index, *id, rng, greedy_coverage);
      retrieved = std::move(aug.retrieved);
      h = aug.result.h_used;
    }
    try {
      slots[i] = MakeRecord(example, retrieved, h);
      if (h) h_used[i] = *h;
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kData) throw;
    }
  });
  EncodeResult result;
  for (size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      ++result.rejected;
      continue;
    }
    result.records.push_back(std::move(*slots[i]));
    if (h_used[i] >= 0) ++result.h_used_histogram[h_used[i]];
  }
  return result;
}

std::string ManifestToJson(const PipelineManifest &m,
                           const PipelineConfig &config) {
  ordered_json j;
  j["index_format_version"] = kIndexFormatVersion;
  j["config"] = {
      {"dump", FileName(config.dump_path)},
      {"page_blocklist", FileName(config.page_blocklist)},
      {"entityset_blocklist", FileName(config.entityset_blocklist)},
      {"coref_plugin", config.coref_plugin},
      {"retrieval", config.retrieval ? "on" : "off"},
      {"retrieval_mode", config.greedy_coverage ? "greedy" : "topk"},
      {"seed", config.seed},
  };
  j["pages"] = {
      {"streamed", m.pages_streamed},
      {"kept", m.pages_kept},
      {"skipped",
       {{"redirect", m.pages_skipped.redirect},
        {"non_article", m.pages_skipped.non_article},
        {"invalid", m.pages_skipped.invalid},
        {"total", m.pages_skipped.total()}}},
  };
  ordered_json warnings = ordered_json::object();
  for (const auto &[kind, count] : m.strip_warnings) warnings[kind] = count;
  j["strip_warnings"] = std::move(warnings);
  j["mention_collisions"] = m.mention_collisions;
  j["examples"] = {
      {"extracted", m.examples_extracted},
      {"emitted", m.examples_emitted},
      {"filtered",
       {{"page_blocklist", m.examples_filtered.page},
        {"entityset_blocklist", m.examples_filtered.entity_set}}},
  };
  ordered_json records = {{"written", m.records_written},
                          {"rejected", m.records_rejected}};
  if (config.retrieval) {
    records["h_used_histogram"] = m.h_used_histogram;
  } else {
    records["h_used_histogram"] = nullptr;
  }
  j["records"] = std::move(records);
  j["stats"] = ordered_json::parse(CorpusStatsToJson(m.stats));
  return j.dump(2) + "\n";
}

PipelineManifest RunPipeline(const PipelineConfig &config) {
  std::unique_ptr<CoreferenceResolver> coref =
      InStage("config", [&] { return MakeCoreference(config.coref_plugin); });
  const fs::path out_dir(config.out_dir);
  InStage("config", [&] {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
      throw IoError("cannot create out_dir '" + config.out_dir +
                    "': " + ec.message());
    }
  });

  ExtractionOutput extracted = InStage("wikidump", [&] {
    std::ifstream dump(config.dump_path, std::ios::binary);
    if (!dump) throw IoError("cannot read dump '" + config.dump_path + "'");
    return ExtractFromDump(dump, *coref, config.jobs);
  });
  PipelineManifest manifest = std::move(extracted.counts);

  std::vector<Example> emitted = InStage("corpus", [&] {
    Blocklists lists =
        Blocklists::Load(config.page_blocklist, config.entityset_blocklist);
    BlocklistResult r = ApplyBlocklists(std::move(extracted.examples), lists);
    manifest.examples_filtered = r.dropped;
    return std::move(r.kept);
  });
  manifest.examples_emitted = emitted.size();
  manifest.stats = ComputeCorpusStats(emitted);

  std::optional<OverlapIndex> index;
  if (config.retrieval) {
    InStage("retrieval", [&] {
      index = OverlapIndex::Build(emitted);
      index->Save((out_dir / kIndexFile).string());
    });
  }

  EncodeResult encoded = InStage("encoding", [&] {
    return EncodeExamples(emitted, index ? &*index : nullptr, config.seed,
                          config.greedy_coverage, config.jobs);
  });
  manifest.records_written = encoded.records.size();
  manifest.records_rejected = encoded.rejected;
  manifest.h_used_histogram = encoded.h_used_histogram;

  InStage("output", [&] {
    WriteExamples((out_dir / kCorpusFile).string(), emitted);
    WriteRecords((out_dir / kRecordsFile).string(), encoded.records);
    WriteFileAtomically((out_dir / kStatsFile).string(),
                        CorpusStatsToJson(manifest.stats) + "\n");
    WriteFileAtomically((out_dir / kManifestFile).string(),
                        ManifestToJson(manifest, config));
  });
  return manifest;
}

}  // namespace verforge
