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

// ver-forge: command-line front end over the verforge library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "verforge/corpus.h"
#include "verforge/encoding.h"
#include "verforge/error.h"
#include "verforge/harness.h"
#include "verforge/jsonl.h"
#include "verforge/metrics.h"
#include "verforge/retrieval.h"
#include "verforge/rng.h"
#include "verforge/text.h"
#include "verforge/wikidump.h"

namespace verforge {
namespace {

using nlohmann::ordered_json;

const std::string kVersion =
    "ver-forge 0.1.0 (index format v" + std::to_string(kIndexFormatVersion) + ")";

size_t DefaultJobs() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Writes to `path`, or stdout when path is empty or "-".
void Emit(const std::string &path, const std::string &contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    std::cout.flush();
    if (!std::cout) throw IoError("error writing stdout");
    return;
  }
  WriteFileAtomically(path, contents);
}

std::string ExamplesToJsonl(const std::vector<Example> &examples) {
  std::string out;
  for (const Example &e : examples) {
    out += ExampleToJsonLine(e);
    out += '\n';
  }
  return out;
}

std::vector<std::string> ReadTextLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return lines;
}

std::vector<std::string> StringList(const ordered_json &j, const char *field,
                                    size_t line) {
  std::vector<std::string> out;
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
    return out;
  }
  if (!j.is_array()) {
    throw DataError("line " + std::to_string(line) + ": '" + field +
                    "' must be a string or a list of strings");
  }
  for (const ordered_json &v : j) {
    if (!v.is_string()) {
      throw DataError("line " + std::to_string(line) + ": '" + field +
                      "' must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

struct ReferenceLine {
  std::vector<std::string> references;
  std::vector<std::string> concepts;
};

// Accepts {"references": [...]} or {"reference": "..."}, an encoded record
// ({"target": ...}) or a corpus example ({"sentence": ...}). Concepts come
// from "concepts" or, failing that, "entities".
std::vector<ReferenceLine> ReadReferences(const std::string &path) {
  std::vector<ReferenceLine> out;
  ForEachLine(path, [&](std::string_view text, size_t line) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw DataError("line " + std::to_string(line) + ": not a JSON object");
    }
    ReferenceLine ref;
    for (const char *field : {"references", "reference", "target", "sentence"}) {
      if (j.contains(field)) {
        ref.references = StringList(j[field], field, line);
        break;
      }
    }
    if (ref.references.empty()) {
      throw DataError("line " + std::to_string(line) + ": no references");
    }
    for (const char *field : {"concepts", "entities"}) {
      if (j.contains(field)) {
        ref.concepts = StringList(j[field], field, line);
        break;
      }
    }
    out.push_back(std::move(ref));
  });
  return out;
}

ordered_json ExampleJson(const OverlapIndex &index, ExampleId id) {
  const Example &e = index.example(id);
  return {{"entities", e.entities},
          {"sentence", e.sentence},
          {"source_page", e.source_page},
          {"sentence_index", e.sentence_index}};
}

int Run(int argc, char **argv) {
  CLI::App app{"Entity-set to sentence corpus toolkit", "ver-forge"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // build
  std::string dump_path = "-";
  std::string corpus_out;
  std::string pages_out;
  std::string index_out;
  std::string coref_name = "heuristic";
  std::string page_blocklist;
  std::string entityset_blocklist;
  size_t jobs = DefaultJobs();
  CLI::App *build = app.add_subcommand(
      "build", "Stream a dump and extract entity-set/sentence examples");
  build->add_option("--dump", dump_path, "XML dump path, '-' for stdin");
  build->add_option("--out", corpus_out, "corpus JSONL (default stdout)");
  build->add_option("--pages-out", pages_out, "also write cleaned pages JSONL");
  build->add_option("--index", index_out, "also build and save an index");
  build->add_option("--coref", coref_name, "coreference plugin: heuristic|none");
  build->add_option("--page-blocklist", page_blocklist, "titles to drop");
  build->add_option("--entityset-blocklist", entityset_blocklist,
                    "tab-separated entity sets to drop");
  build->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // stats
  std::string corpus_in;
  std::string stats_format = "json";
  CLI::App *stats = app.add_subcommand("stats", "Entity-set size statistics");
  stats->add_option("--corpus", corpus_in, "corpus JSONL")->required();
  stats->add_option("--format", stats_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  // retrieve
  std::string index_in;
  std::string entities_arg;
  size_t k = kMaxRetrieved;
  int64_t exclude = -1;
  bool greedy = false;
  CLI::App *retrieve =
      app.add_subcommand("retrieve", "Rank indexed examples by entity overlap");
  retrieve->add_option("--index", index_in, "index file")->required();
  retrieve->add_option("--entities", entities_arg, "';'-separated entities")
      ->required();
  retrieve->add_option("--k", k, "results to return");
  retrieve->add_option("--exclude", exclude, "example id to leave out");
  retrieve->add_flag("--greedy", greedy, "greedy coverage instead of top-k");

  // encode
  std::string records_out;
  uint64_t seed = 0;
  CLI::App *encode =
      app.add_subcommand("encode", "Turn a corpus into seq2seq records");
  encode->add_option("--corpus", corpus_in, "corpus JSONL")->required();
  encode->add_option("--index", index_in, "augment with retrieval from this index");
  encode->add_option("--out", records_out, "records JSONL (default stdout)");
  encode->add_flag("--greedy", greedy, "greedy coverage retrieval");
  encode->add_option("--seed", seed, "random seed");
  encode->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  // sample
  std::string sample_spec;
  std::string sample_out;
  CLI::App *sample =
      app.add_subcommand("sample", "Uniform low-resource subsample of a corpus");
  sample->add_option("--corpus", corpus_in, "corpus JSONL")->required();
  sample->add_option("--size", sample_spec,
                     "count (500), fraction (0.1) or percent (10%)")
      ->required();
  sample->add_option("--out", sample_out, "output JSONL (default stdout)");
  sample->add_option("--seed", seed, "random seed");

  // eval
  std::string hyp_path;
  std::string ref_path;
  std::string metrics_arg = "bleu,rouge_l,meteor_lite,cider";
  CLI::App *eval = app.add_subcommand("eval", "Score hypotheses against references");
  eval->add_option("--hyp", hyp_path, "one hypothesis per line")->required();
  eval->add_option("--ref", ref_path, "references JSONL, one line per hypothesis")
      ->required();
  eval->add_option("--metrics", metrics_arg,
                   "comma list of bleu,rouge_l,meteor_lite,cider,coverage");

  // pipeline
  std::string config_path;
  int64_t pipeline_jobs = 0;
  CLI::App *pipeline =
      app.add_subcommand("pipeline", "Run the full pipeline from a config file");
  pipeline->add_option("--config", config_path, "config file")->required();
  pipeline->add_option("--jobs", pipeline_jobs,
                       "worker threads (overrides the config)")
      ->check(CLI::PositiveNumber);

  for (CLI::App *sub : app.get_subcommands({})) sub->fallthrough(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "ver-forge: " << e.what() << "\n";
    std::cerr << app.help();
    return 1;
  }

  if (*build) {
    std::unique_ptr<CoreferenceResolver> coref = MakeCoreference(coref_name);
    Blocklists lists = Blocklists::Load(page_blocklist, entityset_blocklist);
    ExtractionOutput extracted;
    if (dump_path == "-") {
      extracted = ExtractFromDump(std::cin, *coref, jobs, !pages_out.empty());
    } else {
      std::ifstream in(dump_path, std::ios::binary);
      if (!in) throw IoError("cannot read dump '" + dump_path + "'");
      extracted = ExtractFromDump(in, *coref, jobs, !pages_out.empty());
    }
    BlocklistResult kept = ApplyBlocklists(std::move(extracted.examples), lists);
    if (!pages_out.empty()) {
      std::string text;
      for (const CleanPage &page : extracted.pages) {
        text += CleanPageToJsonLine(page);
        text += '\n';
      }
      WriteFileAtomically(pages_out, text);
    }
    if (!index_out.empty()) OverlapIndex::Build(kept.kept).Save(index_out);
    Emit(corpus_out, ExamplesToJsonl(kept.kept));
    const PipelineManifest &c = extracted.counts;
    std::cerr << "pages " << c.pages_streamed << " streamed, " << c.pages_kept
              << " kept; examples " << c.examples_extracted << " extracted, "
              << kept.kept.size() << " emitted\n";
    return 0;
  }

  if (*stats) {
    CorpusStats s = ComputeCorpusStats(ReadExamples(corpus_in));
    std::cout << (stats_format == "json" ? CorpusStatsToJson(s) + "\n"
                                         : RenderHistogram(s));
    return 0;
  }

  if (*retrieve) {
    OverlapIndex index = OverlapIndex::Load(index_in);
    std::vector<std::string> query = ParseEntityList(entities_arg);
    if (query.empty()) throw UsageError("--entities is empty");
    for (std::string &q : query) q = CanonicalizeTitle(q);
    QueryOptions options;
    options.k = k;
    options.greedy_coverage = greedy;
    if (exclude >= 0) {
      if (static_cast<uint64_t>(exclude) >= index.size()) {
        throw UsageError("--exclude " + std::to_string(exclude) +
                         " is not an example id");
      }
      options.exclude = static_cast<ExampleId>(exclude);
    }
    ordered_json results = ordered_json::array();
    for (const ScoredExample &s : QueryOverlap(index, query, options)) {
      ordered_json item = {{"id", s.id}, {"overlap", s.overlap}};
      item.update(ExampleJson(index, s.id));
      results.push_back(std::move(item));
    }
    ordered_json out = {{"query", query}, {"k", k}, {"results", results}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (*encode) {
    std::vector<Example> examples = ReadExamples(corpus_in);
    std::optional<OverlapIndex> index;
    if (!index_in.empty()) index = OverlapIndex::Load(index_in);
    EncodeResult r = EncodeExamples(examples, index ? &*index : nullptr, seed,
                                    greedy, jobs);
    std::string text;
    for (const EncodedRecord &record : r.records) {
      text += RecordToJsonLine(record);
      text += '\n';
    }
    Emit(records_out, text);
    if (r.rejected > 0) {
      std::cerr << "rejected " << r.rejected << " unencodable examples\n";
    }
    return 0;
  }

  if (*sample) {
    std::vector<Example> examples = ReadExamples(corpus_in);
    SampleSpec spec = SampleSpec::Parse(sample_spec);
    Emit(sample_out, ExamplesToJsonl(SampleLowResource(examples, spec, seed)));
    return 0;
  }

  if (*eval) {
    std::vector<std::string> metrics;
    for (const std::string &m : SplitString(metrics_arg, ",")) {
      std::string name = Trim(m);
      if (!name.empty()) metrics.push_back(name);
    }
    if (metrics.empty()) throw UsageError("--metrics is empty");
    for (const std::string &m : metrics) {
      if (std::find(std::begin(kMetricNames), std::end(kMetricNames), m) ==
          std::end(kMetricNames)) {
        throw UsageError("unknown metric '" + m + "'");
      }
    }
    std::vector<std::string> hyps = ReadTextLines(hyp_path);
    std::vector<ReferenceLine> refs = ReadReferences(ref_path);
    if (hyps.size() != refs.size()) {
      throw DataError(std::to_string(hyps.size()) + " hypotheses but " +
                      std::to_string(refs.size()) + " reference lines");
    }
    if (hyps.empty()) throw DataError("no hypotheses");
    std::vector<EvalPair> pairs;
    std::vector<std::vector<std::string>> concepts;
    for (size_t i = 0; i < hyps.size(); ++i) {
      pairs.push_back(MakeEvalPair(hyps[i], refs[i].references));
      concepts.push_back(refs[i].concepts);
    }
    ScoreReport report = Evaluate(pairs, metrics, &concepts);
    std::cout << ScoreReportToJson(report) << "\n";
    return 0;
  }

  if (*pipeline) {
    PipelineConfig config = PipelineConfig::Load(config_path);
    if (pipeline_jobs > 0) config.jobs = static_cast<size_t>(pipeline_jobs);
    PipelineManifest m = RunPipeline(config);
    std::cerr << "wrote " << m.examples_emitted << " examples and "
              << m.records_written << " records to " << config.out_dir << "\n";
    return 0;
  }
  return 1;
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return 1;
    case ErrorKind::kData:
      return 2;
    case ErrorKind::kIo:
      return 3;
  }
  return 2;
}

}  // namespace
}  // namespace verforge

int main(int argc, char **argv) {
  try {
    return verforge::Run(argc, argv);
  } catch (const verforge::Error &e) {
    std::cerr << "ver-forge: " << e.what() << "\n";
    return verforge::ExitCode(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "ver-forge: " << e.what() << "\n";
    return 2;
  }
}
