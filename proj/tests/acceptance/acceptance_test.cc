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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "oracles/oracles.h"
#include "test_util.h"
#include "verforge/corpus.h"
#include "verforge/encoding.h"
#include "verforge/harness.h"
#include "verforge/text.h"
#include "verforge/jsonl.h"
#include "verforge/metrics.h"
#include "verforge/retrieval.h"
#include "verforge/rng.h"
#include "verforge/wikidump.h"

namespace verforge {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failure notes for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string &note) {
    if (!ok && notes_.size() < 5) notes_.push_back(note);
    if (!ok) ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const std::string &n : notes_) out += (out.empty() ? "" : "; ") + n;
    if (failures_ > notes_.size()) {
      out += " (+" + std::to_string(failures_ - notes_.size()) + " more)";
    }
    return out;
  }

 private:
  std::vector<std::string> notes_;
  size_t failures_ = 0;
};

std::string Fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

// 1. Metric oracle equivalence.
std::string MetricOracles(Check &c) {
  const std::vector<std::string> vocab = {"the", "a", "cat", "cats", "dog", "dogs",
                                          "sat", "on", "mat", "runs", "running",
                                          "red", ".", ","};
  testing_util::Gen gen(1001);
  auto start = Clock::now();
  auto sentence = [&](size_t lo) {
    Tokens t;
    for (size_t i = gen.Int(lo, 12); i > 0; --i) t.push_back(gen.Pick(vocab));
    return t;
  };
  size_t meteor_checked = 0;
  for (int corpus = 0; corpus < 200; ++corpus) {
    std::vector<EvalPair> pairs(gen.Int(1, 10));
    for (EvalPair &p : pairs) {
      p.hypothesis = sentence(1);
      for (size_t r = gen.Int(1, 3); r > 0; --r) p.references.push_back(sentence(1));
    }
    std::string tag = "corpus " + std::to_string(corpus) + ": ";
    double b = Bleu(pairs), ob = oracle::Bleu(pairs);
    c.Expect(std::abs(b - ob) <= 1e-9, tag + "bleu " + Fmt(b) + " vs " + Fmt(ob));
    double r = RougeL(pairs), orr = oracle::RougeL(pairs);
    c.Expect(std::abs(r - orr) <= 1e-9, tag + "rouge_l " + Fmt(r) + " vs " + Fmt(orr));
    double ci = Cider(pairs), oc = oracle::Cider(pairs);
    c.Expect(std::abs(ci - oc) <= 1e-9, tag + "cider " + Fmt(ci) + " vs " + Fmt(oc));
    if (std::optional<double> om = oracle::MeteorLite(pairs)) {
      double m = MeteorLite(pairs);
      c.Expect(std::abs(m - *om) <= 1e-9, tag + "meteor " + Fmt(m) + " vs " + Fmt(*om));
      ++meteor_checked;
    }

    // The same corpus with every hypothesis copied from its first reference.
    std::vector<EvalPair> same = pairs;
    double meteor_expected = 0;
    for (EvalPair &p : same) {
      p.references.resize(1);
      p.hypothesis = p.references[0];
      double m = static_cast<double>(p.hypothesis.size());
      meteor_expected += 1 - 0.5 / (m * m * m);
    }
    meteor_expected /= same.size();
    c.Expect(Bleu(same) == 100.0, tag + "identical bleu " + Fmt(Bleu(same)));
    c.Expect(RougeL(same) == 1.0, tag + "identical rouge_l");
    c.Expect(std::abs(MeteorLite(same) - meteor_expected) <= 1e-12,
             tag + "identical meteor " + Fmt(MeteorLite(same)));
    c.Expect(Cider(same) == 10.0, tag + "identical cider " + Fmt(Cider(same)));
  }
  double secs = Seconds(start);
  c.Expect(meteor_checked == 200, "meteor oracle ran on " +
                                      std::to_string(meteor_checked) + "/200 corpora");
  c.Expect(secs < 10, "runtime " + Fmt(secs) + " s");
  return "200 corpora, " + Fmt(secs) + " s";
}

// 2. Retrieval correctness.
std::string Retrieval(Check &c) {
  testing_util::Gen gen(2002);
  testing_util::TempDir dir;
  auto start = Clock::now();
  size_t queries = 0;
  for (int corpus = 0; corpus < 100; ++corpus) {
    size_t n = gen.Int(0, 1000);
    size_t vocab = gen.Int(1, 60);
    std::vector<Example> examples;
    for (size_t i = 0; i < n; ++i) {
      Example e;
      for (size_t k = gen.Int(1, 8); k > 0; --k) {
        std::string id = "E" + std::to_string(gen.Int(0, vocab - 1));
        if (std::find(e.entity_ids.begin(), e.entity_ids.end(), id) == e.entity_ids.end()) {
          e.entity_ids.push_back(id);
        }
      }
      e.entities = e.entity_ids;
      e.sentence = "sentence " + std::to_string(gen.Int(0, n + n / 10));
      e.source_page = "Page " + std::to_string(gen.Int(0, 99));
      e.sentence_index = gen.Int(0, 4);
      examples.push_back(std::move(e));
    }
    OverlapIndex index = OverlapIndex::Build(examples);
    std::string path = dir.File("index.bin");
    index.Save(path);
    OverlapIndex loaded = OverlapIndex::Load(path);
    c.Expect(loaded == index, "corpus " + std::to_string(corpus) + ": reload differs");
    std::vector<std::optional<ExampleId>> excludes = {std::nullopt};
    for (size_t t = 0; t < 10 && n > 0; ++t) excludes.push_back(static_cast<ExampleId>(gen.Int(0, n - 1)));
    for (int q = 0; q < 20; ++q) {
      std::vector<std::string> query;
      for (size_t k = gen.Int(1, 8); k > 0; --k) {
        query.push_back("E" + std::to_string(gen.Int(0, vocab + 5)));
      }
      QueryOptions options;
      options.k = gen.Int(0, 25);
      options.exclude = gen.Pick(excludes);
      std::vector<ScoredExample> got = QueryOverlap(index, query, options);
      std::vector<ScoredExample> want =
          oracle::QueryOverlap(index.examples(), query, options.k, options.exclude);
      c.Expect(got == want, "corpus " + std::to_string(corpus) + " query " +
                                std::to_string(q) + " differs from oracle");
      c.Expect(QueryOverlap(loaded, query, options) == got,
               "corpus " + std::to_string(corpus) + ": reloaded index answers differently");
      if (options.exclude) {
        for (const ScoredExample &s : got) {
          c.Expect(s.id != *options.exclude, "excluded id returned");
        }
      }
      ++queries;
    }
  }
  double secs = Seconds(start);
  c.Expect(secs < 30, "runtime " + Fmt(secs) + " s");
  return std::to_string(queries) + " queries on 100 corpora, " + Fmt(secs) + " s";
}

PipelineConfig FixtureConfig(const std::string &out) {
  PipelineConfig config;
  config.dump_path = testing_util::FixturePath("mini_dump.xml");
  config.page_blocklist = testing_util::FixturePath("page_blocklist.txt");
  config.entityset_blocklist = testing_util::FixturePath("entityset_blocklist.txt");
  config.out_dir = out;
  config.retrieval = true;
  config.seed = 5;
  return config;
}

// 3. Pipeline fidelity on the fixture dump.
std::string PipelineFidelity(Check &c) {
  testing_util::TempDir a, b;
  auto start = Clock::now();
  RunPipeline(FixtureConfig(a.path()));
  PipelineConfig second = FixtureConfig(b.path());
  second.jobs = 3;
  RunPipeline(second);
  double secs = Seconds(start);

  std::vector<Example> corpus = ReadExamples(a.File("corpus.jsonl"));
  std::set<std::string> seen;
  std::map<std::string, uint64_t> per_page;
  for (const Example &e : corpus) {
    std::string where = e.source_page + "#" + std::to_string(e.sentence_index);
    c.Expect(e.entities.size() >= 2 || e.sentence_index == 0,
             "singleton at sentence " + where);
    if (e.entities.size() < 2) continue;
    // Each surface must occur, case-folded, after the previous one.
    std::string lowered = AsciiLower(e.sentence);
    size_t from = 0;
    for (const std::string &surface : e.entities) {
      size_t at = lowered.find(AsciiLower(surface), from);
      c.Expect(at != std::string::npos, "entity order broken at " + where);
      if (at == std::string::npos) break;
      from = at + surface.size();
    }
  }

  nlohmann::json got = nlohmann::json::parse(testing_util::ReadFile(a.File("manifest.json")));
  nlohmann::json want = nlohmann::json::parse(
      testing_util::ReadFile(testing_util::FixturePath("mini_dump.expected.json")));
  for (const auto &[key, value] : want.items()) {
    c.Expect(got[key] == value, "manifest " + key + " = " + got[key].dump() +
                                    ", tally says " + value.dump());
  }
  for (const char *file : {"corpus.jsonl", "records.jsonl", "stats.json",
                           "manifest.json", "index.bin"}) {
    c.Expect(testing_util::ReadFile(a.File(file)) == testing_util::ReadFile(b.File(file)),
             std::string(file) + " differs between runs");
  }
  c.Expect(secs < 5, "runtime " + Fmt(secs) + " s");
  return std::to_string(corpus.size()) + " examples, two runs in " + Fmt(secs) + " s";
}

// 4. Encoding exactness.
std::string Encoding(Check &c) {
  c.Expect(EncodeInput({"carbon dioxide", "water", "carbonic acid"}, {}) ==
               "carbon dioxide; water; carbonic acid",
           "worked example");
  testing_util::Gen gen(4004);
  const std::string alphabet = "abcXYZ ;,.[]-'\xC3\xA9";
  auto piece = [&] {
    std::string s;
    do {
      s.clear();
      for (size_t i = gen.Int(1, 16); i > 0; --i) s += alphabet[gen.Int(0, alphabet.size() - 1)];
    } while (s.find("[SEP]") != std::string::npos);
    return s;
  };
  size_t trips = 0;
  while (trips < 10000) {
    std::vector<std::string> entities, retrieved;
    for (size_t i = gen.Int(1, 6); i > 0; --i) {
      std::string e = piece();
      if (e.find("; ") == std::string::npos) entities.push_back(e);
    }
    if (entities.empty()) continue;
    for (size_t i = gen.Int(0, 10); i > 0; --i) retrieved.push_back(piece());
    DecodedInput d = DecodeInput(EncodeInput(entities, retrieved));
    c.Expect(d.entities == entities && d.retrieved == retrieved,
             "round trip failed for \"" + EncodeInput(entities, retrieved) + "\"");
    ++trips;
  }
  return std::to_string(trips) + " round trips";
}

// 5. h sampling.
std::string HSampling(Check &c) {
  constexpr int kDraws = 100000;
  constexpr int kBuckets = kMaxRetrieved + 1;
  std::array<int, kBuckets> counts{};
  Rng rng(0);
  int lo = kMaxRetrieved, hi = 0;
  for (int i = 0; i < kDraws; ++i) {
    int h = SampleH(rng);
    if (h < 0 || h > kMaxRetrieved) {
      c.Expect(false, "draw out of range: " + std::to_string(h));
      continue;
    }
    ++counts[h];
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  const double expected = static_cast<double>(kDraws) / kBuckets;
  double chi2 = 0;
  double worst = 0;
  for (int v = 0; v < kBuckets; ++v) {
    double d = counts[v] - expected;
    chi2 += d * d / expected;
    worst = std::max(worst, std::abs(counts[v] / static_cast<double>(kDraws) - 1.0 / kBuckets));
  }
  // Upper 1% point of chi-square with 10 degrees of freedom.
  constexpr double kChi2Critical = 23.209;
  c.Expect(chi2 < kChi2Critical, "chi-square " + Fmt(chi2));
  c.Expect(worst <= 0.015, "bucket deviation " + Fmt(worst));
  c.Expect(lo == 0 && hi == kMaxRetrieved, "range observed " + std::to_string(lo) + ".." +
                                                std::to_string(hi));
  return "chi2 " + Fmt(chi2) + ", max bucket deviation " + Fmt(worst);
}

// A synthetic dump: article pages with links, templates and refs, repeated
// until the target size.
std::string SyntheticDump(size_t target_bytes) {
  std::string out = "<mediawiki xmlns=\"http://www.mediawiki.org/xml/export-0.10/\">\n";
  const std::string body =
      "{{Infobox thing|name=X|image=[[File:X.png|thumb]]}}\n'''Topic NNN''' is a "
      "[[concept]] studied in [[Field of study|fields]] such as [[physics]] and "
      "[[chemistry]].&lt;ref&gt;{{cite book|title=Book}}&lt;/ref&gt; It was described "
      "by [[Ada Lovelace]] in 1843. The ''idea'' relates to [[energy]], [[matter]] and "
      "[[time]]. == History == Early work used [[mathematics]]. {{citation needed}} "
      "Later, [[computer science]] adopted it.\n\n"
      "{| class=\"wikitable\"\n|-\n| a || b\n|}\n[[Category:Things]]\n";
  const std::string para =
      "More text about [[the subject]] with ''italic'' and '''bold''' words, "
      "[https://example.org a link], and &amp; entities. ";
  std::string text = body;
  for (int i = 0; i < 40; ++i) text += para;
  size_t n = 0;
  while (out.size() < target_bytes) {
    ++n;
    out += "  <page>\n    <title>Topic " + std::to_string(n) +
           "</title>\n    <ns>0</ns>\n    <id>" + std::to_string(n) +
           "</id>\n    <revision>\n      <id>" + std::to_string(n) +
           "</id>\n      <text xml:space=\"preserve\">" + text +
           "</text>\n    </revision>\n  </page>\n";
  }
  return out + "</mediawiki>\n";
}

// 6. Throughput floors.
std::string Throughput(Check &c) {
  constexpr size_t kDumpBytes = 100u << 20;
  std::string xml = SyntheticDump(kDumpBytes);
  std::istringstream in(std::move(xml));
  auto start = Clock::now();
  PageStream stream(in);
  RawPage raw;
  size_t pages = 0, plain = 0;
  while (stream.Next(&raw)) {
    plain += StripWikitext(raw.markup).plain_text.size();
    ++pages;
  }
  double secs = Seconds(start);
  double mbps = static_cast<double>(stream.bytes_consumed()) / (1 << 20) / secs;
  c.Expect(plain > 0, "nothing stripped");
  c.Expect(mbps >= 20, "stream+strip " + Fmt(mbps) + " MB/s");

  testing_util::Gen gen(6006);
  std::vector<Example> examples;
  examples.reserve(100000);
  for (size_t i = 0; i < 100000; ++i) {
    Example e;
    for (size_t k = gen.Int(1, 6); k > 0; --k) {
      // Skewed popularity: a few entities are very common.
      size_t id = gen.Coin(0.3) ? gen.Int(0, 50) : gen.Int(0, 50000);
      std::string name = "Entity " + std::to_string(id);
      if (std::find(e.entity_ids.begin(), e.entity_ids.end(), name) == e.entity_ids.end()) {
        e.entity_ids.push_back(name);
      }
    }
    e.entities = e.entity_ids;
    e.sentence = "Sentence number " + std::to_string(i) + ".";
    e.source_page = "Page " + std::to_string(i / 5);
    e.sentence_index = i % 5;
    examples.push_back(std::move(e));
  }
  OverlapIndex index = OverlapIndex::Build(std::move(examples));
  std::vector<double> times;
  for (int q = 0; q < 1000; ++q) {
    ExampleId id = static_cast<ExampleId>(gen.Int(0, index.size() - 1));
    QueryOptions options;
    options.k = kMaxRetrieved;
    options.exclude = id;
    auto t = Clock::now();
    std::vector<ScoredExample> r = QueryOverlap(index, index.example(id).entity_ids, options);
    times.push_back(Seconds(t) * 1000);
    if (r.size() > kMaxRetrieved) c.Expect(false, "too many results");
  }
  std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
  double median_ms = times[times.size() / 2];
  c.Expect(median_ms < 10, "median query " + Fmt(median_ms) + " ms");
  return std::to_string(pages) + " pages at " + Fmt(mbps) + " MB/s; median query " +
         Fmt(median_ms) + " ms";
}

// 7. Coverage diagnostic.
std::string Coverage(Check &c) {
  double v = ConceptCoverage({"dog", "frisbee", "catch", "throw"},
                             Tokenize("A boy is playing frisbee with his friends"));
  c.Expect(v == 0.25, "coverage " + Fmt(v));
  return "coverage " + Fmt(v);
}

}  // namespace
}  // namespace verforge

int main() {
  using Criterion = std::pair<const char *, std::function<std::string(verforge::Check &)>>;
  const std::vector<Criterion> criteria = {
      {"1 metric oracle equivalence", verforge::MetricOracles},
      {"2 retrieval correctness", verforge::Retrieval},
      {"3 pipeline fidelity", verforge::PipelineFidelity},
      {"4 encoding exactness", verforge::Encoding},
      {"5 h sampling", verforge::HSampling},
      {"6 throughput", verforge::Throughput},
      {"7 coverage diagnostic", verforge::Coverage},
  };
  int failed = 0;
  for (const auto &[name, run] : criteria) {
    verforge::Check check;
    std::string detail;
    try {
      detail = run(check);
    } catch (const std::exception &e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    if (check.ok()) {
      std::cout << "PASS criterion " << name << " (" << detail << ")\n";
    } else {
      ++failed;
      std::cout << "FAIL criterion " << name << ": " << check.Summary() << "\n";
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
