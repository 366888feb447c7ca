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

// Randomized checks of cross-module invariants.

#include <algorithm>

#include <gtest/gtest.h>

#include "test_util.h"
#include "verforge/corpus.h"
#include "verforge/encoding.h"
#include "verforge/harness.h"
#include "verforge/text.h"
#include "verforge/wikidump.h"

namespace verforge {
namespace {

// A random article whose links point into a small shared vocabulary.
std::string RandomMarkup(testing_util::Gen &gen, const std::string &title) {
  static const std::vector<std::string> kTargets = {
      "Water", "Carbon dioxide", "Salt", "Ice", "Steam", "Sea", "River", "Rain"};
  static const std::vector<std::string> kFillers = {
      "is", "and", "with", "of", "the", "a", "near", "from", "It", "This is"};
  std::string out = "'''" + title + "''' ";
  size_t sentences = gen.Int(1, 8);
  for (size_t s = 0; s < sentences; ++s) {
    if (s > 0) out += gen.Coin(0.3) ? "It " : "";
    for (size_t w = gen.Int(1, 8); w > 0; --w) {
      size_t roll = gen.Int(0, 9);
      if (roll < 3) {
        const std::string &t = gen.Pick(kTargets);
        out += gen.Coin() ? "[[" + t + "]] " : "[[" + t + "|" + AsciiLower(t) + "]] ";
      } else if (roll == 3) {
        out += title + " ";
      } else if (roll == 4) {
        out += "{{tmpl|x}} ";
      } else {
        out += gen.Pick(kFillers) + " ";
      }
    }
    out += gen.Coin(0.2) ? "!\n" : ". ";
  }
  return out;
}

TEST(ExampleInvariantsTest, RandomPages) {
  testing_util::Gen gen(17);
  PronounCoreference coref;
  for (int round = 0; round < 500; ++round) {
    std::string title = gen.Coin() ? "Lake" : "Mount Test (peak)";
    CleanPage page = CleanRawPage(RawPage{title, 1, RandomMarkup(gen, title), 0});
    MentionMap map = BuildMentionMap(page);
    std::vector<Example> ex = ExtractExamples(page, map, &coref);
    EXPECT_LE(ex.size(), 6u);
    for (const Example &e : ex) {
      ASSERT_FALSE(e.entities.empty());
      ASSERT_EQ(e.entities.size(), e.entity_ids.size());
      if (e.entities.size() == 1) EXPECT_EQ(e.sentence_index, 0u);
      EXPECT_LT(e.sentence_index, kSentencesPerPage);
      std::vector<std::string> ids = e.entity_ids;
      std::sort(ids.begin(), ids.end());
      EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
      if (e.entities.size() < 2) continue;
      // Surfaces occur in the sentence in the listed order.
      size_t from = 0;
      std::string lowered = AsciiLower(e.sentence);
      for (const std::string &surface : e.entities) {
        size_t at = lowered.find(AsciiLower(surface), from);
        ASSERT_NE(at, std::string::npos) << surface << " in " << e.sentence;
        from = at + surface.size();
      }
    }
  }
}

TEST(EncodingPropertyTest, DecodeInvertsEncode) {
  testing_util::Gen gen(23);
  const std::string alphabet = "ab ;[]SEP-\xC3\xA9";
  auto piece = [&] {
    std::string s;
    do {
      s.clear();
      for (size_t i = gen.Int(1, 10); i > 0; --i) s += alphabet[gen.Int(0, alphabet.size() - 1)];
    } while (s.find("[SEP]") != std::string::npos);
    return s;
  };
  int checked = 0;
  for (int round = 0; round < 10000; ++round) {
    std::vector<std::string> entities, retrieved;
    for (size_t i = gen.Int(1, 5); i > 0; --i) {
      std::string e = piece();
      if (e.find("; ") == std::string::npos) entities.push_back(e);
    }
    if (entities.empty()) continue;
    for (size_t i = gen.Int(0, 4); i > 0; --i) retrieved.push_back(piece());
    std::string encoded = EncodeInput(entities, retrieved);
    EXPECT_EQ(DecodeInput(encoded), (DecodedInput{entities, retrieved})) << encoded;
    ++checked;
  }
  EXPECT_GT(checked, 5000);
}

TEST(EncodingPropertyTest, PermutingEntitiesPermutesSegments) {
  testing_util::Gen gen(29);
  for (int round = 0; round < 500; ++round) {
    std::vector<std::string> entities;
    for (size_t i = gen.Int(2, 6); i > 0; --i) entities.push_back(gen.Word());
    std::vector<std::string> shuffled = entities;
    std::reverse(shuffled.begin(), shuffled.end());
    EXPECT_EQ(DecodeInput(EncodeInput(shuffled, {})).entities, shuffled);
  }
}

}  // namespace
}  // namespace verforge
