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

#ifndef VERFORGE_ENCODING_H_
#define VERFORGE_ENCODING_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "verforge/corpus.h"

namespace verforge {

constexpr std::string_view kEntityJoin = "; ";
constexpr std::string_view kSepJoin = " [SEP] ";
constexpr std::string_view kSepToken = "[SEP]";

struct RecordMeta {
  std::string source_page;
  size_t sentence_index = 0;
  std::string kind;
  std::optional<int> h_used;  // absent when retrieval is off

  bool operator==(const RecordMeta &) const = default;
};

struct EncodedRecord {
  std::string input;
  std::string target;
  RecordMeta meta;

  bool operator==(const EncodedRecord &) const = default;
};

struct DecodedInput {
  std::vector<std::string> entities;
  std::vector<std::string> retrieved;

  bool operator==(const DecodedInput &) const = default;
};

// "e1; e2; e3 [SEP] s1 [SEP] s2". Throws a data Error if the list is empty, if
// any piece is empty, if an entity contains "; ", or if any piece contains
// "[SEP]"; under those rules DecodeInput is an exact inverse.
std::string EncodeInput(const std::vector<std::string> &entities,
                        const std::vector<std::string> &retrieved);

// Throws a data Error naming the offending segment on malformed input.
DecodedInput DecodeInput(std::string_view input);

EncodedRecord MakeRecord(const Example &example,
                         const std::vector<std::string> &retrieved,
                         std::optional<int> h_used);

// One JSON object per line: {"input", "target", "meta"}.
std::string RecordToJsonLine(const EncodedRecord &record);
// `line_number` is used in error messages only.
EncodedRecord RecordFromJsonLine(std::string_view line, size_t line_number);

void WriteRecords(const std::string &path,
                  const std::vector<EncodedRecord> &records);
std::vector<EncodedRecord> ReadRecords(const std::string &path);

}  // namespace verforge

#endif  // VERFORGE_ENCODING_H_
