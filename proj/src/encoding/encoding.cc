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

#include "verforge/encoding.h"

#include <json.hpp>

#include "verforge/error.h"
#include "verforge/jsonl.h"
#include "verforge/text.h"

namespace verforge {

using ordered_json = nlohmann::ordered_json;

namespace {

void CheckPiece(std::string_view piece, bool is_entity) {
  const char *what = is_entity ? "entity" : "retrieved sentence";
  if (piece.empty()) throw DataError(std::string("empty ") + what);
  if (piece.find(kSepToken) != std::string_view::npos) {
    throw DataError(std::string(what) + " contains reserved \"[SEP]\": \"" +
                    std::string(piece) + "\"");
  }
  if (is_entity && piece.find(kEntityJoin) != std::string_view::npos) {
    throw DataError("entity contains reserved \"; \": \"" + std::string(piece) +
                    "\"");
  }
}

}  // namespace

std::string EncodeInput(const std::vector<std::string> &entities,
                        const std::vector<std::string> &retrieved) {
  if (entities.empty()) throw DataError("entity list is empty");
  std::string out;
  for (size_t i = 0; i < entities.size(); ++i) {
    CheckPiece(entities[i], true);
    if (i > 0) out.append(kEntityJoin);
    out.append(entities[i]);
  }
  for (const std::string &sentence : retrieved) {
    CheckPiece(sentence, false);
    out.append(kSepJoin);
    out.append(sentence);
  }
  return out;
}

DecodedInput DecodeInput(std::string_view input) {
  std::vector<std::string> segments = SplitString(input, kSepJoin);
  DecodedInput decoded;
  for (size_t i = 0; i < segments.size(); ++i) {
    const std::string &segment = segments[i];
    if (segment.empty() || segment.find(kSepToken) != std::string::npos) {
      throw DataError("malformed input segment " + std::to_string(i) + ": \"" +
                      segment + "\"");
    }
    if (i > 0) decoded.retrieved.push_back(segment);
  }
  for (std::string &entity : SplitString(segments[0], kEntityJoin)) {
    if (entity.empty()) {
      throw DataError("malformed entity list: \"" + segments[0] + "\"");
    }
    decoded.entities.push_back(std::move(entity));
  }
  return decoded;
}

EncodedRecord MakeRecord(const Example &example,
                         const std::vector<std::string> &retrieved,
                         std::optional<int> h_used) {
  EncodedRecord record;
  record.input = EncodeInput(example.entities, retrieved);
  record.target = example.sentence;
  record.meta.source_page = example.source_page;
  record.meta.sentence_index = example.sentence_index;
  record.meta.kind = std::string(KindName(example.kind()));
  record.meta.h_used = h_used;
  return record;
}

std::string RecordToJsonLine(const EncodedRecord &record) {
  ordered_json meta;
  meta["source_page"] = record.meta.source_page;
  meta["sentence_index"] = record.meta.sentence_index;
  meta["kind"] = record.meta.kind;
  meta["h_used"] = record.meta.h_used ? ordered_json(*record.meta.h_used)
                                      : ordered_json(nullptr);
  ordered_json j;
  j["input"] = record.input;
  j["target"] = record.target;
  j["meta"] = std::move(meta);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

EncodedRecord RecordFromJsonLine(std::string_view line, size_t line_number) {
  const std::string where = "line " + std::to_string(line_number) + ": ";
  try {
    nlohmann::json j = nlohmann::json::parse(line);
    EncodedRecord record;
    record.input = j.at("input").get<std::string>();
    record.target = j.at("target").get<std::string>();
    const nlohmann::json &meta = j.at("meta");
    record.meta.source_page = meta.at("source_page").get<std::string>();
    record.meta.sentence_index = meta.at("sentence_index").get<size_t>();
    record.meta.kind = meta.at("kind").get<std::string>();
    if (meta.contains("h_used") && !meta["h_used"].is_null()) {
      record.meta.h_used = meta["h_used"].get<int>();
    }
    return record;
  } catch (const nlohmann::json::exception &e) {
    throw DataError(where + e.what());
  }
}

void WriteRecords(const std::string &path,
                  const std::vector<EncodedRecord> &records) {
  std::string out;
  for (const EncodedRecord &record : records) {
    out += RecordToJsonLine(record);
    out.push_back('\n');
  }
  WriteFileAtomically(path, out);
}

std::vector<EncodedRecord> ReadRecords(const std::string &path) {
  std::vector<EncodedRecord> records;
  ForEachLine(path, [&](std::string_view line, size_t number) {
    records.push_back(RecordFromJsonLine(line, number));
  });
  return records;
}

}  // namespace verforge
