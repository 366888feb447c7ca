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

#include "verforge/jsonl.h"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "verforge/error.h"
#include "verforge/text.h"

namespace verforge {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string Dump(const ordered_json &j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace

std::string ExampleToJsonLine(const Example &example) {
  ordered_json j;
  j["entities"] = example.entities;
  j["entity_ids"] = example.entity_ids;
  j["sentence"] = example.sentence;
  j["source_page"] = example.source_page;
  j["sentence_index"] = example.sentence_index;
  j["kind"] = KindName(example.kind());
  return Dump(j);
}

Example ExampleFromJsonLine(std::string_view line, size_t line_number) {
  const std::string where = "line " + std::to_string(line_number) + ": ";
  Example example;
  try {
    nlohmann::json j = nlohmann::json::parse(line);
    example.entities = j.at("entities").get<std::vector<std::string>>();
    if (j.contains("entity_ids")) {
      example.entity_ids = j["entity_ids"].get<std::vector<std::string>>();
    } else {
      for (const std::string &e : example.entities) {
        example.entity_ids.push_back(CanonicalizeTitle(e));
      }
    }
    example.sentence = j.at("sentence").get<std::string>();
    example.source_page = j.at("source_page").get<std::string>();
    example.sentence_index = j.at("sentence_index").get<size_t>();
    if (j.contains("kind") &&
        ParseKind(j["kind"].get<std::string>()) != example.kind()) {
      throw DataError(where + "kind does not match entity count");
    }
  } catch (const nlohmann::json::exception &e) {
    throw DataError(where + e.what());
  } catch (const Error &e) {
    if (std::string_view(e.what()).starts_with("line ")) throw;
    throw DataError(where + e.what());
  }
  if (example.entities.empty()) throw DataError(where + "empty entity list");
  if (example.entities.size() != example.entity_ids.size()) {
    throw DataError(where + "entities and entity_ids differ in length");
  }
  return example;
}

std::string CleanPageToJsonLine(const CleanPage &page) {
  ordered_json anchors = ordered_json::array();
  for (const LinkAnchor &a : page.anchors) {
    ordered_json anchor;
    anchor["mention"] = a.mention;
    anchor["target"] = a.target;
    anchor["start"] = a.byte_start;
    anchor["end"] = a.byte_end;
    anchors.push_back(std::move(anchor));
  }
  ordered_json j;
  j["title"] = page.title;
  j["page_id"] = page.page_id;
  j["plain_text"] = page.plain_text;
  j["anchors"] = std::move(anchors);
  return Dump(j);
}

void WriteExamples(const std::string &path,
                   const std::vector<Example> &examples) {
  std::string out;
  for (const Example &example : examples) {
    out += ExampleToJsonLine(example);
    out.push_back('\n');
  }
  WriteFileAtomically(path, out);
}

std::vector<Example> ReadExamples(const std::string &path) {
  std::vector<Example> examples;
  ForEachLine(path, [&](std::string_view line, size_t number) {
    examples.push_back(ExampleFromJsonLine(line, number));
  });
  return examples;
}

void ForEachLine(const std::string &path,
                 const std::function<void(std::string_view, size_t)> &fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (TrimView(line).empty()) continue;
    fn(line, number);
  }
  if (in.bad()) throw IoError("error reading " + path);
}

void WriteFileAtomically(const std::string &path, std::string_view contents) {
  const std::string partial = path + ".partial";
  {
    std::ofstream out(partial, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + partial);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw IoError("error writing " + partial);
  }
  if (std::rename(partial.c_str(), path.c_str()) != 0) {
    throw IoError("cannot rename " + partial + " to " + path);
  }
}

}  // namespace verforge
