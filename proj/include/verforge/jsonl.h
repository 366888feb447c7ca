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

#ifndef VERFORGE_JSONL_H_
#define VERFORGE_JSONL_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "verforge/corpus.h"
#include "verforge/wikidump.h"

namespace verforge {

// {"entities":[...],"entity_ids":[...],"sentence":...,"source_page":...,
//  "sentence_index":n,"kind":...}
std::string ExampleToJsonLine(const Example &example);
Example ExampleFromJsonLine(std::string_view line, size_t line_number);

// {"title","page_id","plain_text","anchors":[{"mention","target","start","end"}]}
std::string CleanPageToJsonLine(const CleanPage &page);

void WriteExamples(const std::string &path, const std::vector<Example> &examples);
std::vector<Example> ReadExamples(const std::string &path);

// Calls `fn(line, line_number)` for every non-blank line. Throws an IO Error
// when the file cannot be opened.
void ForEachLine(const std::string &path,
                 const std::function<void(std::string_view, size_t)> &fn);

// Writes `contents` to `path` through "<path>.partial" and a rename.
void WriteFileAtomically(const std::string &path, std::string_view contents);

}  // namespace verforge

#endif  // VERFORGE_JSONL_H_
