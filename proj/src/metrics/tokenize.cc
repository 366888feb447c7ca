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

#include "verforge/error.h"
#include "verforge/metrics.h"
#include "verforge/text.h"

namespace verforge {

namespace {

bool IsAsciiPunct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

}  // namespace

Tokens Tokenize(std::string_view text) {
  Tokens tokens;
  std::string current;
  for (char c : text) {
    if (IsAsciiSpace(c) || IsAsciiPunct(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
      if (IsAsciiPunct(c)) tokens.emplace_back(1, c);
      continue;
    }
    current.push_back(AsciiToLower(c));
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

EvalPair MakeEvalPair(std::string_view hypothesis,
                      const std::vector<std::string> &references) {
  if (references.empty()) throw DataError("evaluation pair has no reference");
  EvalPair pair;
  pair.hypothesis = Tokenize(hypothesis);
  for (const std::string &ref : references) {
    pair.references.push_back(Tokenize(ref));
  }
  return pair;
}

}  // namespace verforge
