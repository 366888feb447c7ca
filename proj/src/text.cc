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

#include "verforge/text.h"

namespace verforge {

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = AsciiToLower(c);
  return out;
}

bool EqualsIgnoreAsciiCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (AsciiToLower(a[i]) != AsciiToLower(b[i])) return false;
  }
  return true;
}

bool StartsWithIgnoreAsciiCase(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() &&
         EqualsIgnoreAsciiCase(s.substr(0, prefix.size()), prefix);
}

std::string_view TrimView(std::string_view s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && IsAsciiSpace(s[begin])) ++begin;
  while (end > begin && IsAsciiSpace(s[end - 1])) --end;
  return s.substr(begin, end - begin);
}

std::vector<std::string> SplitString(std::string_view s, std::string_view sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t hit = s.find(sep, start);
    if (hit == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      return parts;
    }
    parts.emplace_back(s.substr(start, hit - start));
    start = hit + sep.size();
  }
}

std::string CanonicalizeTitle(std::string_view title) {
  size_t hash = title.find('#');
  if (hash != std::string_view::npos) title = title.substr(0, hash);
  std::string out;
  out.reserve(title.size());
  bool pending_space = false;
  for (char c : title) {
    if (c == '_' || IsAsciiSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  if (!out.empty()) out[0] = AsciiToUpper(out[0]);
  return out;
}

std::string StripParenthetical(std::string_view title) {
  std::string_view t = TrimView(title);
  if (t.size() < 3 || t.back() != ')') return std::string(t);
  size_t open = t.rfind(" (");
  if (open == std::string_view::npos || open == 0) return std::string(t);
  return std::string(TrimView(t.substr(0, open)));
}

}  // namespace verforge
