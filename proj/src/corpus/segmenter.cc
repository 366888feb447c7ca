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

#include <algorithm>
#include <array>

#include "verforge/corpus.h"
#include "verforge/text.h"

namespace verforge {

namespace {

constexpr std::array<std::string_view, 44> kAbbreviations = {
    "mr",    "mrs",  "ms",   "dr",   "prof", "st",   "jr",   "sr",   "vs",
    "e.g",   "i.e",  "cf",   "al",   "approx", "fig", "no",  "nos",  "gen",
    "col",   "lt",   "sgt",  "capt", "rev",  "hon",  "mt",   "ft",   "ca",
    "c",     "jan",  "feb",  "apr",  "jun",  "jul",  "aug",  "sep",  "sept",
    "oct",   "nov",  "dec",  "op",   "vol",  "pp",   "ed",   "est"};

bool IsOpenQuote(std::string_view s, size_t i) {
  if (s[i] == '"' || s[i] == '\'') return true;
  return s.compare(i, 3, "\xE2\x80\x9C") == 0 ||
         s.compare(i, 3, "\xE2\x80\x98") == 0;
}

// Length of a closing quote/bracket at i, or 0.
size_t CloserLength(std::string_view s, size_t i) {
  char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (s.compare(i, 3, "\xE2\x80\x9D") == 0 ||
      s.compare(i, 3, "\xE2\x80\x99") == 0) {
    return 3;
  }
  return 0;
}

bool IsHorizontalSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// [begin, end) of the whitespace-delimited token that ends at `end`.
size_t TokenStart(std::string_view s, size_t floor, size_t end) {
  size_t b = end;
  while (b > floor && !IsAsciiSpace(s[b - 1])) --b;
  return b;
}

std::string_view StripLeadingPunct(std::string_view t) {
  while (!t.empty() && !IsWordChar(t.front())) t.remove_prefix(1);
  return t;
}

bool IsInitial(std::string_view token) {
  return token.size() == 1 && IsAsciiUpper(token[0]);
}

// Decides whether the '.' at `dot` is part of an abbreviation or an initial.
bool IsNonTerminalDot(std::string_view s, size_t sentence_start, size_t dot) {
  size_t ts = TokenStart(s, sentence_start, dot);
  std::string_view token = StripLeadingPunct(s.substr(ts, dot - ts));
  if (token.empty()) return false;
  std::string lowered = AsciiLower(token);
  if ((token.size() > 1 || IsAsciiLower(token[0])) &&
      std::find(kAbbreviations.begin(), kAbbreviations.end(), lowered) !=
      kAbbreviations.end()) {
    return true;
  }
  // U.S, e.g, Ph.D: letters separated by dots.
  if (token.find('.') != std::string_view::npos) {
    bool all_short = true;
    for (const std::string &part : SplitString(token, ".")) {
      if (part.empty() || part.size() > 2) all_short = false;
    }
    if (all_short) return true;
  }
  if (!IsInitial(token)) return false;
  // A single capital is an initial at the start of a sentence or after a
  // capitalized word ("John F. Kennedy", "A. B. Smith").
  size_t p = ts;
  while (p > sentence_start && IsAsciiSpace(s[p - 1])) --p;
  if (p <= sentence_start) return true;
  size_t ps = TokenStart(s, sentence_start, p);
  std::string_view prev = StripLeadingPunct(s.substr(ps, p - ps));
  return !prev.empty() && IsAsciiUpper(prev.front());
}

void Push(std::string_view s, size_t begin, size_t end,
          std::vector<Sentence> *out) {
  while (begin < end && IsAsciiSpace(s[begin])) ++begin;
  while (end > begin && IsAsciiSpace(s[end - 1])) --end;
  if (begin == end) return;
  Sentence sentence;
  sentence.text = std::string(s.substr(begin, end - begin));
  sentence.index = out->size();
  sentence.byte_start = begin;
  sentence.byte_end = end;
  out->push_back(std::move(sentence));
}

}  // namespace

std::vector<Sentence> SegmentSentences(std::string_view s) {
  std::vector<Sentence> out;
  size_t start = 0;
  int depth = 0;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      Push(s, start, i, &out);
      start = i + 1;
      depth = 0;
      ++i;
      continue;
    }
    if (c == '(' || c == '[') {
      ++depth;
      ++i;
      continue;
    }
    if (c == ')' || c == ']') {
      depth = std::max(0, depth - 1);
      ++i;
      continue;
    }
    if ((c != '.' && c != '?' && c != '!') || depth > 0) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < s.size() && (s[j] == '.' || s[j] == '?' || s[j] == '!')) ++j;
    const bool single_dot = (j - i == 1) && c == '.';
    size_t closer;
    while (j < s.size() && (closer = CloserLength(s, j)) > 0) j += closer;
    if (j >= s.size() || !IsHorizontalSpace(s[j])) {
      i = j;
      continue;
    }
    size_t k = j;
    while (k < s.size() && IsHorizontalSpace(s[k])) ++k;
    if (k >= s.size() ||
        !(IsAsciiUpper(s[k]) || IsAsciiDigit(s[k]) || IsOpenQuote(s, k))) {
      i = k;
      continue;
    }
    if (single_dot && IsNonTerminalDot(s, start, i)) {
      i = k;
      continue;
    }
    Push(s, start, j, &out);
    start = k;
    i = k;
  }
  Push(s, start, s.size(), &out);
  return out;
}

}  // namespace verforge
