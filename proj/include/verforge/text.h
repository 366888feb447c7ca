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

#ifndef VERFORGE_TEXT_H_
#define VERFORGE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

// Byte-level string helpers shared by the pipeline stages. All case handling
// is ASCII-only; bytes >= 0x80 (UTF-8 sequences) pass through untouched and
// count as word characters.
namespace verforge {

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }

inline bool IsWordChar(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

inline char AsciiToLower(char c) {
  return IsAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c;
}

inline char AsciiToUpper(char c) {
  return IsAsciiLower(c) ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string AsciiLower(std::string_view s);

bool EqualsIgnoreAsciiCase(std::string_view a, std::string_view b);

bool StartsWithIgnoreAsciiCase(std::string_view s, std::string_view prefix);

std::string_view TrimView(std::string_view s);

inline std::string Trim(std::string_view s) { return std::string(TrimView(s)); }

// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string> SplitString(std::string_view s, std::string_view sep);

// Wikipedia title semantics: surrounding whitespace trimmed, underscores become
// spaces, whitespace runs collapse, any "#fragment" is dropped and the first
// character is uppercased. Returns "" when nothing is left.
std::string CanonicalizeTitle(std::string_view title);

// "Mercury (planet)" -> "Mercury". Titles without a trailing parenthetical are
// returned unchanged.
std::string StripParenthetical(std::string_view title);

}  // namespace verforge

#endif  // VERFORGE_TEXT_H_
