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

#ifndef VERFORGE_WIKIDUMP_H_
#define VERFORGE_WIKIDUMP_H_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace verforge {

// A page exactly as it appears in a MediaWiki XML export.
struct RawPage {
  std::string title;
  uint64_t page_id = 0;
  std::string markup;
  int ns = 0;
};

// One internal link. [byte_start, byte_end) indexes the stripped plain text
// and covers exactly `mention`.
struct LinkAnchor {
  std::string mention;
  std::string target;
  size_t byte_start = 0;
  size_t byte_end = 0;

  bool operator==(const LinkAnchor &) const = default;
};

struct StripWarning {
  std::string kind;  // "unbalanced_link", "unbalanced_template", ...
  size_t markup_offset = 0;

  bool operator==(const StripWarning &) const = default;
};

struct StrippedText {
  std::string plain_text;
  std::vector<LinkAnchor> anchors;  // sorted by byte_start, non-overlapping
  std::vector<StripWarning> warnings;
};

struct CleanPage {
  std::string title;
  uint64_t page_id = 0;
  std::string plain_text;
  std::vector<LinkAnchor> anchors;
  std::vector<StripWarning> warnings;
};

// Converts wikitext to plain text. Internal links keep their visible text and
// produce an anchor; templates, references, tables, file links, comments,
// quote markup and headings are removed; external links keep their label.
// Never throws: unbalanced constructs are kept as literal text and reported
// in `warnings`.
StrippedText StripWikitext(std::string_view markup);

CleanPage CleanRawPage(const RawPage &page);

// Counts of <page> elements that did not reach the caller.
struct SkipTally {
  uint64_t redirect = 0;
  uint64_t non_article = 0;  // namespace != 0
  uint64_t invalid = 0;      // missing or empty title

  uint64_t total() const { return redirect + non_article + invalid; }
};

// Pull parser over a MediaWiki XML export. Only the current page is held in
// memory. Throws a data Error naming the byte offset on malformed XML.
//
//   PageStream stream(in);
//   RawPage page;
//   while (stream.Next(&page)) { ... }
class PageStream {
 public:
  explicit PageStream(std::istream &in, size_t chunk_size = 1 << 20);

  PageStream(const PageStream &) = delete;
  PageStream &operator=(const PageStream &) = delete;

  // Fills `page` with the next namespace-0, non-redirect page. Returns false
  // at end of input.
  bool Next(RawPage *page);

  const SkipTally &skipped() const { return skipped_; }
  uint64_t pages_seen() const { return pages_seen_; }
  uint64_t bytes_consumed() const { return base_offset_ + pos_; }

 private:
  enum class Token { kStart, kEnd, kText, kEof };

  bool Fill();
  bool Ensure(size_t n);
  Token NextToken();
  void ReadTag();
  void ReadText();
  void SkipUntil(std::string_view terminator, std::string_view what);
  [[noreturn]] void Fail(const std::string &what, uint64_t offset) const;
  uint64_t Offset() const { return base_offset_ + pos_; }

  std::istream &in_;
  size_t chunk_size_;
  std::string buf_;
  size_t pos_ = 0;
  uint64_t base_offset_ = 0;
  bool eof_ = false;

  // Current token.
  std::string name_;
  std::string text_;
  bool self_closing_ = false;
  std::string redirect_attr_;

  std::vector<std::string> stack_;
  bool seen_root_ = false;
  SkipTally skipped_;
  uint64_t pages_seen_ = 0;
};

// Decodes XML/HTML character references in `s` (named entities limited to the
// XML five plus a handful common in wikitext). Unknown references stay literal.
std::string DecodeEntities(std::string_view s);

}  // namespace verforge

#endif  // VERFORGE_WIKIDUMP_H_
