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
#include <cstring>
#include <map>

#include "verforge/text.h"
#include "verforge/wikidump.h"

namespace verforge {

namespace {

// Tags whose content is dropped along with the markup.
constexpr std::array<std::string_view, 14> kDropContentTags = {
    "ref",   "references", "gallery",  "math",  "timeline",
    "score", "imagemap",   "templatedata", "graph", "mapframe",
    "chem",  "ce",         "syntaxhighlight", "source"};

// Tags whose markup is dropped and whose content is kept.
constexpr std::array<std::string_view, 52> kInlineTags = {
    "b",      "i",        "u",       "s",          "em",       "strong",
    "span",   "div",      "p",       "sup",        "sub",      "small",
    "big",    "center",   "font",    "abbr",       "br",       "hr",
    "cite",   "code",     "tt",      "var",        "kbd",      "samp",
    "q",      "dfn",      "del",     "ins",        "strike",   "mark",
    "blockquote", "poem", "onlyinclude", "includeonly", "noinclude",
    "ol",     "ul",       "li",      "dl",         "dt",       "dd",
    "table",  "tr",       "td",      "th",         "caption",  "wbr",
    "section", "templatestyles", "bdi", "time",    "ruby"};

// Link prefixes that make the whole link disappear from the rendered text.
constexpr std::array<std::string_view, 6> kDroppedLinkNamespaces = {
    "file", "image", "media", "category", "datei", "fichier"};

// Prefixes that render the label but do not point at an article.
constexpr std::array<std::string_view, 36> kForeignLinkNamespaces = {
    "wikipedia", "wp",        "project",    "help",     "template",
    "portal",    "special",   "user",       "talk",     "user talk",
    "draft",     "module",    "mediawiki",  "book",     "timedtext",
    "wikt",      "wiktionary", "wikisource", "s",       "commons",
    "c",         "meta",      "m",          "wikiquote", "q",
    "wikibooks", "b",         "wikinews",   "n",        "wikivoyage",
    "voy",       "wikispecies", "species",  "wikidata", "d",
    "mw"};

constexpr int kMaxDepth = 16;

template <size_t N>
bool Contains(const std::array<std::string_view, N> &set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

// "fr", "de", "zh-yue", "simple": interlanguage prefixes render nothing.
bool LooksLikeLanguagePrefix(std::string_view p) {
  if (p == "simple") return true;
  size_t n = 0;
  while (n < p.size() && IsAsciiLower(p[n])) ++n;
  if (n < 2 || n > 3) return false;
  if (n == p.size()) return true;
  if (p[n] != '-') return false;
  for (size_t i = n + 1; i < p.size(); ++i) {
    if (!IsAsciiLower(p[i])) return false;
  }
  return p.size() > n + 1;
}

bool IsUrlStart(std::string_view s) {
  return StartsWithIgnoreAsciiCase(s, "http://") ||
         StartsWithIgnoreAsciiCase(s, "https://") ||
         StartsWithIgnoreAsciiCase(s, "ftp://") ||
         StartsWithIgnoreAsciiCase(s, "//") ||
         StartsWithIgnoreAsciiCase(s, "mailto:") ||
         StartsWithIgnoreAsciiCase(s, "news:");
}

bool AtLineStart(std::string_view s, size_t i) {
  while (i > 0) {
    char c = s[i - 1];
    if (c == '\n') return true;
    if (c != ' ' && c != '\t') return false;
    --i;
  }
  return true;
}

size_t FindIgnoreCase(std::string_view s, std::string_view needle, size_t from,
                      size_t end) {
  if (needle.empty() || end < needle.size()) return std::string_view::npos;
  for (size_t i = from; i + needle.size() <= end; ++i) {
    if (AsciiToLower(s[i]) == AsciiToLower(needle[0]) &&
        EqualsIgnoreAsciiCase(s.substr(i, needle.size()), needle)) {
      return i;
    }
  }
  return std::string_view::npos;
}

// Open position -> position of the matching closing delimiter, computed with
// a stack in one pass so unmatched openers cost nothing to look up.
class DelimiterMatches {
 public:
  void Add(size_t open, size_t close) { pairs_.emplace_back(open, close); }
  void Finish() { std::sort(pairs_.begin(), pairs_.end()); }

  size_t CloseOf(size_t open) const {
    auto it = std::lower_bound(
        pairs_.begin(), pairs_.end(), std::make_pair(open, size_t{0}));
    if (it == pairs_.end() || it->first != open) return std::string_view::npos;
    return it->second;
  }

 private:
  std::vector<std::pair<size_t, size_t>> pairs_;
};

void MatchPairs(std::string_view s, char open, char close,
                DelimiterMatches *out) {
  std::vector<size_t> stack;
  size_t i = 0;
  while (i + 1 < s.size()) {
    if (s[i] == open && s[i + 1] == open) {
      stack.push_back(i);
      i += 2;
    } else if (s[i] == close && s[i + 1] == close && !stack.empty()) {
      out->Add(stack.back(), i);
      stack.pop_back();
      i += 2;
    } else {
      ++i;
    }
  }
  out->Finish();
}

void MatchTables(std::string_view s, DelimiterMatches *out) {
  std::vector<size_t> stack;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '{' && s[i + 1] == '|' && AtLineStart(s, i)) {
      stack.push_back(i);
      ++i;
    } else if (s[i] == '|' && s[i + 1] == '}' && !stack.empty() &&
               AtLineStart(s, i)) {
      out->Add(stack.back(), i);
      stack.pop_back();
      ++i;
    }
  }
  out->Finish();
}

class Stripper {
 public:
  explicit Stripper(std::string_view src) : src_(src) {
    MatchPairs(src_, '{', '}', &templates_);
    MatchPairs(src_, '[', ']', &links_);
    MatchTables(src_, &tables_);
  }

  StrippedText Run() {
    Process(0, src_.size(), /*anchors=*/true, /*depth=*/0);
    while (!out_.empty() && IsAsciiSpace(out_.back())) out_.pop_back();
    StrippedText result;
    result.plain_text = std::move(out_);
    result.anchors = std::move(anchors_);
    result.warnings = std::move(warnings_);
    return result;
  }

 private:
  void Warn(const char *kind, size_t offset) {
    warnings_.push_back({kind, offset});
  }

  void Removed() {
    if (pending_space_) removed_since_space_ = true;
  }

  void FlushSpace(char next) {
    if (!pending_space_) return;
    bool drop = out_.empty() || out_.back() == '\n' ||
                (removed_since_space_ && std::strchr(",.;:!?)", next) != nullptr &&
                 next != '\0');
    if (!drop) out_.push_back(' ');
    pending_space_ = false;
    removed_since_space_ = false;
  }

  void Emit(char c) {
    FlushSpace(c);
    out_.push_back(c);
  }

  void Emit(std::string_view s) {
    if (s.empty()) return;
    FlushSpace(s.front());
    out_.append(s);
  }

  void Newline() {
    pending_space_ = false;
    removed_since_space_ = false;
    if (out_.empty()) return;
    size_t n = out_.size();
    if (n >= 2 && out_[n - 1] == '\n' && out_[n - 2] == '\n') return;
    out_.push_back('\n');
  }

  // Handles headings, rules and list markers at the start of a line. Returns
  // the position where ordinary processing continues.
  size_t LineStart(size_t i, size_t end) {
    size_t eol = src_.find('\n', i);
    if (eol == std::string_view::npos || eol > end) eol = end;
    std::string_view line = TrimView(src_.substr(i, eol - i));
    if (line.size() >= 2 && line.front() == '=' && line.back() == '=') {
      Removed();
      return eol;
    }
    if (line.starts_with("----")) {
      Removed();
      return eol;
    }
    while (i < eol && std::strchr("*#:;", src_[i]) != nullptr) ++i;
    return i;
  }

  void Process(size_t begin, size_t end, bool anchors, int depth) {
    size_t i = begin;
    if (depth == 0 && i < end && AtLineStart(src_, i)) i = LineStart(i, end);
    while (i < end) {
      char c = src_[i];
      switch (c) {
        case '\n':
          Newline();
          i = LineStart(i + 1, end);
          continue;
        case ' ':
        case '\t':
        case '\r':
          pending_space_ = true;
          ++i;
          continue;
        case '<':
          i = HandleAngle(i, end);
          continue;
        case '{':
          i = HandleBrace(i, end);
          continue;
        case '[':
          i = HandleBracket(i, end, anchors, depth);
          continue;
        case '\'':
          i = HandleQuotes(i, end);
          continue;
        case '&':
          i = HandleEntity(i, end);
          continue;
        case '_':
          i = HandleMagicWord(i, end);
          continue;
        default: {
          // Copy a run of ordinary characters in one go.
          size_t j = i + 1;
          while (j < end && std::strchr("\n \t\r<{['&_", src_[j]) == nullptr) {
            ++j;
          }
          Emit(src_.substr(i, j - i));
          i = j;
        }
      }
    }
  }

  size_t HandleAngle(size_t i, size_t end) {
    if (src_.compare(i, 4, "<!--") == 0) {
      size_t close = std::string_view::npos;
      if (i >= comment_close_missing_after_) {
        close = std::string_view::npos;
      } else {
        close = src_.find("-->", i + 4);
        if (close == std::string_view::npos) comment_close_missing_after_ = i;
      }
      if (close == std::string_view::npos || close + 3 > end) {
        Warn("unbalanced_comment", i);
        Emit('<');
        return i + 1;
      }
      Removed();
      return close + 3;
    }

    // <name ...>, </name>, <name/>.
    size_t j = i + 1;
    bool closing = j < end && src_[j] == '/';
    if (closing) ++j;
    size_t name_start = j;
    while (j < end && (IsAsciiAlpha(src_[j]) || IsAsciiDigit(src_[j]))) ++j;
    if (j == name_start || !IsAsciiAlpha(src_[name_start])) {
      Emit('<');
      return i + 1;
    }
    std::string name = AsciiLower(src_.substr(name_start, j - name_start));
    if (!Contains(kDropContentTags, name) && !Contains(kInlineTags, name) &&
        name != "nowiki") {
      Emit('<');
      return i + 1;
    }
    size_t limit = std::min(end, i + 1024);
    size_t gt = j;
    while (gt < limit && src_[gt] != '>' && src_[gt] != '<') ++gt;
    if (gt >= limit || src_[gt] != '>') {
      Emit('<');
      return i + 1;
    }
    bool self_closing = src_[gt - 1] == '/';
    size_t after = gt + 1;

    if (!closing && !self_closing && Contains(kDropContentTags, name)) {
      size_t close = FindClosingTag(name, after, end);
      if (close == std::string_view::npos) {
        Warn("unclosed_tag", i);
        Removed();
        return after;
      }
      size_t close_gt = src_.find('>', close);
      Removed();
      return close_gt == std::string_view::npos || close_gt >= end
                 ? end
                 : close_gt + 1;
    }
    if (!closing && !self_closing && name == "nowiki") {
      size_t close = FindClosingTag(name, after, end);
      if (close != std::string_view::npos) {
        std::string literal = DecodeEntities(src_.substr(after, close - after));
        for (char ch : literal) {
          if (IsAsciiSpace(ch)) {
            pending_space_ = true;
          } else {
            Emit(ch);
          }
        }
        size_t close_gt = src_.find('>', close);
        return close_gt == std::string_view::npos || close_gt >= end
                   ? end
                   : close_gt + 1;
      }
    }
    if (name == "br") {
      pending_space_ = true;
    } else {
      Removed();
    }
    return after;
  }

  size_t FindClosingTag(const std::string &name, size_t from, size_t end) {
    auto it = closing_missing_after_.find(name);
    if (it != closing_missing_after_.end() && from >= it->second) {
      return std::string_view::npos;
    }
    std::string needle = "</" + name;
    size_t hit = FindIgnoreCase(src_, needle, from, src_.size());
    if (hit == std::string_view::npos) {
      closing_missing_after_[name] = from;
      return hit;
    }
    return hit + needle.size() <= end ? hit : std::string_view::npos;
  }

  size_t HandleBrace(size_t i, size_t end) {
    if (i + 1 < end && src_[i + 1] == '{') {
      size_t close = templates_.CloseOf(i);
      if (close == std::string_view::npos || close + 2 > end) {
        Warn("unbalanced_template", i);
        Emit("{{");
        return i + 2;
      }
      Removed();
      return close + 2;
    }
    if (i + 1 < end && src_[i + 1] == '|' && AtLineStart(src_, i)) {
      size_t close = tables_.CloseOf(i);
      if (close == std::string_view::npos || close + 2 > end) {
        Warn("unbalanced_table", i);
        Emit("{|");
        return i + 2;
      }
      Removed();
      return close + 2;
    }
    Emit('{');
    return i + 1;
  }

  size_t HandleBracket(size_t i, size_t end, bool anchors, int depth) {
    if (i + 1 < end && src_[i + 1] == '[') {
      size_t close = links_.CloseOf(i);
      if (close == std::string_view::npos || close + 2 > end ||
          depth >= kMaxDepth) {
        Warn("unbalanced_link", i);
        Emit("[[");
        return i + 2;
      }
      return HandleLink(i, close, end, anchors, depth);
    }
    if (IsUrlStart(src_.substr(i + 1, std::min<size_t>(8, end - i - 1)))) {
      size_t close = i + 1;
      while (close < end && src_[close] != ']' && src_[close] != '\n') ++close;
      if (close < end && src_[close] == ']' && depth < kMaxDepth) {
        size_t space = i + 1;
        while (space < close && src_[space] != ' ') ++space;
        if (space < close) {
          Process(space + 1, close, /*anchors=*/false, depth + 1);
        } else {
          Removed();
        }
        return close + 1;
      }
    }
    Emit('[');
    return i + 1;
  }

  // [[target]], [[target|label]], [[target|]]; `close` is the position of "]]".
  size_t HandleLink(size_t open, size_t close, size_t end, bool anchors,
                    int depth) {
    size_t inner = open + 2;
    std::string_view body = src_.substr(inner, close - inner);
    size_t pipe = body.find('|');
    std::string_view target_raw =
        TrimView(pipe == std::string_view::npos ? body : body.substr(0, pipe));
    bool leading_colon = !target_raw.empty() && target_raw[0] == ':';
    if (leading_colon) target_raw = TrimView(target_raw.substr(1));

    bool article = true;
    std::string_view title_part = target_raw;
    size_t colon = target_raw.find(':');
    if (colon != std::string_view::npos) {
      std::string prefix = AsciiLower(TrimView(target_raw.substr(0, colon)));
      std::replace(prefix.begin(), prefix.end(), '_', ' ');
      if (Contains(kDroppedLinkNamespaces, prefix)) {
        if (!leading_colon) {
          Removed();
          return close + 2;
        }
        article = false;
      } else if (Contains(kForeignLinkNamespaces, prefix)) {
        article = false;
      } else if (LooksLikeLanguagePrefix(prefix)) {
        if (!leading_colon) {
          Removed();
          return close + 2;
        }
        article = false;
      }
      if (!article) title_part = TrimView(target_raw.substr(colon + 1));
    }

    FlushSpace('x');
    size_t start = out_.size();
    if (pipe != std::string_view::npos && !TrimView(body.substr(pipe + 1)).empty()) {
      Process(inner + pipe + 1, close, /*anchors=*/false, depth + 1);
    } else if (pipe != std::string_view::npos) {
      Emit(StripParenthetical(title_part));
    } else {
      Emit(DecodeEntities(target_raw));
    }
    size_t next = close + 2;
    while (next < end && IsAsciiLower(src_[next])) Emit(src_[next++]);

    size_t mention_start = start;
    size_t mention_end = out_.size();
    while (mention_start < mention_end && IsAsciiSpace(out_[mention_start])) {
      ++mention_start;
    }
    while (mention_end > mention_start && IsAsciiSpace(out_[mention_end - 1])) {
      --mention_end;
    }
    std::string target = article ? CanonicalizeTitle(DecodeEntities(target_raw))
                                 : std::string();
    if (anchors && article && !target.empty() && mention_end > mention_start) {
      anchors_.push_back({out_.substr(mention_start, mention_end - mention_start),
                          std::move(target), mention_start, mention_end});
    }
    return next;
  }

  size_t HandleQuotes(size_t i, size_t end) {
    size_t j = i;
    while (j < end && src_[j] == '\'') ++j;
    size_t run = j - i;
    if (run == 1) {
      Emit('\'');
    } else if (run == 4) {
      Emit('\'');
    } else if (run > 5) {
      Emit(std::string(run - 5, '\''));
    }
    return j;
  }

  size_t HandleEntity(size_t i, size_t end) {
    size_t semi = src_.find(';', i);
    if (semi == std::string_view::npos || semi >= end || semi - i > 10) {
      Emit('&');
      return i + 1;
    }
    std::string_view ref = src_.substr(i, semi - i + 1);
    if (ref == "&nbsp;" || ref == "&#160;") {
      pending_space_ = true;
      return semi + 1;
    }
    std::string decoded = DecodeEntities(ref);
    if (decoded == ref) {
      Emit('&');
      return i + 1;
    }
    Emit(decoded);
    return semi + 1;
  }

  // __TOC__, __NOTOC__ and friends.
  size_t HandleMagicWord(size_t i, size_t end) {
    if (i + 4 < end && src_[i + 1] == '_') {
      size_t j = i + 2;
      while (j < end && IsAsciiUpper(src_[j])) ++j;
      if (j > i + 2 && j + 1 < end && src_[j] == '_' && src_[j + 1] == '_') {
        Removed();
        return j + 2;
      }
    }
    Emit('_');
    return i + 1;
  }

  std::string_view src_;
  DelimiterMatches templates_;
  DelimiterMatches links_;
  DelimiterMatches tables_;
  std::map<std::string, size_t> closing_missing_after_;
  size_t comment_close_missing_after_ = std::string_view::npos;

  std::string out_;
  std::vector<LinkAnchor> anchors_;
  std::vector<StripWarning> warnings_;
  bool pending_space_ = false;
  bool removed_since_space_ = false;
};

}  // namespace

StrippedText StripWikitext(std::string_view markup) {
  return Stripper(markup).Run();
}

CleanPage CleanRawPage(const RawPage &page) {
  StrippedText stripped = StripWikitext(page.markup);
  CleanPage clean;
  clean.title = page.title;
  clean.page_id = page.page_id;
  clean.plain_text = std::move(stripped.plain_text);
  clean.anchors = std::move(stripped.anchors);
  clean.warnings = std::move(stripped.warnings);
  return clean;
}

}  // namespace verforge
