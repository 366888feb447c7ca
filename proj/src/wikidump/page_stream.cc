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

#include <charconv>
#include <cstring>

#include "verforge/error.h"
#include "verforge/text.h"
#include "verforge/wikidump.h"

namespace verforge {

namespace {

bool IsNameChar(char c) {
  return !IsAsciiSpace(c) && c != '/' && c != '>' && c != '<' && c != '=';
}

bool IsRedirectMarkup(std::string_view markup) {
  return StartsWithIgnoreAsciiCase(TrimView(markup), "#redirect");
}

void AppendUtf8(uint32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

struct NamedEntity {
  const char *name;
  const char *value;
};

constexpr NamedEntity kEntities[] = {
    {"amp", "&"},          {"lt", "<"},           {"gt", ">"},
    {"quot", "\""},        {"apos", "'"},         {"nbsp", " "},
    {"ndash", "\xE2\x80\x93"}, {"mdash", "\xE2\x80\x94"},
    {"minus", "\xE2\x88\x92"}, {"times", "\xC3\x97"},
    {"hellip", "\xE2\x80\xA6"},
};

}  // namespace

std::string DecodeEntities(std::string_view s) {
  if (s.find('&') == std::string_view::npos) return std::string(s);
  std::string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      size_t amp = s.find('&', i);
      if (amp == std::string_view::npos) amp = s.size();
      out.append(s.substr(i, amp - i));
      i = amp;
      continue;
    }
    size_t semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back('&');
      ++i;
      continue;
    }
    std::string_view ref = s.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (ref.size() >= 2 && ref[0] == '#') {
      uint32_t cp = 0;
      std::from_chars_result r;
      if (ref[1] == 'x' || ref[1] == 'X') {
        r = std::from_chars(ref.data() + 2, ref.data() + ref.size(), cp, 16);
      } else {
        r = std::from_chars(ref.data() + 1, ref.data() + ref.size(), cp, 10);
      }
      if (r.ec == std::errc() && r.ptr == ref.data() + ref.size() && cp > 0 &&
          cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF)) {
        AppendUtf8(cp, &out);
        decoded = true;
      }
    } else {
      for (const NamedEntity &e : kEntities) {
        if (ref == e.name) {
          out.append(e.value);
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back('&');
      ++i;
    }
  }
  return out;
}

PageStream::PageStream(std::istream &in, size_t chunk_size)
    : in_(in), chunk_size_(chunk_size < 64 ? 64 : chunk_size) {}

bool PageStream::Fill() {
  if (eof_) return false;
  if (pos_ > 0) {
    buf_.erase(0, pos_);
    base_offset_ += pos_;
    pos_ = 0;
  }
  size_t old = buf_.size();
  buf_.resize(old + chunk_size_);
  in_.read(buf_.data() + old, static_cast<std::streamsize>(chunk_size_));
  size_t got = static_cast<size_t>(in_.gcount());
  buf_.resize(old + got);
  if (got == 0) {
    eof_ = true;
    return false;
  }
  return true;
}

bool PageStream::Ensure(size_t n) {
  while (buf_.size() - pos_ < n) {
    if (!Fill()) return false;
  }
  return true;
}

void PageStream::Fail(const std::string &what, uint64_t offset) const {
  throw DataError("malformed XML at byte " + std::to_string(offset) + ": " +
                  what);
}

void PageStream::SkipUntil(std::string_view terminator, std::string_view what) {
  uint64_t start = Offset();
  size_t rel = 0;
  while (true) {
    size_t hit = buf_.find(terminator, pos_ + rel);
    if (hit != std::string::npos) {
      pos_ = hit + terminator.size();
      return;
    }
    size_t scanned = buf_.size() - pos_;
    rel = scanned >= terminator.size() ? scanned - terminator.size() + 1 : 0;
    if (!Fill()) Fail("unterminated " + std::string(what), start);
  }
}

void PageStream::ReadText() {
  text_.clear();
  bool has_amp = false;
  while (true) {
    const char *begin = buf_.data() + pos_;
    size_t avail = buf_.size() - pos_;
    const void *lt = std::memchr(begin, '<', avail);
    size_t n = lt ? static_cast<size_t>(static_cast<const char *>(lt) - begin)
                  : avail;
    if (!has_amp && std::memchr(begin, '&', n) != nullptr) has_amp = true;
    text_.append(begin, n);
    pos_ += n;
    if (lt || !Fill()) break;
  }
  if (has_amp) text_ = DecodeEntities(text_);
}

// Reads a start or end tag; pos_ is at '<' which is not a comment, PI or
// declaration.
void PageStream::ReadTag() {
  uint64_t start = Offset();
  size_t rel = 1;
  char quote = 0;
  while (true) {
    if (pos_ + rel >= buf_.size()) {
      if (!Fill()) Fail("unterminated tag", start);
      continue;
    }
    char c = buf_[pos_ + rel];
    if (quote) {
      if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '>') {
      break;
    } else if (c == '<') {
      Fail("'<' inside tag", start);
    }
    ++rel;
  }
  std::string_view tag(buf_.data() + pos_ + 1, rel - 1);
  pos_ += rel + 1;

  bool is_end = !tag.empty() && tag[0] == '/';
  if (is_end) tag.remove_prefix(1);
  self_closing_ = !is_end && !tag.empty() && tag.back() == '/';
  if (self_closing_) tag.remove_suffix(1);

  size_t n = 0;
  while (n < tag.size() && IsNameChar(tag[n])) ++n;
  if (n == 0) Fail("missing element name", start);
  name_.assign(tag.substr(0, n));
  redirect_attr_.clear();
  if (is_end) {
    if (!TrimView(tag.substr(n)).empty()) Fail("garbage in end tag", start);
    return;
  }
  if (name_ == "redirect") {
    size_t at = tag.find("title=");
    if (at != std::string_view::npos && at + 6 < tag.size()) {
      char q = tag[at + 6];
      size_t close = tag.find(q, at + 7);
      if ((q == '"' || q == '\'') && close != std::string_view::npos) {
        redirect_attr_ = DecodeEntities(tag.substr(at + 7, close - at - 7));
      }
    }
  }
}

PageStream::Token PageStream::NextToken() {
  while (true) {
    if (!Ensure(1)) return Token::kEof;
    if (buf_[pos_] != '<') {
      ReadText();
      return Token::kText;
    }
    Ensure(9);
    std::string_view head(buf_.data() + pos_,
                          std::min<size_t>(9, buf_.size() - pos_));
    if (head.starts_with("<!--")) {
      SkipUntil("-->", "comment");
    } else if (head.starts_with("<?")) {
      SkipUntil("?>", "processing instruction");
    } else if (head.starts_with("<![CDATA[")) {
      uint64_t start = Offset();
      pos_ += 9;
      text_.clear();
      while (true) {
        size_t hit = buf_.find("]]>", pos_);
        if (hit != std::string::npos) {
          text_.append(buf_, pos_, hit - pos_);
          pos_ = hit + 3;
          break;
        }
        size_t keep = std::min<size_t>(2, buf_.size() - pos_);
        text_.append(buf_, pos_, buf_.size() - pos_ - keep);
        pos_ = buf_.size() - keep;
        if (!Fill()) Fail("unterminated CDATA section", start);
      }
      return Token::kText;
    } else if (head.starts_with("<!")) {
      SkipUntil(">", "declaration");
    } else {
      bool is_end = head.size() > 1 && head[1] == '/';
      ReadTag();
      return is_end ? Token::kEnd : Token::kStart;
    }
  }
}

bool PageStream::Next(RawPage *page) {
  enum class Field { kNone, kTitle, kNs, kId, kText };
  Field field = Field::kNone;
  bool in_page = false;
  bool redirect = false;
  bool has_id = false;
  std::string ns_text;
  std::string id_text;

  while (true) {
    uint64_t token_start = Offset();
    switch (NextToken()) {
      case Token::kEof:
        if (!stack_.empty()) {
          Fail("unexpected end of input inside <" + stack_.back() + ">",
               Offset());
        }
        return false;

      case Token::kText:
        if (stack_.empty()) {
          if (!TrimView(text_).empty()) {
            Fail("text outside the root element", token_start);
          }
        } else if (field == Field::kTitle) {
          page->title += text_;
        } else if (field == Field::kNs) {
          ns_text += text_;
        } else if (field == Field::kId) {
          id_text += text_;
        } else if (field == Field::kText) {
          page->markup += text_;
        }
        break;

      case Token::kStart: {
        if (stack_.empty() && seen_root_) {
          Fail("multiple root elements", token_start);
        }
        seen_root_ = true;
        const size_t depth = stack_.size();
        const bool child_of_page = in_page && stack_.back() == "page";
        if (name_ == "page" && !in_page) {
          in_page = true;
          redirect = false;
          has_id = false;
          ns_text.clear();
          id_text.clear();
          page->title.clear();
          page->markup.clear();
          page->page_id = 0;
          page->ns = 0;
        } else if (child_of_page && name_ == "title") {
          field = Field::kTitle;
        } else if (child_of_page && name_ == "ns") {
          field = Field::kNs;
        } else if (child_of_page && name_ == "id" && !has_id) {
          field = Field::kId;
          has_id = true;
        } else if (child_of_page && name_ == "redirect") {
          redirect = true;
        } else if (in_page && name_ == "text" && depth >= 2 &&
                   stack_[depth - 1] == "revision" &&
                   stack_[depth - 2] == "page") {
          field = Field::kText;
          page->markup.clear();
        }
        if (!self_closing_) {
          stack_.push_back(name_);
        } else {
          field = Field::kNone;
        }
        break;
      }

      case Token::kEnd: {
        if (stack_.empty()) {
          Fail("unexpected end tag </" + name_ + ">", token_start);
        }
        if (stack_.back() != name_) {
          Fail("mismatched end tag </" + name_ + ">, expected </" +
                   stack_.back() + ">",
               token_start);
        }
        stack_.pop_back();
        field = Field::kNone;
        if (name_ == "page" && in_page) {
          in_page = false;
          ++pages_seen_;
          int ns = 0;
          std::string_view ns_view = TrimView(ns_text);
          if (!ns_view.empty()) {
            auto r = std::from_chars(ns_view.data(),
                                     ns_view.data() + ns_view.size(), ns);
            if (r.ec != std::errc() || r.ptr != ns_view.data() + ns_view.size()) {
              ns = -1;
            }
          }
          std::string_view id_view = TrimView(id_text);
          uint64_t id = 0;
          std::from_chars(id_view.data(), id_view.data() + id_view.size(), id);
          page->ns = ns;
          page->page_id = id;
          page->title = Trim(page->title);
          if (redirect || IsRedirectMarkup(page->markup)) {
            ++skipped_.redirect;
          } else if (ns != 0) {
            ++skipped_.non_article;
          } else if (page->title.empty()) {
            ++skipped_.invalid;
          } else {
            return true;
          }
        }
        break;
      }
    }
  }
}

}  // namespace verforge
