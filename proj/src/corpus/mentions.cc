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

#include "verforge/corpus.h"
#include "verforge/text.h"

namespace verforge {

MentionMap::MentionMap(std::string source_page)
    : source_page_(std::move(source_page)) {}

bool MentionMap::Add(std::string_view mention, std::string_view entity,
                     bool title_surface) {
  std::string key(mention);
  if (key.empty() || entity.empty()) return false;
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (it->second != entity) ++collisions_;
    return false;
  }
  entries_.emplace(key, std::string(entity));
  by_lower_[AsciiLower(key)].push_back(key);
  if (title_surface) title_surfaces_.insert(key);
  auto pos = std::lower_bound(lengths_.begin(), lengths_.end(), key.size(),
                              std::greater<size_t>());
  if (pos == lengths_.end() || *pos != key.size()) {
    lengths_.insert(pos, key.size());
  }
  return true;
}

const std::string *MentionMap::Find(std::string_view mention) const {
  auto it = entries_.find(std::string(mention));
  return it == entries_.end() ? nullptr : &it->second;
}

const std::vector<std::string> *MentionMap::FindLowered(
    std::string_view lowered) const {
  auto it = by_lower_.find(std::string(lowered));
  return it == by_lower_.end() ? nullptr : &it->second;
}

MentionMap BuildMentionMap(const CleanPage &page) {
  MentionMap map(page.title);
  map.Add(page.title, page.title, /*title_surface=*/true);
  map.Add(StripParenthetical(page.title), page.title, /*title_surface=*/true);
  for (const LinkAnchor &anchor : page.anchors) {
    map.Add(anchor.mention, anchor.target);
  }
  return map;
}

std::vector<MentionMatch> FindMentions(std::string_view sentence,
                                       const MentionMap &map,
                                       std::set<std::string> *seen) {
  std::vector<MentionMatch> matches;
  std::string lowered;
  size_t p = 0;
  while (p < sentence.size()) {
    if (p > 0 && IsWordChar(sentence[p - 1]) && IsWordChar(sentence[p])) {
      ++p;
      continue;
    }
    bool matched = false;
    for (size_t len : map.lengths()) {
      if (len > sentence.size() - p) continue;
      size_t end = p + len;
      if (end < sentence.size() && IsWordChar(sentence[end]) &&
          IsWordChar(sentence[end - 1])) {
        continue;
      }
      std::string_view candidate = sentence.substr(p, len);
      const std::string *surface = nullptr;
      if (map.Find(candidate) != nullptr) {
        if (seen != nullptr) seen->insert(std::string(candidate));
        surface = &map.entries().find(std::string(candidate))->first;
      } else {
        lowered = AsciiLower(candidate);
        if (const auto *options = map.FindLowered(lowered)) {
          for (const std::string &option : *options) {
            if (map.IsTitleSurface(option) ||
                (seen != nullptr && seen->count(option) > 0)) {
              surface = &option;
              break;
            }
          }
        }
      }
      if (surface == nullptr) continue;
      matches.push_back({p, end, std::string(candidate), *map.Find(*surface)});
      p = end;
      matched = true;
      break;
    }
    if (!matched) ++p;
  }
  return matches;
}

}  // namespace verforge
