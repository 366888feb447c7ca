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

#include <fstream>
#include <iterator>

#include "verforge/error.h"
#include "verforge/jsonl.h"
#include "verforge/retrieval.h"

namespace verforge {

namespace {

constexpr char kMagic[8] = {'V', 'E', 'R', 'F', 'I', 'D', 'X', '\0'};

class Writer {
 public:
  void U32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  void U64(uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  void Str(std::string_view s) {
    U64(s.size());
    out_.append(s);
  }
  void Raw(const char *data, size_t n) { out_.append(data, n); }
  const std::string &bytes() const { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  Reader(std::string_view data, const std::string &path)
      : data_(data), path_(path) {}

  uint32_t U32() {
    Need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<uint32_t>(static_cast<unsigned char>(data_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 4;
    return v;
  }
  uint64_t U64() {
    Need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(data_[pos_ + i]))
           << (8 * i);
    }
    pos_ += 8;
    return v;
  }
  std::string Str() {
    uint64_t n = U64();
    Need(n);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view Raw(size_t n) {
    Need(n);
    std::string_view s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool AtEnd() const { return pos_ == data_.size(); }
  [[noreturn]] void Fail(const std::string &what) const {
    throw DataError("corrupt index " + path_ + " at byte " +
                    std::to_string(pos_) + ": " + what);
  }

 private:
  void Need(uint64_t n) {
    if (n > data_.size() - pos_) Fail("truncated");
  }

  std::string_view data_;
  size_t pos_ = 0;
  const std::string &path_;
};

void WriteStrings(Writer &w, const std::vector<std::string> &v) {
  w.U64(v.size());
  for (const std::string &s : v) w.Str(s);
}

std::vector<std::string> ReadStrings(Reader &r) {
  uint64_t n = r.U64();
  std::vector<std::string> v;
  for (uint64_t i = 0; i < n; ++i) v.push_back(r.Str());
  return v;
}

}  // namespace

void OverlapIndex::Save(const std::string &path) const {
  Writer w;
  w.Raw(kMagic, sizeof(kMagic));
  w.U32(kIndexFormatVersion);
  w.U64(examples_.size());
  w.U64(entities_.size());
  for (const std::string &entity : entities_) w.Str(entity);
  for (const std::vector<ExampleId> &list : postings_) {
    w.U64(list.size());
    for (ExampleId id : list) w.U32(id);
  }
  for (const Example &e : examples_) {
    w.Str(e.source_page);
    w.U64(e.sentence_index);
    w.Str(e.sentence);
    WriteStrings(w, e.entities);
    WriteStrings(w, e.entity_ids);
  }
  WriteFileAtomically(path, std::string_view(w.bytes().data(), w.bytes().size()));
}

OverlapIndex OverlapIndex::Load(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read index " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading index " + path);

  Reader r(data, path);
  if (r.Raw(sizeof(kMagic)) != std::string_view(kMagic, sizeof(kMagic))) {
    r.Fail("bad magic");
  }
  uint32_t version = r.U32();
  if (version != kIndexFormatVersion) {
    r.Fail("unsupported format version " + std::to_string(version));
  }
  uint64_t num_examples = r.U64();
  uint64_t num_entities = r.U64();
  if (num_examples > UINT32_MAX) r.Fail("too many examples");

  OverlapIndex index;
  for (uint64_t i = 0; i < num_entities; ++i) {
    index.entities_.push_back(r.Str());
    if (i > 0 && !(index.entities_[i - 1] < index.entities_[i])) {
      r.Fail("entity dictionary not sorted");
    }
  }
  for (uint64_t i = 0; i < num_entities; ++i) {
    uint64_t n = r.U64();
    std::vector<ExampleId> list;
    for (uint64_t j = 0; j < n; ++j) {
      ExampleId id = r.U32();
      if (id >= num_examples) r.Fail("posting id out of range");
      if (!list.empty() && list.back() >= id) r.Fail("postings not ascending");
      list.push_back(id);
    }
    index.postings_.push_back(std::move(list));
  }
  for (uint64_t i = 0; i < num_examples; ++i) {
    Example e;
    e.source_page = r.Str();
    e.sentence_index = r.U64();
    e.sentence = r.Str();
    e.entities = ReadStrings(r);
    e.entity_ids = ReadStrings(r);
    if (e.entities.size() != e.entity_ids.size()) {
      r.Fail("entity lists differ in length");
    }
    index.examples_.push_back(std::move(e));
  }
  if (!r.AtEnd()) r.Fail("trailing bytes");
  for (size_t i = 0; i < index.entities_.size(); ++i) {
    index.entity_slot_.emplace(index.entities_[i], static_cast<uint32_t>(i));
  }
  return index;
}

}  // namespace verforge
