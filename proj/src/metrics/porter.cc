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

#include <string>

#include "verforge/metrics.h"
#include "verforge/text.h"

namespace verforge {

namespace {

// Direct port of the reference implementation's buffer walk: b_ holds the
// word, k_ is the last index of the current stem and j_ a general offset.
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word) : b_(word) {}

  std::string Run() {
    k_ = static_cast<int>(b_.size()) - 1;
    if (k_ <= 1) return b_;
    Step1ab();
    if (k_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    b_.resize(static_cast<size_t>(k_ + 1));
    return b_;
  }

 private:
  bool Cons(int i) const {
    switch (b_[i]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !Cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0..j_].
  int M() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!Cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (Cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!Cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!Cons(i)) return true;
    }
    return false;
  }

  bool DoubleC(int j) const {
    if (j < 1) return false;
    if (b_[j] != b_[j - 1]) return false;
    return Cons(j);
  }

  bool Cvc(int i) const {
    if (i < 2 || !Cons(i) || Cons(i - 1) || !Cons(i - 2)) return false;
    char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool Ends(std::string_view s) {
    int length = static_cast<int>(s.size());
    if (s.back() != b_[k_]) return false;
    if (length > k_ + 1) return false;
    if (b_.compare(k_ - length + 1, length, s) != 0) return false;
    j_ = k_ - length;
    return true;
  }

  void SetTo(std::string_view s) {
    b_.replace(j_ + 1, std::string::npos, s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void R(std::string_view s) {
    if (M() > 0) SetTo(s);
  }

  void Step1ab() {
    if (b_[k_] == 's') {
      if (Ends("sses")) {
        k_ -= 2;
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (b_[k_ - 1] != 's') {
        --k_;
      }
    }
    b_.resize(k_ + 1);
    if (Ends("eed")) {
      if (M() > 0) --k_;
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      k_ = j_;
      b_.resize(k_ + 1);
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleC(k_)) {
        --k_;
        char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (j_ = k_, M() == 1 && Cvc(k_)) {
        SetTo("e");
      }
    }
    b_.resize(k_ + 1);
  }

  void Step1c() {
    if (Ends("y") && VowelInStem()) b_[k_] = 'i';
  }

  // Tries each (suffix, replacement) in order; the first suffix that matches
  // ends the step whether or not the measure allows the replacement.
  template <size_t N>
  void Replace(const std::pair<std::string_view, std::string_view> (&rules)[N]) {
    for (const auto &[suffix, replacement] : rules) {
      if (Ends(suffix)) {
        R(replacement);
        return;
      }
    }
  }

  void Step2() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'a': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"ational", "ate"}, {"tional", "tion"}};
        Replace(r);
        break;
      }
      case 'c': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"enci", "ence"}, {"anci", "ance"}};
        Replace(r);
        break;
      }
      case 'e': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"izer", "ize"}};
        Replace(r);
        break;
      }
      case 'l': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"bli", "ble"}, {"alli", "al"}, {"entli", "ent"},
            {"eli", "e"},   {"ousli", "ous"}};
        Replace(r);
        break;
      }
      case 'o': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
        Replace(r);
        break;
      }
      case 's': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"},
            {"ousness", "ous"}};
        Replace(r);
        break;
      }
      case 't': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        Replace(r);
        break;
      }
      case 'g': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"logi", "log"}};
        Replace(r);
        break;
      }
      default:
        break;
    }
  }

  void Step3() {
    switch (b_[k_]) {
      case 'e': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        Replace(r);
        break;
      }
      case 'i': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"iciti", "ic"}};
        Replace(r);
        break;
      }
      case 'l': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"ical", "ic"}, {"ful", ""}};
        Replace(r);
        break;
      }
      case 's': {
        static const std::pair<std::string_view, std::string_view> r[] = {
            {"ness", ""}};
        Replace(r);
        break;
      }
      default:
        break;
    }
  }

  bool EndsAny(std::initializer_list<std::string_view> suffixes) {
    for (std::string_view s : suffixes) {
      if (Ends(s)) return true;
    }
    return false;
  }

  void Step4() {
    if (k_ < 1) return;
    bool found = false;
    switch (b_[k_ - 1]) {
      case 'a':
        found = Ends("al");
        break;
      case 'c':
        found = EndsAny({"ance", "ence"});
        break;
      case 'e':
        found = Ends("er");
        break;
      case 'i':
        found = Ends("ic");
        break;
      case 'l':
        found = EndsAny({"able", "ible"});
        break;
      case 'n':
        found = EndsAny({"ant", "ement", "ment", "ent"});
        break;
      case 'o':
        if (Ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) {
          found = true;
        } else {
          found = Ends("ou");
        }
        break;
      case 's':
        found = Ends("ism");
        break;
      case 't':
        found = EndsAny({"ate", "iti"});
        break;
      case 'u':
        found = Ends("ous");
        break;
      case 'v':
        found = Ends("ive");
        break;
      case 'z':
        found = Ends("ize");
        break;
      default:
        break;
    }
    if (found && M() > 1) k_ = j_;
  }

  void Step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      int a = M();
      if (a > 1 || (a == 1 && !Cvc(k_ - 1))) --k_;
    }
    if (b_[k_] == 'l' && DoubleC(k_) && M() > 1) --k_;
  }

  std::string b_;
  int k_ = 0;
  int j_ = 0;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  if (word.empty()) return std::string();
  for (char c : word) {
    if (!IsAsciiLower(c)) return std::string(word);
  }
  return PorterStemmer(word).Run();
}

}  // namespace verforge
