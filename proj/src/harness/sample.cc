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
#include <charconv>
#include <cmath>
#include <numeric>

#include "verforge/error.h"
#include "verforge/harness.h"
#include "verforge/rng.h"
#include "verforge/text.h"

namespace verforge {

SampleSpec SampleSpec::Fraction(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw UsageError("sample fraction must be in (0, 1]");
  }
  SampleSpec spec;
  spec.fraction_ = fraction;
  return spec;
}

SampleSpec SampleSpec::Count(size_t count) {
  if (count == 0) throw UsageError("sample count must be positive");
  SampleSpec spec;
  spec.count_ = count;
  return spec;
}

SampleSpec SampleSpec::Parse(std::string_view text) {
  std::string_view t = TrimView(text);
  if (t.empty()) throw UsageError("empty sample spec");
  if (t.back() == '%') {
    double percent = 0;
    std::string s(t.substr(0, t.size() - 1));
    try {
      size_t used = 0;
      percent = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception &) {
      throw UsageError("bad sample spec '" + std::string(t) + "'");
    }
    return Fraction(percent / 100.0);
  }
  if (t.find('.') != std::string_view::npos) {
    std::string s(t);
    try {
      size_t used = 0;
      double f = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Fraction(f);
    } catch (const std::invalid_argument &) {
      throw UsageError("bad sample spec '" + s + "'");
    }
  }
  size_t count = 0;
  auto r = std::from_chars(t.data(), t.data() + t.size(), count);
  if (r.ec != std::errc() || r.ptr != t.data() + t.size()) {
    throw UsageError("bad sample spec '" + std::string(t) + "'");
  }
  return Count(count);
}

size_t SampleSpec::Resolve(size_t corpus_size) const {
  if (fraction_) {
    return static_cast<size_t>(
        std::llround(*fraction_ * static_cast<double>(corpus_size)));
  }
  if (count_ > corpus_size) {
    throw DataError("sample of " + std::to_string(count_) +
                    " exceeds corpus size " + std::to_string(corpus_size));
  }
  return count_;
}

std::vector<size_t> SampleIndices(size_t corpus_size, size_t count,
                                  uint64_t seed) {
  if (count > corpus_size) {
    throw DataError("sample of " + std::to_string(count) +
                    " exceeds corpus size " + std::to_string(corpus_size));
  }
  std::vector<size_t> order(corpus_size);
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(seed);
  for (size_t i = 0; i < count; ++i) {
    size_t j = static_cast<size_t>(rng.UniformInt(i, corpus_size - 1));
    std::swap(order[i], order[j]);
  }
  order.resize(count);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Example> SampleLowResource(std::span<const Example> examples,
                                       const SampleSpec &spec, uint64_t seed) {
  std::vector<Example> out;
  for (size_t i : SampleIndices(examples.size(), spec.Resolve(examples.size()),
                                seed)) {
    out.push_back(examples[i]);
  }
  return out;
}

}  // namespace verforge
