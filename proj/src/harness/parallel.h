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

#ifndef VERFORGE_HARNESS_PARALLEL_H_
#define VERFORGE_HARNESS_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace verforge::internal {

// Runs fn(i) for i in [0, n) on up to `jobs` threads, strided by worker. The
// first exception thrown by any worker is rethrown on the caller's thread.
template <typename Fn>
void ParallelFor(size_t n, size_t jobs, Fn fn) {
  jobs = std::max<size_t>(1, std::min(jobs, n));
  if (jobs <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (size_t i = w; i < n; i += jobs) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (std::thread &t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace verforge::internal

#endif  // VERFORGE_HARNESS_PARALLEL_H_
