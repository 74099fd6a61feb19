// Copyright 2026 The prenorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRENORM_PARALLEL_HPP_
#define PRENORM_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace prenorm {

// Runs body(begin, end) over `jobs` contiguous slices of [0, count). The
// slicing depends only on count and jobs; results must be written to
// disjoint locations. The first exception thrown by any slice is rethrown.
template <class Body>
void parallel_slices(std::uint64_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * jobs) {
    body(std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(jobs);
  const std::uint64_t step = (count + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t begin = std::min<std::uint64_t>(count, j * step);
    const std::uint64_t end = std::min<std::uint64_t>(count, begin + step);
    threads.emplace_back([&, j, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// out[i] = fn(i), evaluated by `jobs` workers; output order is index order.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::uint64_t count, unsigned jobs, Fn&& fn) {
  std::vector<Result> out(count);
  parallel_slices(count, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) out[i] = fn(i);
  });
  return out;
}

}  // namespace prenorm

#endif  // PRENORM_PARALLEL_HPP_
