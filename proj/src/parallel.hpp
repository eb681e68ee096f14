// Copyright 2026 The twinsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "twinsieve/interval.hpp"

namespace twinsieve::detail {

// Splits [lo, hi] into at most `pieces` contiguous, ordered subranges.
inline std::vector<Interval> split_range(const Interval& range, unsigned pieces) {
  pieces = std::max(1U, pieces);
  const std::uint64_t len = range.length();
  const std::uint64_t count = std::min<std::uint64_t>(pieces, len);
  std::vector<Interval> out;
  out.reserve(count);
  std::uint64_t lo = range.lo();
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t part = len / count + (i < len % count ? 1 : 0);
    out.emplace_back(lo, lo + part - 1);
    lo += part;
  }
  return out;
}

// Runs fn(piece) for every piece, one thread per piece beyond the first,
// and returns results in piece order. Rethrows the first failure.
template <class Result, class Fn>
std::vector<Result> map_pieces(const std::vector<Interval>& pieces, Fn fn) {
  std::vector<Result> results(pieces.size());
  std::vector<std::exception_ptr> errors(pieces.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = fn(pieces[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 1; i < pieces.size(); ++i) threads.emplace_back(work, i);
    if (!pieces.empty()) work(0);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace twinsieve::detail
