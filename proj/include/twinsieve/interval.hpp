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

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <gmpxx.h>

namespace twinsieve {

// Inclusive range [lo, hi] of positive integers.
template <class T>
class BasicInterval {
 public:
  BasicInterval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ < 1) throw std::invalid_argument("interval bounds must be positive");
    if (hi_ < lo_) throw std::invalid_argument("interval lower bound exceeds upper bound");
  }

  const T& lo() const { return lo_; }
  const T& hi() const { return hi_; }
  T length() const { return T(hi_ - lo_ + 1); }
  bool contains(const T& v) const { return lo_ <= v && v <= hi_; }

  friend bool operator==(const BasicInterval& a, const BasicInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }
  friend std::ostream& operator<<(std::ostream& os, const BasicInterval& iv) {
    return os << '[' << iv.lo_ << ", " << iv.hi_ << ']';
  }

 private:
  T lo_;
  T hi_;
};

using Interval = BasicInterval<std::uint64_t>;
using BigInterval = BasicInterval<mpz_class>;

}  // namespace twinsieve
