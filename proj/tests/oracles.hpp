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

// Test-only reference computations. Nothing here touches PrimeTable or the
// sieve code: primes come from trial division and omega membership from the
// coprimality definition on 6x - 1 and 6x + 1.

#include <cstdint>
#include <vector>

namespace twinsieve::oracle {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 2; v <= limit; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

// First `count` primes, 1-based access via at(n - 1).
inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 2; out.size() < count; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

// 6x - 1 and 6x + 1 coprime to every prime among p_3..p_n.
inline bool omega(std::uint64_t x, std::size_t n, const std::vector<std::uint64_t>& primes) {
  for (std::size_t i = 3; i <= n; ++i) {
    const std::uint64_t p = primes[i - 1];
    if ((6 * x - 1) % p == 0 || (6 * x + 1) % p == 0) return false;
  }
  return true;
}

inline bool twin(std::uint64_t x) { return is_prime(6 * x - 1) && is_prime(6 * x + 1); }

inline std::uint64_t origin(std::uint64_t p) { return (p * p - 1) / 6; }

inline std::uint64_t period(std::size_t n, const std::vector<std::uint64_t>& primes) {
  std::uint64_t r = 1;
  for (std::size_t i = 3; i <= n; ++i) r *= primes[i - 1];
  return r;
}

}  // namespace twinsieve::oracle
