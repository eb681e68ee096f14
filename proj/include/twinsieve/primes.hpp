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

// Prime infrastructure: an Eratosthenes prime table used as the independent
// oracle, 1-based prime indexing (p_1 = 2), pi(z), p_hat(x), and the
// generator function kappa(p) for primes >= 5.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace twinsieve {

enum class PrimeClass {
  kMinus,  // p = -1 (mod 6)
  kPlus,   // p = +1 (mod 6)
};

// Largest supported table limit; primes are stored as 32-bit values.
inline constexpr std::uint64_t kMaxTableLimit = 4'000'000'000ULL;

// Immutable table of all primes <= limit, backed by a packed bitmap over the
// odd numbers (bit i <-> 2i + 3). Safe for concurrent reads.
class PrimeTable {
 public:
  std::uint64_t limit() const { return limit_; }
  std::size_t size() const { return primes_.size(); }
  std::span<const std::uint32_t> primes() const { return primes_; }

  // Membership for v in [0, limit]; InsufficientTable above the limit.
  bool is_prime(std::uint64_t v) const;

  // 1-based: nth_prime(1) == 2. std::out_of_range past the table.
  std::uint64_t nth_prime(std::size_t n) const;

  // Number of primes <= z. InsufficientTable when z > limit.
  std::size_t prime_count(std::uint64_t z) const;

  // Largest prime >= 5 not exceeding sqrt(6x + 1), or nullopt for x <= 3.
  std::optional<std::uint64_t> p_hat(std::uint64_t x) const;

  // Raw bitmap words, exposed for the on-disk cache.
  std::span<const std::uint64_t> odd_bitmap() const { return odd_bits_; }

 private:
  friend PrimeTable build_prime_table(std::uint64_t limit);
  friend PrimeTable prime_table_from_bitmap(std::uint64_t limit, std::vector<std::uint64_t> bits);

  PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> bits);

  std::uint64_t limit_;
  std::vector<std::uint64_t> odd_bits_;
  std::vector<std::uint32_t> primes_;
};

// Segmented sieve of Eratosthenes. std::invalid_argument for limit < 3 or
// limit > kMaxTableLimit.
PrimeTable build_prime_table(std::uint64_t limit);

// Rebuilds a table from a bitmap produced by odd_bitmap(). The bitmap is
// trusted; use load_prime_table() for untrusted input.
PrimeTable prime_table_from_bitmap(std::uint64_t limit, std::vector<std::uint64_t> bits);

// Binary cache: magic "TWSPRIME", u32 version, u64 limit, u64 word count,
// u64 FNV-1a checksum of the bitmap bytes, then the bitmap words. All
// integers little-endian.
void save_prime_table(const PrimeTable& table, const std::filesystem::path& path);

// Loads and validates a cache file. Throws std::runtime_error on a bad
// header, size mismatch or checksum mismatch, and when expected_limit is
// given and differs from the stored limit.
PrimeTable load_prime_table(const std::filesystem::path& path,
                            std::optional<std::uint64_t> expected_limit = std::nullopt);

// floor(sqrt(v)) for any 64-bit v.
std::uint64_t isqrt(std::uint64_t v);

// Generator of the candidate pair containing p:
// (p + 1) / 6 for p = -1 (mod 6), (p - 1) / 6 for p = +1 (mod 6).
// std::invalid_argument for p < 5 or p not of the form 6k -/+ 1.
std::uint64_t kappa(std::uint64_t p);

PrimeClass prime_class(std::uint64_t p);

// An upper bound on p_n, usable to size a table that must contain p_n.
std::uint64_t prime_limit_for_index(std::size_t n);

}  // namespace twinsieve
