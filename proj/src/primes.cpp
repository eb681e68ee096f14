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

#include "twinsieve/primes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

constexpr std::size_t kSegmentOdds = std::size_t{1} << 18;

std::size_t odd_count(std::uint64_t limit) { return static_cast<std::size_t>((limit - 1) / 2); }

// Plain sieve for the base primes up to sqrt(limit).
std::vector<std::uint32_t> small_odd_primes(std::uint64_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 3; i <= bound; i += 2) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += 2 * i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && (r > UINT32_MAX || r * r > v)) --r;
  while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

PrimeTable build_prime_table(std::uint64_t limit) {
  if (limit < 3) throw std::invalid_argument("prime table limit must be >= 3");
  if (limit > kMaxTableLimit) {
    throw std::invalid_argument("prime table limit exceeds " + std::to_string(kMaxTableLimit));
  }
  const std::size_t odds = odd_count(limit);
  std::vector<std::uint64_t> words((odds + 63) / 64, 0);
  const auto base = small_odd_primes(isqrt(limit));

  std::vector<std::uint8_t> segment(kSegmentOdds);
  for (std::size_t seg_lo = 0; seg_lo < odds; seg_lo += kSegmentOdds) {
    const std::size_t seg_len = std::min(kSegmentOdds, odds - seg_lo);
    std::fill_n(segment.begin(), seg_len, std::uint8_t{1});
    // Odd value of index i is 2i + 3.
    const std::uint64_t lo_value = 2 * seg_lo + 3;
    const std::uint64_t hi_value = 2 * (seg_lo + seg_len - 1) + 3;
    for (std::uint32_t q : base) {
      const std::uint64_t q2 = std::uint64_t{q} * q;
      if (q2 > hi_value) break;
      std::uint64_t start = std::max(q2, (lo_value + q - 1) / q * q);
      if (start % 2 == 0) start += q;
      for (std::uint64_t v = start; v <= hi_value; v += 2 * q) segment[(v - 3) / 2 - seg_lo] = 0;
    }
    for (std::size_t j = 0; j < seg_len; ++j) {
      if (segment[j]) {
        const std::size_t bit = seg_lo + j;
        words[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
    }
  }
  return PrimeTable(limit, std::move(words));
}

PrimeTable prime_table_from_bitmap(std::uint64_t limit, std::vector<std::uint64_t> bits) {
  return PrimeTable(limit, std::move(bits));
}

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> bits)
    : limit_(limit), odd_bits_(std::move(bits)) {
  std::size_t total = 1;
  for (auto w : odd_bits_) total += static_cast<std::size_t>(std::popcount(w));
  primes_.reserve(total);
  primes_.push_back(2);
  for (std::size_t w = 0; w < odd_bits_.size(); ++w) {
    std::uint64_t word = odd_bits_[w];
    while (word != 0) {
      const auto bit = static_cast<std::uint64_t>(std::countr_zero(word));
      primes_.push_back(static_cast<std::uint32_t>(2 * (w * 64 + bit) + 3));
      word &= word - 1;
    }
  }
}

bool PrimeTable::is_prime(std::uint64_t v) const {
  if (v > limit_) {
    throw InsufficientTable("primality of " + std::to_string(v) + " needs a table limit >= " +
                            std::to_string(v) + " (have " + std::to_string(limit_) + ")");
  }
  if (v == 2) return true;
  if (v < 3 || v % 2 == 0) return false;
  const std::uint64_t bit = (v - 3) / 2;
  return (odd_bits_[bit / 64] >> (bit % 64)) & 1U;
}

std::uint64_t PrimeTable::nth_prime(std::size_t n) const {
  if (n == 0 || n > primes_.size()) {
    throw std::out_of_range("prime index " + std::to_string(n) + " outside table of " +
                            std::to_string(primes_.size()) + " primes");
  }
  return primes_[n - 1];
}

std::size_t PrimeTable::prime_count(std::uint64_t z) const {
  if (z > limit_) {
    throw InsufficientTable("pi(" + std::to_string(z) + ") needs a table limit >= " + std::to_string(z));
  }
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), z) - primes_.begin());
}

std::optional<std::uint64_t> PrimeTable::p_hat(std::uint64_t x) const {
  if (x > (UINT64_MAX - 1) / 6) throw std::invalid_argument("p_hat argument too large");
  const std::uint64_t root = isqrt(6 * x + 1);
  if (root > limit_) {
    throw InsufficientTable("p_hat(" + std::to_string(x) + ") needs a table limit >= " + std::to_string(root));
  }
  if (root < 5) return std::nullopt;
  auto it = std::upper_bound(primes_.begin(), primes_.end(), root);
  return *std::prev(it);
}

std::uint64_t kappa(std::uint64_t p) {
  if (p < 5) throw std::invalid_argument("kappa is defined for primes >= 5, got " + std::to_string(p));
  switch (p % 6) {
    case 5: return (p + 1) / 6;
    case 1: return (p - 1) / 6;
    default: throw std::invalid_argument(std::to_string(p) + " is not of the form 6k -/+ 1");
  }
}

PrimeClass prime_class(std::uint64_t p) {
  (void)kappa(p);
  return p % 6 == 5 ? PrimeClass::kMinus : PrimeClass::kPlus;
}

std::uint64_t prime_limit_for_index(std::size_t n) {
  if (n < 6) return 13;
  // Rosser: p_n < n (ln n + ln ln n) for n >= 6.
  const double ln = std::log(static_cast<double>(n));
  return static_cast<std::uint64_t>(static_cast<double>(n) * (ln + std::log(ln))) + 16;
}

}  // namespace twinsieve
