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

#include "twinsieve/sieve.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

constexpr std::size_t kSegment = std::size_t{1} << 16;

void require_sieve_index(std::size_t n) {
  if (n < kFirstSieve) throw std::invalid_argument("sieve index must be >= 3, got " + std::to_string(n));
}

void require_position(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("positions are positive integers");
  if (x >= kMaxPosition) throw std::invalid_argument("position " + std::to_string(x) + " exceeds 2^42");
}

// First position >= lo congruent to r (mod p).
std::uint64_t first_hit(std::uint64_t lo, std::uint64_t r, std::uint64_t p) {
  return lo + (r + p - lo % p) % p;
}

void strike_prime(std::uint64_t p, std::uint64_t from, std::uint64_t lo, std::span<std::uint8_t> marks,
                  std::uint8_t bit) {
  const std::uint64_t k = kappa(p) % p;
  const std::uint64_t end = lo + marks.size();
  for (std::uint64_t r : {(p - k) % p, k}) {
    for (std::uint64_t x = first_hit(from, r, p); x < end; x += p) marks[x - lo] |= bit;
  }
}

template <class Strike>
std::vector<std::uint64_t> collect_unmarked(const Interval& range, Strike strike) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint8_t> marks(kSegment);
  for (std::uint64_t lo = range.lo(); lo <= range.hi();) {
    const std::uint64_t len = std::min<std::uint64_t>(kSegment, range.hi() - lo + 1);
    std::span<std::uint8_t> seg(marks.data(), len);
    std::fill(seg.begin(), seg.end(), std::uint8_t{0});
    strike(lo, seg);
    for (std::uint64_t j = 0; j < len; ++j) {
      if (seg[j] == 0) out.push_back(lo + j);
    }
    lo += len;
  }
  return out;
}

template <class Strike>
std::vector<std::uint64_t> collect_parallel(const Interval& range, unsigned workers, Strike strike) {
  auto parts = detail::map_pieces<std::vector<std::uint64_t>>(
      detail::split_range(range, workers), [&](const Interval& piece) { return collect_unmarked(piece, strike); });
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

std::uint64_t psi(std::uint64_t x, std::uint64_t p) {
  const std::uint64_t k = kappa(p) % p;
  const std::uint64_t r = x % p;
  return ((r * r) % p + p - (k * k) % p) % p;
}

std::uint64_t tau(std::uint64_t x, std::uint64_t p) { return (x % p + kappa(p) % p) % p; }

BarKind bar_kind(std::uint64_t x, std::uint64_t p) {
  const std::uint64_t t = tau(x, p);
  if (t == 0) return BarKind::kABar;
  if (t == 2 * kappa(p)) return BarKind::kBBar;
  return BarKind::kNone;
}

std::uint64_t sieve_prime(const PrimeTable& table, std::size_t n) {
  require_sieve_index(n);
  if (n > table.size()) {
    throw InsufficientTable("p_" + std::to_string(n) + " is beyond a table of " + std::to_string(table.size()) +
                            " primes (limit " + std::to_string(table.limit()) + ")");
  }
  return table.nth_prime(n);
}

std::uint64_t origin(const PrimeTable& table, std::size_t n) {
  const std::uint64_t p = sieve_prime(table, n);
  return (p * p - 1) / 6;
}

mpz_class reduced_primorial(const PrimeTable& table, std::size_t n) {
  const std::uint64_t p = sieve_prime(table, n);
  // p_n# / 6 = 5 * 7 * ... * p_n.
  mpz_class r;
  mpz_primorial_ui(r.get_mpz_t(), static_cast<unsigned long>(p));
  r /= 6;
  return r;
}

SieveFrame frame(const PrimeTable& table, std::size_t n) {
  const std::uint64_t p = sieve_prime(table, n);
  return SieveFrame{n, p, prime_class(p), kappa(p), origin(table, n), reduced_primorial(table, n)};
}

void for_each_frame(const PrimeTable& table, std::size_t first, std::size_t last,
                    const std::function<void(const SieveFrame&)>& visit) {
  if (first > last) return;
  sieve_prime(table, last);
  SieveFrame f = frame(table, first);
  visit(f);
  for (std::size_t n = first + 1; n <= last; ++n) {
    f.n = n;
    f.p = table.nth_prime(n);
    f.prime_class = prime_class(f.p);
    f.kappa = kappa(f.p);
    f.origin = (f.p * f.p - 1) / 6;
    f.reduced_primorial *= static_cast<unsigned long>(f.p);
    visit(f);
  }
}

ASection a_section(const PrimeTable& table, std::size_t n) {
  const std::uint64_t p = sieve_prime(table, n);
  const std::uint64_t lo = origin(table, n);
  const std::uint64_t next = origin(table, n + 1);
  const std::uint64_t d = next - lo;
  // d >= (2/3)(p + 1) and d < p^2 / 2, in integers.
  if (3 * d < 2 * (p + 1) || 2 * d >= p * p) {
    throw std::logic_error("A-section length bounds violated at n = " + std::to_string(n));
  }
  return ASection{Interval(lo, next - 1), d};
}

BigInterval period_section(const PrimeTable& table, std::size_t n) {
  const mpz_class lo = static_cast<unsigned long>(origin(table, n));
  return BigInterval(lo, lo + reduced_primorial(table, n) - 1);
}

mpq_class aggregate_psi(const PrimeTable& table, std::uint64_t x, std::size_t n) {
  sieve_prime(table, n);
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::size_t i = kFirstSieve; i <= n; ++i) {
    const std::uint64_t p = table.nth_prime(i);
    const std::uint64_t v = psi(x, p);
    if (v == 0) return mpq_class(0);
    num *= static_cast<unsigned long>(v);
    den *= static_cast<unsigned long>(p);
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::optional<mpq_class> aggregate_psi_hat(const PrimeTable& table, std::uint64_t x) {
  const auto hat = table.p_hat(x);
  if (!hat) return std::nullopt;
  return aggregate_psi(table, x, table.prime_count(*hat));
}

bool is_omega(const PrimeTable& table, std::uint64_t x, std::size_t n) {
  sieve_prime(table, n);
  for (std::size_t i = kFirstSieve; i <= n; ++i) {
    if (psi(x, table.nth_prime(i)) == 0) return false;
  }
  return true;
}

bool is_omega_by_gcd(const PrimeTable& table, std::uint64_t x, std::size_t n) {
  const mpz_class v = static_cast<unsigned long>(x);
  const mpz_class g = gcd(mpz_class(36 * v * v - 1), reduced_primorial(table, n));
  return g == 1;
}

bool twin_by_sieve(const PrimeTable& table, std::uint64_t x) {
  require_position(x);
  const auto hat = table.p_hat(x);
  if (!hat) return true;
  for (std::uint32_t p : table.primes().subspan(kFirstSieve - 1)) {
    if (p > *hat) break;
    if (psi(x, p) == 0) return false;
  }
  return true;
}

bool twin_by_primality(const PrimeTable& table, std::uint64_t x) {
  require_position(x);
  return table.is_prime(6 * x - 1) && table.is_prime(6 * x + 1);
}

void strike_sieves(const PrimeTable& table, std::size_t first, std::size_t last, std::uint64_t lo,
                   std::span<std::uint8_t> marks, std::uint8_t bit) {
  if (first > last) return;
  require_sieve_index(first);
  sieve_prime(table, last);
  for (std::size_t i = first; i <= last; ++i) strike_prime(table.nth_prime(i), lo, lo, marks, bit);
}

std::vector<std::uint64_t> enumerate_twin_generators(const PrimeTable& table, const Interval& range,
                                                     unsigned workers) {
  require_position(range.hi());
  const auto hat = table.p_hat(range.hi());
  std::vector<std::uint32_t> active;
  if (hat) {
    for (std::uint32_t p : table.primes().subspan(kFirstSieve - 1)) {
      if (p > *hat) break;
      active.push_back(p);
    }
  }
  // S_n only works from its origin O_n onwards.
  return collect_parallel(range, workers, [&](std::uint64_t lo, std::span<std::uint8_t> seg) {
    const std::uint64_t end = lo + seg.size();
    for (std::uint64_t p : active) {
      const std::uint64_t from = std::max(lo, (p * p - 1) / 6);
      if (from >= end) break;
      strike_prime(p, from, lo, seg, 1);
    }
  });
}

std::vector<std::uint64_t> enumerate_omega(const PrimeTable& table, std::size_t n, const Interval& range,
                                           unsigned workers) {
  sieve_prime(table, n);
  return collect_parallel(range, workers, [&](std::uint64_t lo, std::span<std::uint8_t> seg) {
    strike_sieves(table, kFirstSieve, n, lo, seg, 1);
  });
}

}  // namespace twinsieve
