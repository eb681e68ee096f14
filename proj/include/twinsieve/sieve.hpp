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

// The twin sieve on the level of generators. A generator x stands for the
// candidate pair (6x - 1, 6x + 1); sieve S_n (n >= 3) strikes x whenever
// x = -kappa(p_n) or x = +kappa(p_n) (mod p_n), i.e. whenever
// psi(x, p_n) = (x^2 - kappa(p_n)^2) mod p_n vanishes.
//
// Positions are exact for x < 2^42 and primes below 2^32.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "twinsieve/interval.hpp"
#include "twinsieve/primes.hpp"

namespace twinsieve {

inline constexpr std::uint64_t kMaxPosition = std::uint64_t{1} << 42;
inline constexpr std::size_t kFirstSieve = 3;

enum class BarKind {
  kABar,  // tau == 0, x = -kappa (mod p)
  kBBar,  // tau == 2 kappa, x = +kappa (mod p)
  kNone,
};

struct SieveFrame {
  std::size_t n;
  std::uint64_t p;
  PrimeClass prime_class;
  std::uint64_t kappa;
  std::uint64_t origin;           // O_n = (p^2 - 1) / 6
  mpz_class reduced_primorial;    // 5 * 7 * ... * p_n
};

struct ASection {
  Interval section;  // [O_n, O_{n+1} - 1]
  std::uint64_t length;
};

std::uint64_t psi(std::uint64_t x, std::uint64_t p);
std::uint64_t tau(std::uint64_t x, std::uint64_t p);
BarKind bar_kind(std::uint64_t x, std::uint64_t p);

// Product of psi(x, p_i) / p_i over 3 <= i <= n, exact.
mpq_class aggregate_psi(const PrimeTable& table, std::uint64_t x, std::size_t n);

// aggregate_psi at the per-x depth pi(p_hat(x)); nullopt for x <= 3 where
// no sieve is active yet.
std::optional<mpq_class> aggregate_psi_hat(const PrimeTable& table, std::uint64_t x);

// Throws std::invalid_argument for n < 3, InsufficientTable when p_n is
// not in the table.
std::uint64_t sieve_prime(const PrimeTable& table, std::size_t n);
std::uint64_t origin(const PrimeTable& table, std::size_t n);
mpz_class reduced_primorial(const PrimeTable& table, std::size_t n);
SieveFrame frame(const PrimeTable& table, std::size_t n);

// Visits frame(first) .. frame(last) in order, extending the reduced
// primorial by one factor per step.
void for_each_frame(const PrimeTable& table, std::size_t first, std::size_t last,
                    const std::function<void(const SieveFrame&)>& visit);

ASection a_section(const PrimeTable& table, std::size_t n);
BigInterval period_section(const PrimeTable& table, std::size_t n);

// psi(x, p_i) != 0 for 3 <= i <= n.
bool is_omega(const PrimeTable& table, std::uint64_t x, std::size_t n);
// gcd(36 x^2 - 1, p_n#_5) == 1; must agree with is_omega.
bool is_omega_by_gcd(const PrimeTable& table, std::uint64_t x, std::size_t n);

// No active sieve strikes x: x != -/+kappa(p_n) (mod p_n) for all
// 3 <= n <= pi(p_hat(x)). Vacuously true for x <= 3.
bool twin_by_sieve(const PrimeTable& table, std::uint64_t x);

// 6x - 1 and 6x + 1 both prime, by table lookup.
bool twin_by_primality(const PrimeTable& table, std::uint64_t x);

// Residue-marking enumerations. The range is split into `workers`
// contiguous pieces that are sieved independently and concatenated.
std::vector<std::uint64_t> enumerate_twin_generators(const PrimeTable& table, const Interval& range,
                                                     unsigned workers = 1);
std::vector<std::uint64_t> enumerate_omega(const PrimeTable& table, std::size_t n, const Interval& range,
                                           unsigned workers = 1);

// Low-level segment marker: ORs `bit` into marks[j] for every position
// lo + j with lo + j = -/+kappa(p_i) (mod p_i), first <= i <= last.
void strike_sieves(const PrimeTable& table, std::size_t first, std::size_t last, std::uint64_t lo,
                   std::span<std::uint8_t> marks, std::uint8_t bit);

}  // namespace twinsieve
