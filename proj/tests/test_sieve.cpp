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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "twinsieve/errors.hpp"
#include "twinsieve/sieve.hpp"

using namespace twinsieve;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = build_prime_table(2'000'000);
  return t;
}

}  // namespace

TEST_CASE("psi, tau and bar_kind examples") {
  CHECK(psi(4, 5) == 0);
  CHECK(psi(5, 5) == 4);
  CHECK(psi(10, 7) == 1);
  CHECK(tau(4, 5) == 0);
  CHECK(tau(8, 7) == 2);
  CHECK(tau(6, 5) == 2);
  CHECK(bar_kind(4, 5) == BarKind::kABar);
  CHECK(bar_kind(8, 7) == BarKind::kBBar);
  CHECK(bar_kind(6, 5) == BarKind::kBBar);
  CHECK(bar_kind(5, 5) == BarKind::kNone);
}

TEST_CASE("psi is exact near 2^42") {
  const std::uint64_t x = kMaxPosition - 1;
  for (std::uint32_t p : table().primes().subspan(2, 500)) {
    const mpz_class big = mpz_class(static_cast<unsigned long>(x));
    const mpz_class k = static_cast<unsigned long>(kappa(p));
    mpz_class expected = (big * big - k * k) % static_cast<unsigned long>(p);
    REQUIRE(psi(x, p) == expected.get_ui());
  }
}

TEST_CASE("identity between psi and tau on random samples") {
  std::mt19937_64 rng(211);
  const auto primes = table().primes();
  std::uniform_int_distribution<std::uint64_t> pick_x(1, kMaxPosition - 1);
  std::uniform_int_distribution<std::size_t> pick_p(2, primes.size() - 1);
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t x = pick_x(rng);
    const std::uint64_t p = primes[pick_p(rng)];
    const std::uint64_t t = tau(x, p);
    const std::uint64_t two_k = 2 * kappa(p) % p;
    REQUIRE(psi(x, p) == t * ((t + p - two_k) % p) % p);
    REQUIRE((bar_kind(x, p) != BarKind::kNone) == (psi(x, p) == 0));
  }
}

TEST_CASE("psi periodicity and bar spacing") {
  for (std::uint32_t p : table().primes().subspan(2, 60)) {
    const std::uint64_t k = kappa(p);
    for (std::uint64_t x = 1; x < 3 * p; ++x) REQUIRE(psi(x + p, p) == psi(x, p));
    // From the a-bar at x = p - k, the b-bar follows 2 kappa later, and no
    // other bar sits in the window of length p.
    const std::uint64_t a = p - k;
    REQUIRE(bar_kind(a, p) == BarKind::kABar);
    for (std::uint64_t j = 1; j < p; ++j) {
      const BarKind kind = bar_kind(a + j, p);
      REQUIRE(kind == (j == 2 * k ? BarKind::kBBar : BarKind::kNone));
    }
  }
}

TEST_CASE("aggregate_psi") {
  CHECK(aggregate_psi(table(), 5, 3) == mpq_class(4, 5));
  CHECK(aggregate_psi(table(), 9, 4) == 0);
  CHECK(aggregate_psi(table(), 10, 4) == mpq_class(4, 35));
  CHECK_THROWS_AS(aggregate_psi(table(), 10, 2), std::invalid_argument);
  CHECK_FALSE(aggregate_psi_hat(table(), 3).has_value());
  CHECK(*aggregate_psi_hat(table(), 4) == 0);
  // p_hat(10) = 7, so depth n = 4.
  CHECK(*aggregate_psi_hat(table(), 10) == mpq_class(4, 35));
  for (std::uint64_t x = 1; x < 2000; ++x) {
    const mpq_class v = aggregate_psi(table(), x, 6);
    REQUIRE(v >= 0);
    REQUIRE(v < 1);
    REQUIRE((v > 0) == is_omega(table(), x, 6));
  }
}

TEST_CASE("aggregate_psi is periodic in the reduced primorial") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const std::uint64_t period = reduced_primorial(table(), n).get_ui();
    for (std::uint64_t x = 1; x <= 3000; x += 7) {
      for (std::uint64_t a : {1U, 2U}) REQUIRE(aggregate_psi(table(), x + a * period, n) == aggregate_psi(table(), x, n));
    }
  }
}

TEST_CASE("frames") {
  const SieveFrame f3 = frame(table(), 3);
  CHECK(f3.p == 5);
  CHECK(f3.kappa == 1);
  CHECK(f3.origin == 4);
  CHECK(f3.reduced_primorial == 5);
  CHECK(f3.prime_class == PrimeClass::kMinus);

  const SieveFrame f8 = frame(table(), 8);
  CHECK(f8.p == 19);
  CHECK(f8.kappa == 3);
  CHECK(f8.origin == 60);
  CHECK(f8.reduced_primorial == 1616615);

  const SieveFrame f9 = frame(table(), 9);
  CHECK(f9.p == 23);
  CHECK(f9.kappa == 4);
  CHECK(f9.origin == 88);
  CHECK(f9.reduced_primorial == 37182145);

  CHECK_THROWS_AS(frame(table(), 2), std::invalid_argument);
  CHECK_THROWS_AS(frame(table(), 0), std::invalid_argument);
  const auto small = build_prime_table(30);
  CHECK_THROWS_AS(frame(small, 11), InsufficientTable);

  for (std::size_t n = 4; n <= 40; ++n) {
    const SieveFrame f = frame(table(), n);
    REQUIRE(f.reduced_primorial == reduced_primorial(table(), n - 1) * static_cast<unsigned long>(f.p));
    REQUIRE(f.origin * 6 + 1 == f.p * f.p);
  }
}

TEST_CASE("origins start with a bar of the expected kind") {
  for_each_frame(table(), 3, 10000, [](const SieveFrame& f) {
    REQUIRE(psi(f.origin, f.p) == 0);
    REQUIRE(bar_kind(f.origin, f.p) == (f.prime_class == PrimeClass::kMinus ? BarKind::kABar : BarKind::kBBar));
    // O_n is the least x with p_hat(x) = p_n.
    REQUIRE(table().p_hat(f.origin) == f.p);
    if (f.origin > 4) REQUIRE(table().p_hat(f.origin - 1) != f.p);
  });
}

TEST_CASE("for_each_frame agrees with frame") {
  std::size_t expected_n = 5;
  for_each_frame(table(), 5, 60, [&](const SieveFrame& f) {
    const SieveFrame direct = frame(table(), f.n);
    REQUIRE(f.n == expected_n++);
    REQUIRE(f.p == direct.p);
    REQUIRE(f.kappa == direct.kappa);
    REQUIRE(f.prime_class == direct.prime_class);
    REQUIRE(f.origin == direct.origin);
    REQUIRE(f.reduced_primorial == direct.reduced_primorial);
  });
  CHECK(expected_n == 61);
}

TEST_CASE("a_section and period_section examples") {
  const ASection a3 = a_section(table(), 3);
  CHECK(a3.section == Interval(4, 7));
  CHECK(a3.length == 4);
  CHECK(a_section(table(), 4).section == Interval(8, 19));
  CHECK(a_section(table(), 4).length == 12);
  CHECK(a_section(table(), 5).section == Interval(20, 27));
  CHECK(a_section(table(), 5).length == 8);

  CHECK(period_section(table(), 3) == BigInterval(4, 8));
  CHECK(period_section(table(), 4) == BigInterval(8, 42));
  CHECK(period_section(table(), 8) == BigInterval(60, 1616674));
}

TEST_CASE("A-sections tile the integers from 4") {
  std::uint64_t expected_lo = 4;
  for (std::size_t n = 3; n <= 5000; ++n) {
    const ASection a = a_section(table(), n);
    REQUIRE(a.section.lo() == expected_lo);
    REQUIRE(a.length == a.section.length());
    const std::uint64_t p = table().nth_prime(n);
    REQUIRE(3 * a.length >= 2 * (p + 1));
    REQUIRE(2 * a.length < p * p);
    expected_lo = a.section.hi() + 1;
  }
}

TEST_CASE("is_omega examples and the gcd formulation") {
  CHECK(is_omega(table(), 5, 3));
  CHECK_FALSE(is_omega(table(), 4, 3));
  CHECK(is_omega(table(), 10, 4));
  const auto primes = oracle::first_primes(20);
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::uint64_t x = 1; x <= 3000; ++x) {
      const bool expected = oracle::omega(x, n, primes);
      REQUIRE(is_omega(table(), x, n) == expected);
      REQUIRE(is_omega_by_gcd(table(), x, n) == expected);
    }
  }
}

TEST_CASE("twin_by_sieve and twin_by_primality examples") {
  CHECK(twin_by_sieve(table(), 1));
  CHECK_FALSE(twin_by_sieve(table(), 4));
  CHECK_FALSE(twin_by_sieve(table(), 20));
  CHECK(twin_by_primality(table(), 1));
  CHECK(twin_by_primality(table(), 5));
  CHECK_FALSE(twin_by_primality(table(), 13));
  CHECK_THROWS_AS(twin_by_primality(table(), 400000), InsufficientTable);
  CHECK_THROWS_AS(twin_by_sieve(table(), 0), std::invalid_argument);
  const auto small = build_prime_table(20);
  CHECK_THROWS_AS(twin_by_sieve(small, 1000), InsufficientTable);
}

TEST_CASE("Theorem 1 against trial division") {
  for (std::uint64_t x = 1; x <= 20000; ++x) {
    const bool expected = oracle::twin(x);
    REQUIRE(twin_by_sieve(table(), x) == expected);
    REQUIRE(twin_by_primality(table(), x) == expected);
  }
}

TEST_CASE("enumerate_twin_generators") {
  CHECK(enumerate_twin_generators(table(), Interval(1, 30)) ==
        std::vector<std::uint64_t>{1, 2, 3, 5, 7, 10, 12, 17, 18, 23, 25, 30});
  CHECK(enumerate_twin_generators(table(), Interval(8, 9)).empty());
  CHECK(enumerate_twin_generators(table(), Interval(88, 88)).empty());

  std::vector<std::uint64_t> expected;
  for (std::uint64_t x = 1; x <= 200000; ++x) {
    if (oracle::twin(x)) expected.push_back(x);
  }
  CHECK(enumerate_twin_generators(table(), Interval(1, 200000)) == expected);
  // Partitioned runs concatenate to the same sequence.
  CHECK(enumerate_twin_generators(table(), Interval(1, 200000), 5) == expected);
}

TEST_CASE("enumerate_omega") {
  CHECK(enumerate_omega(table(), 3, Interval(4, 8)) == std::vector<std::uint64_t>{5, 7, 8});
  CHECK(enumerate_omega(table(), 3, Interval(1, 3)) == std::vector<std::uint64_t>{2, 3});
  const auto p4 = enumerate_omega(table(), 4, Interval(8, 42));
  CHECK(p4 == std::vector<std::uint64_t>{10, 12, 17, 18, 23, 25, 28, 30, 32, 33, 35, 37, 38, 40, 42});

  const auto primes = oracle::first_primes(20);
  for (std::size_t n = 3; n <= 10; ++n) {
    const Interval range(70000, 270000);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t x = range.lo(); x <= range.hi(); ++x) {
      if (oracle::omega(x, n, primes)) expected.push_back(x);
    }
    REQUIRE(enumerate_omega(table(), n, range) == expected);
    REQUIRE(enumerate_omega(table(), n, range, 3) == expected);
  }
}

TEST_CASE("omega numbers inside an A-section are exactly the twin generators there") {
  for (std::size_t n = 3; n <= 150; ++n) {
    const ASection a = a_section(table(), n);
    for (std::uint64_t x = a.section.lo(); x <= a.section.hi(); ++x) {
      REQUIRE(is_omega(table(), x, n) == twin_by_sieve(table(), x));
    }
  }
}
