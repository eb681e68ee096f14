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

#include "twinsieve/stats.hpp"

#include <stdexcept>
#include <string>

#include "twinsieve/errors.hpp"

namespace twinsieve {

namespace {

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

mpz_class big_origin(std::uint64_t p) {
  const mpz_class q = to_mpz(p);
  return mpz_class((q * q - 1) / 6);
}

}  // namespace

mpz_class phi(const PrimeTable& table, std::size_t n) {
  sieve_prime(table, n);
  mpz_class r = 1;
  for (std::size_t i = kFirstSieve; i <= n; ++i) r *= static_cast<unsigned long>(table.nth_prime(i) - 2);
  return r;
}

mpq_class eta(const PrimeTable& table, std::size_t n) {
  mpq_class q(phi(table, n), reduced_primorial(table, n));
  q.canonicalize();
  return q;
}

mpq_class delta_bar(const PrimeTable& table, std::size_t n) {
  mpq_class q(reduced_primorial(table, n), phi(table, n));
  q.canonicalize();
  return q;
}

std::vector<BoundsRow> bound_report(const PrimeTable& table, std::size_t n_max) {
  sieve_prime(table, n_max + 1);
  std::vector<BoundsRow> rows;
  rows.reserve(n_max - kFirstSieve + 1);
  mpq_class running_eta = 1;
  for (std::size_t n = kFirstSieve; n <= n_max; ++n) {
    const std::uint64_t p = table.nth_prime(n);
    const mpz_class pz = to_mpz(p);
    const std::uint64_t d = origin(table, n + 1) - origin(table, n);
    const mpz_class dz = to_mpz(d);

    mpq_class step(to_mpz(p - 2), pz);
    step.canonicalize();
    const mpq_class previous = running_eta;
    running_eta *= step;

    BoundsRow row{.n = n,
                  .p = p,
                  .eta = running_eta,
                  .three_over_p = mpq_class(3, pz),
                  .delta_bar = 1 / running_eta,
                  .d_n = d,
                  .eta_vs_three_over_p = {},
                  .delta_bar_vs_p_over_three = {},
                  .d_n_vs_lower_bound = {},
                  .d_n_vs_upper_bound = {},
                  .d_n_vs_two_delta_bar = {},
                  .p_vs_delta_bar_sq = std::nullopt,
                  .d_n_vs_delta_bar_sq = std::nullopt,
                  .eta_decreasing = std::nullopt};
    row.three_over_p.canonicalize();
    row.delta_bar.canonicalize();

    row.eta_vs_three_over_p = relate_at_least(row.eta, row.three_over_p);
    row.delta_bar_vs_p_over_three = relate_at_least(mpq_class(pz, 3), row.delta_bar);
    row.d_n_vs_lower_bound = relate_at_least(mpz_class(3 * dz), mpz_class(2 * (pz + 1)));
    row.d_n_vs_upper_bound = relate_at_least(mpz_class(pz * pz), mpz_class(2 * dz));
    row.d_n_vs_two_delta_bar = relate_at_least(mpq_class(dz), mpq_class(2 * row.delta_bar));
    if (p > 200) {
      const mpq_class sq = row.delta_bar * row.delta_bar;
      row.p_vs_delta_bar_sq = relate_at_least(mpq_class(pz), sq);
      row.d_n_vs_delta_bar_sq = relate_at_least(mpq_class(dz), sq);
    }
    if (n > kFirstSieve) row.eta_decreasing = relate_at_least(previous, running_eta);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool origin_incongruence(const PrimeTable& table, std::size_t m, std::size_t n) {
  if (m < kFirstSieve || m >= n) {
    throw std::invalid_argument("origin_incongruence needs 3 <= m < n, got m = " + std::to_string(m) +
                                ", n = " + std::to_string(n));
  }
  const mpz_class modulus = reduced_primorial(table, m);
  const mpz_class om = to_mpz(origin(table, m));
  if (om >= modulus) throw std::logic_error("O_m is not below p_m#_5 at m = " + std::to_string(m));
  const mpz_class on = to_mpz(origin(table, n));
  return mpz_class(on % modulus) != om;
}

std::vector<BigInterval> pd1_decomposition(const PrimeTable& table, std::size_t n) {
  const mpz_class on = to_mpz(origin(table, n));
  const mpz_class next_origin = to_mpz(origin(table, n + 1));
  const mpz_class period = reduced_primorial(table, n);
  const std::uint64_t next_p = table.nth_prime(n + 1);
  const mpz_class next_period = period * static_cast<unsigned long>(next_p);

  std::vector<BigInterval> blocks;
  blocks.reserve(next_p + 1);
  blocks.emplace_back(next_origin, mpz_class(on + period - 1));
  for (std::uint64_t k = 1; k < next_p; ++k) {
    const mpz_class start = on + period * static_cast<unsigned long>(k);
    blocks.emplace_back(start, mpz_class(start + period - 1));
  }
  blocks.emplace_back(mpz_class(on + next_period), mpz_class(next_origin - 1 + next_period));
  return blocks;
}

bool pd1_check(const PrimeTable& table, std::size_t n) {
  const auto blocks = pd1_decomposition(table, n);
  const BigInterval target = period_section(table, n + 1);
  if (blocks.front().lo() != target.lo() || blocks.back().hi() != target.hi()) return false;
  mpz_class covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    covered += blocks[i].length();
    if (i > 0 && blocks[i].lo() != blocks[i - 1].hi() + 1) return false;
  }
  return covered == target.length();
}

OverlapReport overlap_census(const PrimeTable& table, std::size_t n) {
  const mpz_class end = to_mpz(origin(table, n)) + reduced_primorial(table, n) - 1;
  // O_t <= end  <=>  p_t <= floor(sqrt(6 end + 1)).
  const mpz_class root = sqrt(mpz_class(6 * end + 1));
  if (cmp(root, static_cast<unsigned long>(table.limit())) > 0) {
    throw InsufficientTable("overlap census for n = " + std::to_string(n) + " needs primes up to " +
                            root.get_str() + " and beyond");
  }
  const std::size_t t = table.prime_count(root.get_ui());
  if (t + 1 > table.size()) {
    throw InsufficientTable("overlap census for n = " + std::to_string(n) + " needs p_" + std::to_string(t + 1));
  }
  if (big_origin(table.nth_prime(t)) > end || big_origin(table.nth_prime(t + 1)) <= end) {
    throw std::logic_error("terminal A-section misplaced for n = " + std::to_string(n));
  }
  return OverlapReport{n, end, t, t - n};
}

std::uint64_t overlap_table_limit(std::size_t n) {
  const PrimeTable small = build_prime_table(prime_limit_for_index(n + 1));
  const mpz_class end = to_mpz(origin(small, n)) + reduced_primorial(small, n) - 1;
  const mpz_class root = sqrt(mpz_class(6 * end + 1));
  // Bertrand: the next prime after the root is below twice the root.
  const mpz_class limit = 2 * root + 16;
  if (cmp(limit, static_cast<unsigned long>(kMaxTableLimit)) > 0) {
    throw InsufficientTable("overlap census for n = " + std::to_string(n) + " exceeds the maximum table size");
  }
  return limit.get_ui();
}

ProbeReport a_section_probe(const PrimeTable& table, std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < kFirstSieve || n_lo > n_hi) throw std::invalid_argument("probe needs 3 <= n_lo <= n_hi");
  sieve_prime(table, n_hi + 1);
  ProbeReport report;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    const ASection a = a_section(table, n);
    const auto found = enumerate_omega(table, n, a.section);
    report.rows.push_back(ProbeRow{n, a.section, found.size()});
    if (found.empty()) report.empty_sections.push_back(n);
  }
  return report;
}

}  // namespace twinsieve
