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

#include <map>
#include <numeric>

#include "oracles.hpp"
#include "twinsieve/errors.hpp"
#include "twinsieve/stats.hpp"

using namespace twinsieve;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = build_prime_table(200'000);
  return t;
}

const std::vector<std::uint64_t>& primes() {
  static const auto p = oracle::first_primes(1100);
  return p;
}

// Brute-force omega positions over the period section of n.
std::vector<std::uint64_t> brute_period_omegas(std::size_t n) {
  const std::uint64_t lo = oracle::origin(primes()[n - 1]);
  const std::uint64_t len = oracle::period(n, primes());
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = lo; x < lo + len; ++x) {
    if (oracle::omega(x, n, primes())) out.push_back(x);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> brute_cyclic_gaps(std::size_t n) {
  const auto w = brute_period_omegas(n);
  std::map<std::uint64_t, std::uint64_t> gaps;
  for (std::size_t i = 1; i < w.size(); ++i) ++gaps[w[i] - w[i - 1]];
  ++gaps[w.front() + oracle::period(n, primes()) - w.back()];
  return gaps;
}

}  // namespace

TEST_CASE("phi, eta, delta_bar") {
  CHECK(phi(table(), 3) == 3);
  CHECK(phi(table(), 5) == 135);
  CHECK(phi(table(), 8) == 378675);
  CHECK(eta(table(), 3) == mpq_class(3, 5));
  CHECK(delta_bar(table(), 3) == mpq_class(5, 3));
  CHECK(eta(table(), 4) == mpq_class(3, 7));
  CHECK(delta_bar(table(), 4) == mpq_class(7, 3));
  CHECK(eta(table(), 5) == mpq_class(27, 77));
  CHECK(delta_bar(table(), 5) == mpq_class(77, 27));
  for (std::size_t n = 4; n <= 60; ++n) {
    REQUIRE(phi(table(), n) == phi(table(), n - 1) * static_cast<unsigned long>(table().nth_prime(n) - 2));
    REQUIRE(eta(table(), n) * delta_bar(table(), n) == 1);
  }
  CHECK_THROWS_AS(phi(table(), 2), std::invalid_argument);
}

TEST_CASE("bound_report examples") {
  const auto rows = bound_report(table(), 60);
  REQUIRE(rows.size() == 58);
  CHECK(rows[0].eta_vs_three_over_p == Relation::kEqual);
  CHECK(rows[0].delta_bar_vs_p_over_three == Relation::kEqual);
  CHECK(rows[1].eta_vs_three_over_p == Relation::kEqual);
  const BoundsRow& r5 = rows[2];
  CHECK(r5.n == 5);
  CHECK(r5.eta == mpq_class(27, 77));
  CHECK(r5.three_over_p == mpq_class(3, 11));  // 21/77
  CHECK(r5.eta_vs_three_over_p == Relation::kStrict);
  CHECK(2 * r5.delta_bar == mpq_class(154, 27));
  CHECK(r5.d_n == 8);
  CHECK(r5.d_n_vs_two_delta_bar == Relation::kStrict);
  CHECK_FALSE(r5.p_vs_delta_bar_sq.has_value());
  CHECK_FALSE(rows[0].eta_decreasing.has_value());
  for (const auto& r : rows) {
    if (r.n > 4) REQUIRE(r.eta_vs_three_over_p == Relation::kStrict);
    REQUIRE(r.d_n_vs_two_delta_bar == Relation::kStrict);
    REQUIRE(r.d_n_vs_lower_bound != Relation::kViolated);
    REQUIRE(r.d_n_vs_upper_bound == Relation::kStrict);
    REQUIRE(r.p_vs_delta_bar_sq.has_value() == (r.p > 200));
  }
  // (3.1) is tight at a twin prime gap: p_5 = 11, p_6 = 13.
  CHECK(rows[2].d_n_vs_lower_bound == Relation::kEqual);
  CHECK_THROWS_AS(bound_report(build_prime_table(30), 10), InsufficientTable);
}

TEST_CASE("period census against brute force") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const CensusReport r = period_census(table(), n);
    REQUIRE(r.match);
    REQUIRE(r.observed == static_cast<unsigned long>(brute_period_omegas(n).size()));
  }
  CHECK(period_census(table(), 3).expected == 3);
  CHECK(period_census(table(), 4).observed == 15);
  const CensusReport r8 = period_census(table(), 8, {.force = false, .threads = 3});
  CHECK(r8.observed == 378675);
  CHECK(r8.match);
}

TEST_CASE("feasibility bound") {
  CHECK_THROWS_AS(period_census(table(), 10), FeasibilityRefused);
  CHECK_THROWS_AS(gap_histogram(table(), 12), FeasibilityRefused);
  CHECK_THROWS_AS(beating_bars(table(), 11), FeasibilityRefused);
  CHECK_THROWS_AS(symmetry_check(table(), 10), FeasibilityRefused);
  // Past n = 12 the period no longer fits the position range even with force.
  CHECK_THROWS_AS(check_feasible(table(), 13, true), FeasibilityRefused);
  CHECK_NOTHROW(check_feasible(table(), 10, true));
}

TEST_CASE("beating bars") {
  const BeatingBarsReport r4 = beating_bars(table(), 4, {}, true);
  CHECK(r4.count == 6);
  CHECK(r4.expected == 6);
  std::vector<std::uint64_t> xs;
  for (const auto& e : r4.events) {
    xs.push_back(e.x);
    CHECK(e.n_new == 4);
    CHECK(e.kind != BarKind::kNone);
    CHECK(aggregate_psi(table(), e.x, 3) > 0);
    CHECK(psi(e.x, 7) == 0);
  }
  CHECK(xs == std::vector<std::uint64_t>{8, 13, 15, 20, 22, 27});
  CHECK(beating_bars(table(), 5).count == 30);
  for (std::size_t n = 4; n <= 8; ++n) {
    const auto r = beating_bars(table(), n, {.force = false, .threads = 2});
    REQUIRE(r.count == r.expected);
    REQUIRE(r.events.empty());
  }
  CHECK_THROWS_AS(beating_bars(table(), 3), std::invalid_argument);
}

TEST_CASE("gap histograms") {
  const GapHistogram h3 = gap_histogram(table(), 3);
  CHECK(h3.gaps == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 2}});
  CHECK(h3.mean == mpq_class(5, 3));
  const GapHistogram h4 = gap_histogram(table(), 4);
  CHECK(h4.total_gaps == 15);
  CHECK(h4.length_sum == 35);
  CHECK(h4.mean == mpq_class(7, 3));
  for (std::size_t n = 3; n <= 7; ++n) {
    for (unsigned threads : {1U, 4U}) {
      const GapHistogram h = gap_histogram(table(), n, {.force = false, .threads = threads});
      REQUIRE(h.gaps == brute_cyclic_gaps(n));
      REQUIRE(h.length_sum == reduced_primorial(table(), n));
      REQUIRE(h.mean == delta_bar(table(), n));
    }
  }
}

TEST_CASE("gap histogram stitching across many pieces") {
  // More pieces than some gaps are long: boundaries fall inside gaps.
  const auto reference = gap_histogram(table(), 6);
  for (unsigned threads : {2U, 7U, 64U}) {
    REQUIRE(gap_histogram(table(), 6, {.force = false, .threads = threads}).gaps == reference.gaps);
  }
}

TEST_CASE("merged gap statistics against brute force") {
  for (std::size_t n = 4; n <= 7; ++n) {
    const std::uint64_t lo = oracle::origin(primes()[n - 1]);
    const std::uint64_t len = oracle::period(n, primes());
    std::vector<std::uint64_t> omegas;
    std::vector<std::uint64_t> bars;
    for (std::uint64_t x = lo; x < lo + len; ++x) {
      if (oracle::omega(x, n, primes())) {
        omegas.push_back(x);
      } else if (oracle::omega(x, n - 1, primes())) {
        bars.push_back(x);
      }
    }
    // Gap i runs from omegas[i] to omegas[i + 1]; the last wraps around.
    std::uint64_t merged = 0;
    std::uint64_t merged_len = 0;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      const std::uint64_t a = omegas[i];
      const std::uint64_t b = i + 1 < omegas.size() ? omegas[i + 1] : omegas.front() + len;
      bool hit = false;
      for (std::uint64_t y : bars) {
        if ((y > a && y < b) || (y + len > a && y + len < b)) hit = true;
      }
      if (hit) {
        ++merged;
        merged_len += b - a;
      }
    }
    const MergedGapStats s = merged_gap_stats(table(), n, {.force = false, .threads = 3});
    REQUIRE(s.beating_bars == bars.size());
    REQUIRE(s.omega_gaps == omegas.size());
    REQUIRE(s.omega_gap_length_sum == static_cast<unsigned long>(len));
    REQUIRE(s.merged_gaps == merged);
    REQUIRE(s.merged_length_sum == static_cast<unsigned long>(merged_len));
    mpq_class mean(static_cast<unsigned long>(merged_len), static_cast<unsigned long>(merged));
    mean.canonicalize();
    REQUIRE(s.empirical_mean == mean);
    REQUIRE(s.predicted_mean == 2 * delta_bar(table(), n - 1));
    REQUIRE(s.deviation == s.empirical_mean - s.predicted_mean);
  }
  const MergedGapStats s4 = merged_gap_stats(table(), 4);
  CHECK(s4.beating_bars == 6);
  CHECK(s4.predicted_mean == mpq_class(10, 3));
  CHECK(s4.omega_gap_length_sum == 35);
  CHECK(merged_gap_stats(table(), 5).predicted_mean == mpq_class(14, 3));
}

TEST_CASE("symmetry of the omega residues") {
  CHECK(symmetry_check(table(), 3));
  CHECK(symmetry_check(table(), 4));
  // Brute force with the gcd definition for small moduli.
  for (std::size_t n = 3; n <= 5; ++n) {
    const mpz_class m = reduced_primorial(table(), n);
    const std::uint64_t mod = m.get_ui();
    for (std::uint64_t r = 1; r <= mod; ++r) {
      const auto in_set = [&](std::uint64_t v) {
        const mpz_class q = static_cast<unsigned long>(v);
        return gcd(mpz_class(36 * q * q - 1), m) == 1;
      };
      REQUIRE(in_set(r) == in_set(mod - r));
    }
  }
  for (std::size_t n = 3; n <= 8; ++n) REQUIRE(symmetry_check(table(), n, {.force = false, .threads = 2}));
}

TEST_CASE("origin incongruence") {
  CHECK(origin_incongruence(table(), 3, 4));
  CHECK(origin_incongruence(table(), 3, 5));
  CHECK(origin_incongruence(table(), 4, 5));
  CHECK_THROWS_AS(origin_incongruence(table(), 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(origin_incongruence(table(), 6, 4), std::invalid_argument);
  CHECK_THROWS_AS(origin_incongruence(table(), 2, 4), std::invalid_argument);
  for (std::size_t n = 4; n <= 80; ++n) {
    for (std::size_t m = 3; m < n; ++m) REQUIRE(origin_incongruence(table(), m, n));
  }
}

TEST_CASE("recursive period decomposition") {
  const auto blocks = pd1_decomposition(table(), 3);
  REQUIRE(blocks.size() == 8);
  CHECK(blocks[0] == BigInterval(8, 8));
  CHECK(blocks[1] == BigInterval(9, 13));
  CHECK(blocks[6] == BigInterval(34, 38));
  CHECK(blocks[7] == BigInterval(39, 42));
  CHECK(pd1_check(table(), 3));
  CHECK(pd1_check(table(), 4));
  CHECK(pd1_check(table(), 20));
  for (std::size_t n = 3; n <= 120; ++n) REQUIRE(pd1_check(table(), n));
}

TEST_CASE("overlap census") {
  // Terminal section found by walking the origins directly.
  const auto walk = [](std::size_t n) {
    const auto ps = oracle::primes_up_to(90000);
    const std::uint64_t end = oracle::origin(ps[n - 1]) + oracle::period(n, ps) - 1;
    std::size_t t = n;
    while (oracle::origin(ps[t]) <= end) ++t;  // ps[t] is p_{t+1}
    return t;
  };
  const OverlapReport r3 = overlap_census(table(), 3);
  CHECK(r3.period_end == 8);
  CHECK(r3.terminal_index == 4);
  CHECK(r3.spanned_sections == 1);

  const OverlapReport r9 = overlap_census(table(), 9);
  CHECK(r9.terminal_index == walk(9));
  CHECK(r9.terminal_index == 1748);
  CHECK(r9.spanned_sections == 1739);
  const OverlapReport r10 = overlap_census(table(), 10);
  CHECK(r10.terminal_index == walk(10));
  CHECK(r10.terminal_index == 7873);
  CHECK(r10.spanned_sections == 7863);

  CHECK(overlap_table_limit(10) >= 80447);
  CHECK_THROWS_AS(overlap_census(build_prime_table(10000), 9), InsufficientTable);
}

TEST_CASE("A-section probe") {
  const ProbeReport small = a_section_probe(table(), 3, 4);
  REQUIRE(small.rows.size() == 2);
  CHECK(small.rows[0].section == Interval(4, 7));
  CHECK(small.rows[0].twin_generators == 2);
  CHECK(small.rows[1].twin_generators == 4);
  const ProbeReport wide = a_section_probe(table(), 3, 200);
  CHECK(wide.empty_sections.empty());
  for (const auto& row : wide.rows) {
    std::uint64_t expected = 0;
    for (std::uint64_t x = row.section.lo(); x <= row.section.hi(); ++x) expected += oracle::twin(x);
    REQUIRE(row.twin_generators == expected);
  }
  CHECK_THROWS_AS(a_section_probe(table(), 5, 4), std::invalid_argument);
}
