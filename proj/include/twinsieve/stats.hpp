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

// Counting and verification layer on top of the twin sieve: survivor
// counts phi, permeability eta and mean distance delta_bar, inequality
// audits, full-period scans (census, beating bars, gap histograms, symmetry),
// origin incongruence, the recursive period decomposition, the period
// overlap census and an A-section probe.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "twinsieve/interval.hpp"
#include "twinsieve/primes.hpp"
#include "twinsieve/sieve.hpp"

namespace twinsieve {

// Full-period scans run by default up to this sieve index.
inline constexpr std::size_t kDefaultFeasibleIndex = 9;

struct ScanOptions {
  bool force = false;    // lifts the feasibility bound
  unsigned threads = 1;  // disjoint segments scanned concurrently
};

// Throws FeasibilityRefused when n > kDefaultFeasibleIndex without force, or
// when the period of S_3..S_n cannot be addressed with 64-bit positions.
void check_feasible(const PrimeTable& table, std::size_t n, bool force);

mpz_class phi(const PrimeTable& table, std::size_t n);
mpq_class eta(const PrimeTable& table, std::size_t n);
mpq_class delta_bar(const PrimeTable& table, std::size_t n);

enum class Relation {
  kStrict,    // the claimed inequality holds strictly
  kEqual,     // holds with equality
  kViolated,  // fails
};

// Compares lhs against rhs for a claim of the form lhs >= rhs (or lhs > rhs).
template <class A, class B>
Relation relate_at_least(const A& lhs, const B& rhs) {
  const int c = cmp(lhs, rhs);
  return c > 0 ? Relation::kStrict : (c == 0 ? Relation::kEqual : Relation::kViolated);
}

struct BoundsRow {
  std::size_t n;
  std::uint64_t p;
  mpq_class eta;
  mpq_class three_over_p;
  mpq_class delta_bar;
  std::uint64_t d_n;
  Relation eta_vs_three_over_p;       // eta >= 3/p
  Relation delta_bar_vs_p_over_three;  // p/3 >= delta_bar
  Relation d_n_vs_lower_bound;         // d_n >= (2/3)(p + 1)
  Relation d_n_vs_upper_bound;         // p^2 / 2 > d_n
  Relation d_n_vs_two_delta_bar;       // d_n > 2 delta_bar
  std::optional<Relation> p_vs_delta_bar_sq;    // p > delta_bar^2, only for p > 200
  std::optional<Relation> d_n_vs_delta_bar_sq;  // d_n > delta_bar^2, only for p > 200
  std::optional<Relation> eta_decreasing;       // eta(p_{n-1}) > eta(p_n), from n = 4
};

// Rows for n = 3..n_max. Needs p_{n_max + 1} in the table.
std::vector<BoundsRow> bound_report(const PrimeTable& table, std::size_t n_max);

struct CensusReport {
  std::size_t n;
  mpz_class expected;  // phi(p_n)
  mpz_class observed;  // omega numbers counted in the period section
  bool match;
};

CensusReport period_census(const PrimeTable& table, std::size_t n, const ScanOptions& options = {});

struct BarEvent {
  std::uint64_t x;
  std::size_t n_new;
  BarKind kind;
};

struct BeatingBarsReport {
  std::size_t n_new;
  mpz_class count;
  mpz_class expected;  // 2 phi(p_{n_new - 1})
  std::vector<BarEvent> events;
};

// Positions in period_section(n_new) that survive S_3..S_{n_new-1} and are
// struck by S_{n_new}. Events are collected only when requested.
BeatingBarsReport beating_bars(const PrimeTable& table, std::size_t n_new, const ScanOptions& options = {},
                               bool collect_events = false);

struct GapHistogram {
  std::size_t n;
  std::map<std::uint64_t, std::uint64_t> gaps;  // gap length -> count, cyclic over one period
  std::uint64_t total_gaps;
  mpz_class length_sum;
  mpq_class mean;
};

GapHistogram gap_histogram(const PrimeTable& table, std::size_t n, const ScanOptions& options = {});

struct MergedGapStats {
  std::size_t n_new;
  std::uint64_t beating_bars;
  std::uint64_t omega_gaps;         // all cyclic omega_{p_{n_new}} gaps
  mpz_class omega_gap_length_sum;   // equals the period length
  std::uint64_t merged_gaps;        // gaps containing at least one beating bar
  mpz_class merged_length_sum;
  mpq_class empirical_mean;
  mpq_class predicted_mean;         // 2 delta_bar(p_{n_new - 1})
  mpq_class deviation;              // empirical - predicted
};

MergedGapStats merged_gap_stats(const PrimeTable& table, std::size_t n_new, const ScanOptions& options = {});

// r in R <=> (p_n#_5 - r) in R, where R are the omega residues modulo p_n#_5.
bool symmetry_check(const PrimeTable& table, std::size_t n, const ScanOptions& options = {});

// O_n mod p_m#_5 != O_m mod p_m#_5 for 3 <= m < n.
bool origin_incongruence(const PrimeTable& table, std::size_t m, std::size_t n);

// The blocks [O_{n+1}, O_n + p_n#_5 - 1], P_n^k for k = 1..p_{n+1} - 1 and
// A_n^+, in order.
std::vector<BigInterval> pd1_decomposition(const PrimeTable& table, std::size_t n);
// The decomposition is contiguous, non-overlapping and covers P_{n+1}.
bool pd1_check(const PrimeTable& table, std::size_t n);

struct OverlapReport {
  std::size_t n;
  mpz_class period_end;          // O_n + p_n#_5 - 1
  std::size_t terminal_index;    // t with O_t <= period_end < O_{t+1}
  std::size_t spanned_sections;  // A-sections A_n..A_{t-1}, all contained in P_n
};

OverlapReport overlap_census(const PrimeTable& table, std::size_t n);

// Table limit that lets overlap_census(n) locate the terminal A-section.
std::uint64_t overlap_table_limit(std::size_t n);

struct ProbeRow {
  std::size_t n;
  Interval section;
  std::uint64_t twin_generators;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::vector<std::size_t> empty_sections;
};

ProbeReport a_section_probe(const PrimeTable& table, std::size_t n_lo, std::size_t n_hi);

}  // namespace twinsieve
