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

// Full-period scans. A period section is cut into disjoint pieces that are
// scanned independently; each piece yields a ScanPartial and partials are
// merged left to right. A partial keeps its first and last omega position
// so the gap that straddles a piece boundary is stitched exactly, and the
// cyclic wrap-around gap is closed once the whole period has been merged.

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "twinsieve/errors.hpp"
#include "twinsieve/stats.hpp"

namespace twinsieve {

namespace {

constexpr std::size_t kSegment = std::size_t{1} << 16;
constexpr std::uint8_t kEarlierSieves = 1;
constexpr std::uint8_t kNewSieve = 2;

// Partial result over a contiguous run of positions, relative to depth n:
// omega = survivors of S_3..S_n, bar = survivors of S_3..S_{n-1} struck by S_n.
struct ScanPartial {
  std::uint64_t omega = 0;
  std::uint64_t bars = 0;
  std::optional<std::uint64_t> first_omega;
  std::optional<std::uint64_t> last_omega;
  bool bar_before_first = false;
  bool bar_after_last = false;
  std::vector<std::uint64_t> gap_counts;  // interior gaps, indexed by length
  std::uint64_t merged_gaps = 0;
  std::uint64_t merged_length = 0;
  std::vector<BarEvent> events;

  void add_gap(std::uint64_t length, bool has_bar) {
    if (gap_counts.size() <= length) gap_counts.resize(length + 1, 0);
    ++gap_counts[length];
    if (has_bar) {
      ++merged_gaps;
      merged_length += length;
    }
  }

  void observe_omega(std::uint64_t x) {
    ++omega;
    if (last_omega) {
      add_gap(x - *last_omega, bar_after_last);
    } else {
      first_omega = x;
    }
    last_omega = x;
    bar_after_last = false;
  }

  void observe_bar() {
    ++bars;
    if (last_omega) {
      bar_after_last = true;
    } else {
      bar_before_first = true;
    }
  }
};

ScanPartial merge(ScanPartial left, ScanPartial right) {
  left.omega += right.omega;
  left.bars += right.bars;
  left.events.insert(left.events.end(), right.events.begin(), right.events.end());
  if (left.gap_counts.size() < right.gap_counts.size()) left.gap_counts.resize(right.gap_counts.size(), 0);
  for (std::size_t i = 0; i < right.gap_counts.size(); ++i) left.gap_counts[i] += right.gap_counts[i];
  left.merged_gaps += right.merged_gaps;
  left.merged_length += right.merged_length;

  if (!right.first_omega) {
    // Bars in a piece without survivors sit after everything on the left.
    if (right.bars > 0) {
      if (left.last_omega) {
        left.bar_after_last = true;
      } else {
        left.bar_before_first = true;
      }
    }
    return left;
  }
  if (!left.first_omega) {
    left.first_omega = right.first_omega;
    left.bar_before_first = left.bar_before_first || right.bar_before_first;
  } else {
    left.add_gap(*right.first_omega - *left.last_omega, left.bar_after_last || right.bar_before_first);
  }
  left.last_omega = right.last_omega;
  left.bar_after_last = right.bar_after_last;
  return left;
}

ScanPartial scan_piece(const PrimeTable& table, std::size_t n, const Interval& piece, bool collect_events) {
  ScanPartial out;
  const std::uint64_t p = table.nth_prime(n);
  std::vector<std::uint8_t> marks(kSegment);
  for (std::uint64_t lo = piece.lo(); lo <= piece.hi();) {
    const std::uint64_t len = std::min<std::uint64_t>(kSegment, piece.hi() - lo + 1);
    std::span<std::uint8_t> seg(marks.data(), len);
    std::fill(seg.begin(), seg.end(), std::uint8_t{0});
    strike_sieves(table, kFirstSieve, n - 1, lo, seg, kEarlierSieves);
    strike_sieves(table, n, n, lo, seg, kNewSieve);
    for (std::uint64_t j = 0; j < len; ++j) {
      const std::uint8_t m = seg[j];
      if (m & kEarlierSieves) continue;
      if (m & kNewSieve) {
        out.observe_bar();
        if (collect_events) out.events.push_back(BarEvent{lo + j, n, bar_kind(lo + j, p)});
      } else {
        out.observe_omega(lo + j);
      }
    }
    lo += len;
  }
  return out;
}

Interval period_positions(const PrimeTable& table, std::size_t n) {
  const BigInterval period = period_section(table, n);
  return Interval(period.lo().get_ui(), period.hi().get_ui());
}

struct PeriodScan {
  ScanPartial totals;
  std::uint64_t period_length;
  std::uint64_t wrap_gap;
  bool wrap_has_bar;
};

PeriodScan scan_period(const PrimeTable& table, std::size_t n, const ScanOptions& options, bool collect_events) {
  check_feasible(table, n, options.force);
  const Interval period = period_positions(table, n);
  auto partials = detail::map_pieces<ScanPartial>(
      detail::split_range(period, options.threads),
      [&](const Interval& piece) { return scan_piece(table, n, piece, collect_events); });
  ScanPartial totals;
  for (auto& part : partials) totals = merge(std::move(totals), std::move(part));
  if (!totals.first_omega) throw std::logic_error("period without omega numbers");
  // The last survivor connects to the first survivor of the next period.
  const std::uint64_t wrap = *totals.first_omega + period.length() - *totals.last_omega;
  const bool wrap_has_bar = totals.bar_after_last || totals.bar_before_first;
  return PeriodScan{std::move(totals), period.length(), wrap, wrap_has_bar};
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

void require_second_sieve(std::size_t n_new) {
  if (n_new < kFirstSieve + 1) throw std::invalid_argument("beating bars need n_new >= 4");
}

}  // namespace

void check_feasible(const PrimeTable& table, std::size_t n, bool force) {
  sieve_prime(table, n);
  if (n > kDefaultFeasibleIndex && !force) {
    throw FeasibilityRefused("full-period scan at n = " + std::to_string(n) + " exceeds the default bound n <= " +
                             std::to_string(kDefaultFeasibleIndex) + "; pass the override to run it");
  }
  const BigInterval period = period_section(table, n);
  if (cmp(period.hi(), static_cast<unsigned long>(kMaxPosition - 1)) > 0) {
    throw FeasibilityRefused("period section of n = " + std::to_string(n) + " exceeds addressable positions");
  }
}

CensusReport period_census(const PrimeTable& table, std::size_t n, const ScanOptions& options) {
  const PeriodScan scan = scan_period(table, n, options, false);
  CensusReport report{n, phi(table, n), to_mpz(scan.totals.omega), false};
  report.match = report.expected == report.observed;
  return report;
}

BeatingBarsReport beating_bars(const PrimeTable& table, std::size_t n_new, const ScanOptions& options,
                               bool collect_events) {
  require_second_sieve(n_new);
  PeriodScan scan = scan_period(table, n_new, options, collect_events);
  return BeatingBarsReport{n_new, to_mpz(scan.totals.bars), mpz_class(2 * phi(table, n_new - 1)),
                           std::move(scan.totals.events)};
}

GapHistogram gap_histogram(const PrimeTable& table, std::size_t n, const ScanOptions& options) {
  PeriodScan scan = scan_period(table, n, options, false);
  scan.totals.add_gap(scan.wrap_gap, false);
  GapHistogram hist{n, {}, 0, 0, 0};
  for (std::size_t len = 0; len < scan.totals.gap_counts.size(); ++len) {
    const std::uint64_t count = scan.totals.gap_counts[len];
    if (count == 0) continue;
    hist.gaps.emplace(len, count);
    hist.total_gaps += count;
    hist.length_sum += to_mpz(len) * to_mpz(count);
  }
  hist.mean = mpq_class(hist.length_sum, to_mpz(hist.total_gaps));
  hist.mean.canonicalize();
  return hist;
}

MergedGapStats merged_gap_stats(const PrimeTable& table, std::size_t n_new, const ScanOptions& options) {
  require_second_sieve(n_new);
  PeriodScan scan = scan_period(table, n_new, options, false);
  scan.totals.add_gap(scan.wrap_gap, scan.wrap_has_bar);
  MergedGapStats stats;
  stats.n_new = n_new;
  stats.beating_bars = scan.totals.bars;
  stats.omega_gaps = 0;
  stats.omega_gap_length_sum = 0;
  for (std::size_t len = 0; len < scan.totals.gap_counts.size(); ++len) {
    stats.omega_gaps += scan.totals.gap_counts[len];
    stats.omega_gap_length_sum += to_mpz(len) * to_mpz(scan.totals.gap_counts[len]);
  }
  stats.merged_gaps = scan.totals.merged_gaps;
  stats.merged_length_sum = to_mpz(scan.totals.merged_length);
  stats.empirical_mean = stats.merged_gaps == 0 ? mpq_class(0)
                                                : mpq_class(stats.merged_length_sum, to_mpz(stats.merged_gaps));
  stats.empirical_mean.canonicalize();
  stats.predicted_mean = 2 * delta_bar(table, n_new - 1);
  stats.deviation = stats.empirical_mean - stats.predicted_mean;
  return stats;
}

bool symmetry_check(const PrimeTable& table, std::size_t n, const ScanOptions& options) {
  check_feasible(table, n, options.force);
  const std::uint64_t modulus = reduced_primorial(table, n).get_ui();
  // Residue 0 (= modulus) is its own mirror.
  if (modulus < 2) return true;
  const auto verdicts = detail::map_pieces<std::uint8_t>(
      detail::split_range(Interval(1, modulus - 1), options.threads), [&](const Interval& piece) {
        std::vector<std::uint8_t> ahead(kSegment);
        std::vector<std::uint8_t> mirror(kSegment);
        for (std::uint64_t lo = piece.lo(); lo <= piece.hi();) {
          const std::uint64_t len = std::min<std::uint64_t>(kSegment, piece.hi() - lo + 1);
          std::span<std::uint8_t> a(ahead.data(), len);
          std::span<std::uint8_t> b(mirror.data(), len);
          std::fill(a.begin(), a.end(), std::uint8_t{0});
          std::fill(b.begin(), b.end(), std::uint8_t{0});
          strike_sieves(table, kFirstSieve, n, lo, a, 1);
          // Mirror of [lo, lo + len - 1] is [modulus - lo - len + 1, modulus - lo].
          strike_sieves(table, kFirstSieve, n, modulus - lo - len + 1, b, 1);
          for (std::uint64_t j = 0; j < len; ++j) {
            if (a[j] != b[len - 1 - j]) return false;
          }
          lo += len;
        }
        return true;
      });
  return std::all_of(verdicts.begin(), verdicts.end(), [](std::uint8_t v) { return v != 0; });
}

}  // namespace twinsieve
