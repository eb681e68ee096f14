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

#include "twinsieve/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ios>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "twinsieve/errors.hpp"
#include "twinsieve/primes.hpp"
#include "twinsieve/sieve.hpp"
#include "twinsieve/stats.hpp"

namespace twinsieve::cli {

namespace {

constexpr std::size_t kTheorem2DefaultMax = 10000;
constexpr std::size_t kSymmetryDefaultMax = 8;
constexpr std::size_t kTheorem4DefaultMax = 60;
constexpr std::size_t kPd1DefaultMax = 50;
constexpr std::uint64_t kIdentityDefaultLimit = 100000;

class HelpRequested : public std::runtime_error {
 public:
  explicit HelpRequested(const std::string& text) : std::runtime_error(text) {}
};

Interval parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like LO..HI, got '" + text + "'");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const std::uint64_t lo = std::stoull(lo_text, &used_lo);
    const std::uint64_t hi = std::stoull(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo_text[0] == '-' || hi_text[0] == '-') {
      throw UsageError("malformed range '" + text + "'");
    }
    return Interval(lo, hi);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed range '" + text + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("range bound out of range in '" + text + "'");
  }
}

std::size_t require_index(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  if (*v < kFirstSieve) throw UsageError(std::string(flag) + " must be >= 3");
  return *v;
}

// [first, last] sieve indices from --n or --n-max.
std::pair<std::size_t, std::size_t> index_span(const RunConfig& c, std::size_t first) {
  if (c.n) return {require_index(c.n, "--n"), *c.n};
  if (c.n_max) {
    const std::size_t last = require_index(c.n_max, "--n-max");
    if (last < first) throw UsageError("--n-max must be >= " + std::to_string(first));
    return {first, last};
  }
  throw UsageError("missing required flag --n or --n-max");
}

void refuse_if_infeasible(std::size_t n, bool force) {
  if (n > kDefaultFeasibleIndex && !force) {
    throw FeasibilityRefused("n = " + std::to_string(n) + " exceeds the full-period scan bound n <= " +
                             std::to_string(kDefaultFeasibleIndex) + "; pass --force to run it");
  }
}

void validate(RunConfig& c) {
  switch (c.command) {
    case Command::kEnumerate:
      if (!c.range) throw UsageError("enumerate needs --max or --range");
      if (c.n) require_index(c.n, "--n");
      break;
    case Command::kVerify:
      if (!c.suite) throw UsageError("verify needs --suite");
      switch (*c.suite) {
        case Suite::kTheorem1:
          if (!c.range) throw UsageError("verify --suite theorem1 needs --max or --range");
          break;
        case Suite::kTheorem2: c.n_max = c.n_max.value_or(kTheorem2DefaultMax); break;
        case Suite::kIdentity211: break;
        case Suite::kSymmetry:
          c.n_max = c.n_max.value_or(kSymmetryDefaultMax);
          refuse_if_infeasible(*c.n_max, c.force);
          break;
        case Suite::kTheorem4: c.n_max = c.n_max.value_or(kTheorem4DefaultMax); break;
        case Suite::kPd1: c.n_max = c.n_max.value_or(kPd1DefaultMax); break;
      }
      if (c.n_max) require_index(c.n_max, "--n-max");
      if (*c.suite == Suite::kTheorem4 && *c.n_max < 4) throw UsageError("theorem4 needs --n-max >= 4");
      break;
    case Command::kCensus:
      refuse_if_infeasible(index_span(c, kFirstSieve).second, c.force);
      break;
    case Command::kBars:
      refuse_if_infeasible(index_span(c, kFirstSieve + 1).second, c.force);
      if (index_span(c, kFirstSieve + 1).first < kFirstSieve + 1) throw UsageError("bars needs --n >= 4");
      break;
    case Command::kGaps:
      refuse_if_infeasible(require_index(c.n, "--n"), c.force);
      if (c.merged && *c.n < kFirstSieve + 1) throw UsageError("gaps --merged needs --n >= 4");
      break;
    case Command::kBounds: require_index(c.n_max, "--n-max"); break;
    case Command::kOverlap: index_span(c, kFirstSieve); break;
    case Command::kProbe:
      if (c.range) {
        if (c.range->lo() < kFirstSieve) throw UsageError("probe --range must start at n >= 3");
      } else {
        index_span(c, kFirstSieve);
      }
      break;
    case Command::kPd1: index_span(c, kFirstSieve); break;
  }
}

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return v.get_num().get_str() + "/" + v.get_den().get_str(); }

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::kPass : CheckStatus::kFail; }

// ---- table sizing ---------------------------------------------------------

std::uint64_t generator_limit(std::uint64_t max_x) { return std::max<std::uint64_t>(13, isqrt(6 * max_x + 1)); }

std::uint64_t required_limit(const RunConfig& c) {
  switch (c.command) {
    case Command::kEnumerate:
      return c.n ? prime_limit_for_index(*c.n) : generator_limit(c.range->hi());
    case Command::kVerify:
      switch (*c.suite) {
        case Suite::kTheorem1: return 6 * c.range->hi() + 1;
        case Suite::kIdentity211: return kIdentityDefaultLimit;
        case Suite::kPd1: return prime_limit_for_index(*c.n_max + 1);
        default: return prime_limit_for_index(*c.n_max);
      }
    case Command::kCensus:
    case Command::kBars:
    case Command::kGaps:
      return prime_limit_for_index(c.n ? *c.n : *c.n_max);
    case Command::kBounds:
    case Command::kPd1:
      return prime_limit_for_index((c.n ? *c.n : *c.n_max) + 1);
    case Command::kOverlap: return overlap_table_limit(c.n ? *c.n : *c.n_max);
    case Command::kProbe: return prime_limit_for_index((c.range ? c.range->hi() : c.n ? *c.n : *c.n_max) + 1);
  }
  return 13;
}

PrimeTable acquire_table(const RunConfig& c, std::ostream& log) {
  const std::uint64_t limit = c.table_limit.value_or(required_limit(c));
  if (c.table_cache) {
    const std::filesystem::path path(*c.table_cache);
    if (std::filesystem::exists(path)) {
      PrimeTable cached = load_prime_table(path);
      if (cached.limit() >= limit) return cached;
      log << "prime cache " << path.string() << " too small (" << cached.limit() << " < " << limit
          << "), rebuilding\n";
    }
    PrimeTable built = build_prime_table(limit);
    save_prime_table(built, path);
    return built;
  }
  return build_prime_table(limit);
}

// ---- commands -------------------------------------------------------------

struct Outcome {
  Table report;
  Ledger ledger;
};

ScanOptions scan_options(const RunConfig& c) { return ScanOptions{c.force, std::max(1U, c.threads)}; }

Outcome run_enumerate(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("enumerate");
  const auto found = c.n ? enumerate_omega(table, *c.n, *c.range, c.threads)
                         : enumerate_twin_generators(table, *c.range, c.threads);
  ledger.add("count", "", std::to_string(found.size()), CheckStatus::kPass);
  return {positions_table(found), std::move(ledger)};
}

Ledger verify_theorem1(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("theorem1");
  const auto enumerated = enumerate_twin_generators(table, *c.range, c.threads);
  auto next = enumerated.begin();
  for (std::uint64_t x = c.range->lo(); x <= c.range->hi(); ++x) {
    const bool by_sieve = twin_by_sieve(table, x);
    const bool by_primes = twin_by_primality(table, x);
    const bool listed = next != enumerated.end() && *next == x;
    if (listed) ++next;
    if (by_sieve == by_primes && listed == by_primes) {
      ledger.count(CheckStatus::kPass);
    } else {
      ledger.add("x=" + std::to_string(x), by_primes ? "twin" : "not twin",
                 std::string(by_sieve ? "twin" : "not twin") + (listed ? ", enumerated" : ", not enumerated"),
                 CheckStatus::kFail);
    }
  }
  return ledger;
}

Ledger verify_theorem2(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("theorem2");
  for_each_frame(table, kFirstSieve, *c.n_max, [&](const SieveFrame& f) {
    const BarKind expected = f.prime_class == PrimeClass::kMinus ? BarKind::kABar : BarKind::kBBar;
    const std::uint64_t value = psi(f.origin, f.p);
    const BarKind kind = bar_kind(f.origin, f.p);
    if (value == 0 && kind == expected) {
      ledger.count(CheckStatus::kPass);
    } else {
      ledger.add("n=" + std::to_string(f.n), std::string("psi=0,") + to_string(expected),
                 "psi=" + std::to_string(value) + "," + to_string(kind), CheckStatus::kFail);
    }
  });
  return ledger;
}

Ledger verify_identity211(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("identity211");
  const auto primes = table.primes();
  if (primes.size() <= kFirstSieve - 1) throw InsufficientTable("identity211 needs primes >= 5");
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::uint64_t> pick_x(1, kMaxPosition - 1);
  std::uniform_int_distribution<std::size_t> pick_p(kFirstSieve - 1, primes.size() - 1);
  for (std::size_t i = 0; i < c.samples; ++i) {
    const std::uint64_t x = pick_x(rng);
    const std::uint64_t p = primes[pick_p(rng)];
    const std::uint64_t t = tau(x, p);
    const std::uint64_t k2 = (2 * kappa(p)) % p;
    const std::uint64_t rhs = (t * ((t + p - k2) % p)) % p;
    const std::uint64_t lhs = psi(x, p);
    if (lhs == rhs) {
      ledger.count(CheckStatus::kPass);
    } else {
      ledger.add("x=" + std::to_string(x) + ",p=" + std::to_string(p), std::to_string(rhs), std::to_string(lhs),
                 CheckStatus::kFail);
    }
  }
  return ledger;
}

Ledger verify_symmetry(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("symmetry");
  for (std::size_t n = kFirstSieve; n <= *c.n_max; ++n) {
    const bool ok = symmetry_check(table, n, scan_options(c));
    ledger.add("n=" + std::to_string(n), "closed", ok ? "closed" : "not closed", pass_if(ok));
  }
  return ledger;
}

Ledger verify_theorem4(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("theorem4");
  for (std::size_t n = kFirstSieve + 1; n <= *c.n_max; ++n) {
    for (std::size_t m = kFirstSieve; m < n; ++m) {
      if (origin_incongruence(table, m, n)) {
        ledger.count(CheckStatus::kPass);
      } else {
        ledger.add("m=" + std::to_string(m) + ",n=" + std::to_string(n), "incongruent", "congruent",
                   CheckStatus::kFail);
      }
    }
  }
  return ledger;
}

Ledger verify_pd1(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("pd1");
  for (std::size_t n = kFirstSieve; n <= *c.n_max; ++n) {
    const bool ok = pd1_check(table, n);
    ledger.add("n=" + std::to_string(n), "P_{n+1}", ok ? "P_{n+1}" : "mismatch", pass_if(ok));
  }
  return ledger;
}

Outcome run_verify(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger = [&] {
    switch (*c.suite) {
      case Suite::kTheorem1: return verify_theorem1(c, table);
      case Suite::kTheorem2: return verify_theorem2(c, table);
      case Suite::kIdentity211: return verify_identity211(c, table);
      case Suite::kSymmetry: return verify_symmetry(c, table);
      case Suite::kTheorem4: return verify_theorem4(c, table);
      case Suite::kPd1: return verify_pd1(c, table);
    }
    throw UsageError("unknown suite");
  }();
  Table report = ledger.table();
  return {std::move(report), std::move(ledger)};
}

Outcome run_census(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("census");
  const auto [first, last] = index_span(c, kFirstSieve);
  std::vector<CensusReport> reports;
  for (std::size_t n = first; n <= last; ++n) {
    reports.push_back(period_census(table, n, scan_options(c)));
    const auto& r = reports.back();
    ledger.add("n=" + std::to_string(n), str(r.expected), str(r.observed), pass_if(r.match));
  }
  return {census_table(reports), std::move(ledger)};
}

Outcome run_bars(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("bars");
  const auto [first, last] = index_span(c, kFirstSieve + 1);
  Table report;
  for (std::size_t n = first; n <= last; ++n) {
    const BeatingBarsReport r = beating_bars(table, n, scan_options(c), c.events);
    ledger.add("n_new=" + std::to_string(n), str(r.expected), str(r.count), pass_if(r.count == r.expected));
    Table part = c.events ? bar_events_table(r) : bars_summary_table(r);
    if (report.columns.empty()) report.columns = part.columns;
    for (auto& row : part.rows) report.rows.push_back(std::move(row));
  }
  return {std::move(report), std::move(ledger)};
}

Outcome run_gaps(const RunConfig& c, const PrimeTable& table) {
  const std::size_t n = *c.n;
  const mpz_class period = reduced_primorial(table, n);
  if (c.merged) {
    Ledger ledger("gaps-merged");
    const MergedGapStats s = merged_gap_stats(table, n, scan_options(c));
    ledger.add("conservation", str(period), str(s.omega_gap_length_sum), pass_if(s.omega_gap_length_sum == period));
    const mpz_class bars_expected = 2 * phi(table, n - 1);
    ledger.add("beating_bars", str(bars_expected), std::to_string(s.beating_bars),
               pass_if(mpz_class(static_cast<unsigned long>(s.beating_bars)) == bars_expected));
    return {merged_gap_table(s), std::move(ledger)};
  }
  Ledger ledger("gaps");
  const GapHistogram h = gap_histogram(table, n, scan_options(c));
  ledger.add("conservation", str(period), str(h.length_sum), pass_if(h.length_sum == period));
  const mpq_class expected_mean = delta_bar(table, n);
  ledger.add("mean", str(expected_mean), str(h.mean), pass_if(h.mean == expected_mean));
  return {gap_table(h), std::move(ledger)};
}

void audit(Ledger& ledger, const std::string& id, Relation r, bool equality_flags) {
  switch (r) {
    case Relation::kStrict: ledger.count(CheckStatus::kPass); return;
    case Relation::kEqual:
      ledger.add(id, "strict", "equal", equality_flags ? CheckStatus::kEqualityFlag : CheckStatus::kFail);
      return;
    case Relation::kViolated: ledger.add(id, "strict", "violated", CheckStatus::kFail); return;
  }
}

Outcome run_bounds(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("bounds");
  const auto rows = bound_report(table, *c.n_max);
  for (const auto& r : rows) {
    const std::string at = "[n=" + std::to_string(r.n) + "]";
    audit(ledger, "eta>3/p" + at, r.eta_vs_three_over_p, true);
    audit(ledger, "delta_bar<p/3" + at, r.delta_bar_vs_p_over_three, true);
    // Stated with >=, so equality is a pass.
    if (r.d_n_vs_lower_bound == Relation::kViolated) {
      ledger.add("d_n>=2(p+1)/3" + at, ">=", "violated", CheckStatus::kFail);
    } else {
      ledger.count(CheckStatus::kPass);
    }
    audit(ledger, "d_n<p^2/2" + at, r.d_n_vs_upper_bound, false);
    audit(ledger, "2delta_bar<d_n" + at, r.d_n_vs_two_delta_bar, false);
    if (r.p_vs_delta_bar_sq) audit(ledger, "delta_bar^2<p" + at, *r.p_vs_delta_bar_sq, false);
    if (r.d_n_vs_delta_bar_sq) audit(ledger, "delta_bar^2<d_n" + at, *r.d_n_vs_delta_bar_sq, false);
    if (r.eta_decreasing) audit(ledger, "eta_decreasing" + at, *r.eta_decreasing, false);
  }
  return {bounds_table(rows), std::move(ledger)};
}

Outcome run_overlap(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("overlap");
  const auto [first, last] = index_span(c, kFirstSieve);
  std::vector<OverlapReport> reports;
  for (std::size_t n = first; n <= last; ++n) {
    reports.push_back(overlap_census(table, n));
    const auto& r = reports.back();
    ledger.add("n=" + std::to_string(n), "O_t <= " + str(r.period_end) + " < O_{t+1}",
               "t=" + std::to_string(r.terminal_index), CheckStatus::kPass);
  }
  return {overlap_table(reports), std::move(ledger)};
}

Outcome run_probe(const RunConfig& c, const PrimeTable& table, std::ostream& log) {
  Ledger ledger("probe");
  const auto [first, last] = c.range ? std::pair<std::size_t, std::size_t>{c.range->lo(), c.range->hi()}
                                     : index_span(c, kFirstSieve);
  const ProbeReport report = a_section_probe(table, first, last);
  for (const auto& row : report.rows) {
    // Survivors of S_3..S_n inside A_n must be exactly the twin generators there.
    std::uint64_t by_sieve = 0;
    for (std::uint64_t x = row.section.lo(); x <= row.section.hi(); ++x) by_sieve += twin_by_sieve(table, x);
    ledger.add("n=" + std::to_string(row.n), std::to_string(by_sieve), std::to_string(row.twin_generators),
               pass_if(by_sieve == row.twin_generators));
  }
  for (std::size_t n : report.empty_sections) log << "finding: A_" << n << " contains no twin prime generator\n";
  return {probe_table(report), std::move(ledger)};
}

Outcome run_pd1(const RunConfig& c, const PrimeTable& table) {
  Ledger ledger("pd1");
  const auto [first, last] = index_span(c, kFirstSieve);
  Table report{{"n", "block", "lo", "hi"}, {}};
  for (std::size_t n = first; n <= last; ++n) {
    const bool ok = pd1_check(table, n);
    ledger.add("n=" + std::to_string(n), "P_{n+1}", ok ? "P_{n+1}" : "mismatch", pass_if(ok));
    Table blocks = interval_table(pd1_decomposition(table, n));
    for (auto& row : blocks.rows) {
      row.insert(row.begin(), Cell{std::uint64_t{n}});
      report.rows.push_back(std::move(row));
    }
  }
  return {std::move(report), std::move(ledger)};
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"twinsieve: twin prime generator sieve experiments"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string range_text;
  std::optional<std::uint64_t> max_x;
  std::string suite_text;

  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {"enumerate", Command::kEnumerate, "List twin prime generators (or omega numbers with --n) in a range"},
      {"verify", Command::kVerify, "Run a verification suite"},
      {"census", Command::kCensus, "Count omega numbers over one full period"},
      {"bars", Command::kBars, "Count beating bars of S_n over its period section"},
      {"gaps", Command::kGaps, "Cyclic omega gap histogram over one period"},
      {"bounds", Command::kBounds, "Exact inequality audit for n = 3..n-max"},
      {"overlap", Command::kOverlap, "How many A-sections a period section covers"},
      {"probe", Command::kProbe, "Count twin prime generators in each A-section"},
      {"pd1", Command::kPd1, "Recursive decomposition of the period section P_{n+1}"},
  };
  std::map<const CLI::App*, Command> commands;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    commands[sub] = e.command;
    sub->add_option("--n", config.n, "Sieve index n");
    sub->add_option("--n-max", config.n_max, "Largest sieve index");
    sub->add_option("--max", max_x, "Upper end X of the range [1, X]");
    sub->add_option("--range", range_text, "Inclusive range LO..HI");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", config.out, "Write the report to PATH");
    sub->add_flag("--force", config.force, "Allow full-period scans above the default bound");
    sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::Range(1U, 256U));
    sub->add_option("--table-limit", config.table_limit, "Override the prime table limit");
    sub->add_option("--table-cache", config.table_cache, "Load/store the prime table at PATH");
    if (e.command == Command::kVerify) {
      sub->add_option("--suite", suite_text, "theorem1|theorem2|identity211|symmetry|theorem4|pd1")
          ->check(CLI::IsMember({"theorem1", "theorem2", "identity211", "symmetry", "theorem4", "pd1"}));
      sub->add_option("--samples", config.samples, "identity211 sample count");
      sub->add_option("--seed", config.seed, "identity211 RNG seed");
    }
    if (e.command == Command::kBars) sub->add_flag("--events", config.events, "Emit every beating bar");
    if (e.command == Command::kGaps) sub->add_flag("--merged", config.merged, "Statistics of merged gaps");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) config.command = command;
  }
  config.format = format == "json" ? Format::kJson : Format::kCsv;
  if (max_x && !range_text.empty()) throw UsageError("--max and --range are mutually exclusive");
  if (max_x) {
    if (*max_x == 0) throw UsageError("--max must be positive");
    config.range = Interval(1, *max_x);
  }
  if (!range_text.empty()) config.range = parse_range(range_text);
  if (config.range && config.range->hi() >= kMaxPosition) throw UsageError("range exceeds 2^42");
  if (!suite_text.empty()) {
    static const std::map<std::string, Suite> suites = {
        {"theorem1", Suite::kTheorem1}, {"theorem2", Suite::kTheorem2}, {"identity211", Suite::kIdentity211},
        {"symmetry", Suite::kSymmetry}, {"theorem4", Suite::kTheorem4}, {"pd1", Suite::kPd1}};
    config.suite = suites.at(suite_text);
  }
  validate(config);
  return config;
}

RunResult run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const PrimeTable table = acquire_table(config, log);
  Outcome outcome = [&]() -> Outcome {
    switch (config.command) {
      case Command::kEnumerate: return run_enumerate(config, table);
      case Command::kVerify: return run_verify(config, table);
      case Command::kCensus: return run_census(config, table);
      case Command::kBars: return run_bars(config, table);
      case Command::kGaps: return run_gaps(config, table);
      case Command::kBounds: return run_bounds(config, table);
      case Command::kOverlap: return run_overlap(config, table);
      case Command::kProbe: return run_probe(config, table, log);
      case Command::kPd1: return run_pd1(config, table);
    }
    throw UsageError("unknown command");
  }();

  if (config.out) {
    std::ofstream file(*config.out, std::ios::trunc);
    if (!file) throw std::ios_base::failure("cannot open " + *config.out);
    emit(outcome.report, config.format, file);
  } else {
    emit(outcome.report, config.format, out);
  }
  log << outcome.ledger.summary() << '\n';
  for (const auto& r : outcome.ledger.records()) {
    if (r.status != CheckStatus::kPass) {
      log << "  " << to_string(r.status) << ' ' << r.id << ": expected " << r.expected << ", observed " << r.observed
          << '\n';
    }
  }
  const int code = outcome.ledger.ok() ? 0 : kExitCheckFailure;
  return RunResult{std::move(outcome.ledger), code};
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
  try {
    return run(parse_args(args), out, log).exit_code;
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InsufficientTable& e) {
    log << "insufficient prime table: " << e.what() << '\n';
    return kExitInsufficientTable;
  } catch (const FeasibilityRefused& e) {
    log << "refused: " << e.what() << '\n';
    return kExitFeasibility;
  } catch (const std::ios_base::failure& e) {
    log << "output error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace twinsieve::cli
