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

#include "twinsieve/report.hpp"

#include <ios>

#include <json.hpp>

namespace twinsieve {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(const mpz_class& v) const { return v.get_str(); }
    std::string operator()(const mpq_class& v) const {
      return v.get_num().get_str() + "/" + v.get_den().get_str();
    }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(std::uint64_t v) const { return v; }
    ordered_json operator()(const mpz_class& v) const { return v.get_str(); }
    ordered_json operator()(const mpq_class& v) const {
      ordered_json q;
      q["num"] = v.get_num().get_str();
      q["den"] = v.get_den().get_str();
      return q;
    }
    ordered_json operator()(const std::string& v) const { return v; }
    ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

Cell optional_relation(const std::optional<Relation>& r) {
  if (!r) return std::monostate{};
  return std::string(to_string(*r));
}

Cell big(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

}  // namespace

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::kStrict: return "strict";
    case Relation::kEqual: return "equal";
    case Relation::kViolated: return "violated";
  }
  return "?";
}

const char* to_string(BarKind kind) {
  switch (kind) {
    case BarKind::kABar: return "a";
    case BarKind::kBBar: return "b";
    case BarKind::kNone: return "none";
  }
  return "?";
}

void emit(const Table& table, Format format, std::ostream& sink) {
  if (format == Format::kCsv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      sink << (c ? "," : "") << csv_escape(table.columns[c]);
    }
    sink << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) sink << (c ? "," : "") << csv_cell(row[c]);
      sink << '\n';
    }
  } else {
    auto records = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json record = ordered_json::object();
      for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = json_cell(row[c]);
      records.push_back(std::move(record));
    }
    sink << records.dump(2) << '\n';
  }
  sink.flush();
  if (!sink) throw std::ios_base::failure("report sink write failed");
}

Table positions_table(const std::vector<std::uint64_t>& positions) {
  Table t{{"x"}, {}};
  t.rows.reserve(positions.size());
  for (std::uint64_t x : positions) t.rows.push_back({x});
  return t;
}

Table census_table(const std::vector<CensusReport>& reports) {
  Table t{{"n", "expected", "observed", "match"}, {}};
  for (const auto& r : reports) t.rows.push_back({std::uint64_t{r.n}, r.expected, r.observed, r.match});
  return t;
}

Table bars_summary_table(const BeatingBarsReport& report) {
  return Table{{"n_new", "count", "expected"}, {{std::uint64_t{report.n_new}, report.count, report.expected}}};
}

Table bar_events_table(const BeatingBarsReport& report) {
  Table t{{"x", "n_new", "kind"}, {}};
  for (const auto& e : report.events) t.rows.push_back({e.x, std::uint64_t{e.n_new}, std::string(to_string(e.kind))});
  return t;
}

Table gap_table(const GapHistogram& histogram) {
  Table t{{"gap", "count"}, {}};
  for (const auto& [gap, count] : histogram.gaps) t.rows.push_back({gap, count});
  return t;
}

Table merged_gap_table(const MergedGapStats& s) {
  return Table{{"n_new", "beating_bars", "omega_gaps", "omega_gap_length_sum", "merged_gaps", "merged_length_sum",
                "empirical_mean", "predicted_mean", "deviation", "empirical_mean_approx", "predicted_mean_approx"},
               {{std::uint64_t{s.n_new}, big(s.beating_bars), big(s.omega_gaps), s.omega_gap_length_sum,
                 big(s.merged_gaps), s.merged_length_sum, s.empirical_mean, s.predicted_mean, s.deviation,
                 std::to_string(s.empirical_mean.get_d()), std::to_string(s.predicted_mean.get_d())}}};
}

Table bounds_table(const std::vector<BoundsRow>& rows) {
  Table t{{"n", "p", "eta", "three_over_p", "delta_bar", "d_n", "eta_vs_three_over_p", "delta_bar_vs_p_over_three",
           "d_n_vs_lower_bound", "d_n_vs_upper_bound", "d_n_vs_two_delta_bar", "p_vs_delta_bar_sq",
           "d_n_vs_delta_bar_sq", "eta_decreasing", "delta_bar_approx"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::uint64_t{r.n}, r.p, r.eta, r.three_over_p, r.delta_bar, r.d_n,
                      std::string(to_string(r.eta_vs_three_over_p)), std::string(to_string(r.delta_bar_vs_p_over_three)),
                      std::string(to_string(r.d_n_vs_lower_bound)), std::string(to_string(r.d_n_vs_upper_bound)),
                      std::string(to_string(r.d_n_vs_two_delta_bar)), optional_relation(r.p_vs_delta_bar_sq),
                      optional_relation(r.d_n_vs_delta_bar_sq), optional_relation(r.eta_decreasing),
                      std::to_string(r.delta_bar.get_d())});
  }
  return t;
}

Table overlap_table(const std::vector<OverlapReport>& reports) {
  Table t{{"n", "period_end", "terminal_index", "spanned_sections"}, {}};
  for (const auto& r : reports) {
    t.rows.push_back({std::uint64_t{r.n}, r.period_end, std::uint64_t{r.terminal_index},
                      std::uint64_t{r.spanned_sections}});
  }
  return t;
}

Table probe_table(const ProbeReport& report) {
  Table t{{"n", "lo", "hi", "twin_generators"}, {}};
  for (const auto& r : report.rows) {
    t.rows.push_back({std::uint64_t{r.n}, r.section.lo(), r.section.hi(), r.twin_generators});
  }
  return t;
}

Table interval_table(const std::vector<BigInterval>& blocks) {
  Table t{{"block", "lo", "hi"}, {}};
  for (std::size_t i = 0; i < blocks.size(); ++i) t.rows.push_back({std::uint64_t{i}, blocks[i].lo(), blocks[i].hi()});
  return t;
}

}  // namespace twinsieve
