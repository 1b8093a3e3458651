#pragma once

#include <atomic>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "poset_endo/family.hpp"
#include "poset_endo/morphism.hpp"

namespace poset_endo {

struct BoundCheck {
  std::string name;
  std::string inequality;
  bool passed = false;
};

/// One row of a ratio sweep.
struct SweepRecord {
  std::string id;
  std::size_t n = 0;
  std::vector<std::size_t> whitney;  // empty when the poset is not graded
  std::size_t whidth = 0;
  std::optional<CountResult> counts;  // empty when the budget ran out
  std::size_t up_singles = 0;
  std::size_t sibling_pairs = 0;
  std::size_t twins = 0;
  std::size_t central = 0;
  std::size_t c_best = 0;
  std::vector<BoundCheck> bound_checks;
  std::string status = "ok";
};

struct SweepOptions {
  SearchOptions search;
  Rank span = 2;  // window span used for c_best
  std::size_t jobs = 1;
};

/// Six significant digits; advisory only.
inline std::string decimal_rendering(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.convert_to<double>());
  return buf;
}

inline std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r) << "/" << denominator(r);
  return out.str();
}

/// Bounds every row is checked against; each is recomputable from the
/// row's aut, end and up_singles columns.
inline std::vector<BoundCheck> sweep_bounds(const BigInt& aut, const BigInt& end, std::size_t up_singles) {
  std::vector<BoundCheck> out;
  out.push_back({"aut_le_end", "aut <= end", aut <= end});
  if (up_singles >= 1)
    out.push_back({"singles", "aut * up_singles <= end", aut * up_singles <= end});
  return out;
}

inline SweepRecord sweep_record(const NamedPoset& item, const SweepOptions& opts) {
  SweepRecord rec;
  rec.id = item.id;
  rec.n = item.poset.size();
  const Poset& p = item.poset;
  rec.up_singles = find_singles(p).up.size();
  if (!p.empty()) {
    auto graded = compute_grading(p);
    if (auto* g = std::get_if<GradedInfo>(&graded)) {
      rec.whitney = g->whitney;
      rec.whidth = g->whidth;
      auto rep = structure_report(p, *g);
      rec.sibling_pairs = rep.older_sibling_pairs.size();
      rec.twins = rep.twin_pairs.size();
      rec.central = rep.central_witnesses.size();
      rec.c_best = find_repeating_windows(p, *g, opts.span).best_c();
    }
  }
  try {
    rec.counts = count_result(p, opts.search);
    rec.bound_checks = sweep_bounds(rec.counts->aut_count, rec.counts->end_count, rec.up_singles);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    rec.status = "budget_exceeded";
  }
  return rec;
}

/// Rows in input order; workers pull indices from a shared counter.
inline std::vector<SweepRecord> run_sweep(const std::vector<NamedPoset>& items, const SweepOptions& opts) {
  std::vector<SweepRecord> rows(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) rows[i] = sweep_record(items[i], opts);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opts.jobs, items.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return rows;
}

inline constexpr const char* kSweepCsvHeader =
    "id,n,whidth,aut,end,ratio_num,ratio_den,ratio_dec,up_singles,sibling_pairs,twins,central,c_best,"
    "bounds_passed";

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

/// Ratios are non-increasing along the rows that have counts.
inline bool ratios_non_increasing(const std::vector<SweepRecord>& rows) {
  std::optional<Rational> prev;
  for (const auto& r : rows) {
    if (!r.counts) continue;
    if (prev && r.counts->ratio > *prev) return false;
    prev = r.counts->ratio;
  }
  return true;
}

/// CSV with LF endings. Rows whose budget ran out leave the count columns
/// empty and carry "budget_exceeded" in bounds_passed. A trailing comment
/// line summarises the trend.
inline std::string sweep_csv(const std::vector<SweepRecord>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const auto& r : rows) {
    out << csv_field(r.id) << "," << r.n << "," << r.whidth << ",";
    if (r.counts) {
      std::size_t passed = 0;
      for (const auto& b : r.bound_checks) passed += b.passed;
      out << r.counts->aut_count << "," << r.counts->end_count << "," << numerator(r.counts->ratio) << ","
          << denominator(r.counts->ratio) << "," << decimal_rendering(r.counts->ratio) << ",";
      out << r.up_singles << "," << r.sibling_pairs << "," << r.twins << "," << r.central << "," << r.c_best << ","
          << passed << "/" << r.bound_checks.size() << "\n";
    } else {
      out << ",,,,," << r.up_singles << "," << r.sibling_pairs << "," << r.twins << "," << r.central << ","
          << r.c_best << "," << r.status << "\n";
    }
  }
  if (!rows.empty()) {
    out << "# non_increasing=" << (ratios_non_increasing(rows) ? "true" : "false") << " final_ratio=";
    const SweepRecord* last = nullptr;
    for (const auto& r : rows)
      if (r.counts) last = &r;
    out << (last ? to_string(last->counts->ratio) : std::string("none")) << "\n";
  }
  return out.str();
}

}  // namespace poset_endo
