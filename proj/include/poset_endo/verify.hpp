#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "poset_endo/generators.hpp"
#include "poset_endo/morphism.hpp"
#include "poset_endo/sweep.hpp"

namespace poset_endo {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  explicit SuiteReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  std::vector<CheckResult> checks;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  void check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["details"] = details;
    return j;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  SearchOptions search{1'000'000'000, true};
};

inline std::string str(const BigInt& v) { return v.str(); }

inline std::string describe(const Poset& p) {
  std::string out = "n=" + std::to_string(p.size()) + " covers=[";
  bool first = true;
  for (auto [u, v] : p.cover_list()) {
    out += (first ? "" : ",") + std::string("[") + std::to_string(u) + "," + std::to_string(v) + "]";
    first = false;
  }
  return out + "]";
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool has_single(const Poset& p, Element x) {
  return p.up_covers(x).size() == 1 || p.down_covers(x).size() == 1;
}

// -- oracle --------------------------------------------------------------------------------------

/// Counting and automorphism search against exhaustive enumeration.
inline SuiteReport verify_oracle(const VerifyOptions& opts) {
  SuiteReport rep{"oracle"};
  std::vector<NamedPoset> small;
  for (std::uint64_t i = 0; i < 100; ++i)
    small.push_back({"random_poset#" + std::to_string(i),
                     gen_random_poset(opts.seed * 7919 + i, 1 + i % 6, static_cast<double>(i % 5 + 1) / 6.0)});
  for (std::uint64_t i = 0; i < 100; ++i) {
    TowerSpec t;
    t.seed = opts.seed * 104729 + i;
    t.num_levels = 1 + i % 3;
    t.max_level_size = 2;
    t.density = 0.5;
    small.push_back({"random_tower#" + std::to_string(i), gen_random_tower(t)});
  }
  for (auto name : {FixtureName::Diamond, FixtureName::Sib, FixtureName::S3})
    small.push_back({"fixture#" + std::to_string(static_cast<int>(name)), fixture(name)});

  std::size_t agree = 0, aut_agree = 0;
  std::string first_failure;
  for (const auto& item : small) {
    const auto all = brute_force_endomorphisms(item.poset);
    SearchOptions plain = opts.search;
    plain.memo = false;
    SearchOptions memo = opts.search;
    memo.memo = true;
    const BigInt expected = all.size();
    const bool ok = count_endomorphisms(item.poset, plain) == expected && count_endomorphisms(item.poset, memo) == expected;
    std::vector<Morphism> bijective;
    for (const auto& m : all)
      if (m.bijective()) bijective.push_back(m);
    std::sort(bijective.begin(), bijective.end());
    const bool aut_ok = enumerate_automorphisms(item.poset, opts.search) == bijective;
    agree += ok;
    aut_agree += aut_ok;
    if (!(ok && aut_ok) && first_failure.empty()) first_failure = item.id + " " + describe(item.poset);
  }
  rep.check("endomorphism counts equal n^n enumeration", agree == small.size(),
            std::to_string(agree) + "/" + std::to_string(small.size()) + (first_failure.empty() ? "" : " first failure " + first_failure));
  rep.check("automorphisms equal bijective brute-force maps", aut_agree == small.size(),
            std::to_string(aut_agree) + "/" + std::to_string(small.size()));
  rep.details["small_instances"] = small.size();

  // Fixtures beyond n^n reach: plain vs memoised counting, permutations for Aut.
  for (auto name : {FixtureName::S4, FixtureName::K333, FixtureName::Ladder}) {
    Poset p = fixture(name);
    SearchOptions plain = opts.search, memo = opts.search;
    plain.memo = false;
    memo.memo = true;
    const BigInt a = count_endomorphisms(p, plain), b = count_endomorphisms(p, memo);
    rep.check("fixture " + std::to_string(static_cast<int>(name)) + " plain and memoised counts agree", a == b,
              str(a) + " vs " + str(b));
    rep.check("fixture " + std::to_string(static_cast<int>(name)) + " automorphisms equal permutation search",
              enumerate_automorphisms(p, opts.search) == brute_force_automorphisms(p));
  }
  {
    Poset p = fixture(FixtureName::K333x5);
    rep.check("K333x5 has 3!^5 automorphisms", count_automorphisms(p, opts.search) == 7776);
  }

  auto diamond = count_result(fixture(FixtureName::Diamond), opts.search);
  rep.check("diamond (|Aut|, |End|) = (2, 36)", diamond.aut_count == 2 && diamond.end_count == 36,
            "(" + str(diamond.aut_count) + ", " + str(diamond.end_count) + ")");
  for (unsigned n = 2; n <= 8; ++n) {
    Poset chain = gen_chain(n);
    auto r = count_result(chain, opts.search);
    const BigInt expected = binomial(2 * n - 1, n - 1);
    bool ok = r.aut_count == 1 && r.end_count == expected;
    if (n <= 6) ok = ok && BigInt(brute_force_endomorphisms(chain).size()) == expected;
    rep.check("chain of " + std::to_string(n) + " has (1, C(" + std::to_string(2 * n - 1) + "," +
                  std::to_string(n - 1) + "))",
              ok, "(" + str(r.aut_count) + ", " + str(r.end_count) + ") expected end " + str(expected));
  }
  return rep;
}

// -- singles -------------------------------------------------------------------------------------

inline std::vector<Poset> singles_instances(std::uint64_t seed) {
  std::vector<Poset> out;
  for (std::uint64_t i = 0; i < 120; ++i) {
    TowerSpec t;
    t.seed = seed * 31337 + i;
    t.num_levels = 2 + i % 3;
    t.max_level_size = 3;
    t.density = 0.45;
    out.push_back(gen_random_tower(t));
  }
  for (std::uint64_t i = 0; i < 80; ++i) out.push_back(gen_random_poset(seed * 65537 + i, 3 + i % 5, 0.4));
  out.push_back(fixture(FixtureName::Diamond));
  out.push_back(gen_diamond_tower(3));
  out.push_back(gen_chain(5));
  return out;
}

/// (x, φ) -> U_x ∘ φ is injective, so |End| >= u |Aut|.
inline SuiteReport verify_singles(const VerifyOptions& opts) {
  SuiteReport rep{"singles"};
  std::size_t tested = 0, injective = 0, bounded = 0, preserving = 0;
  std::string failure;
  for (const Poset& p : singles_instances(opts.seed)) {
    const auto ups = find_singles(p).up;
    if (ups.empty()) continue;
    ++tested;
    std::vector<Morphism> us;
    bool all_preserving = true;
    for (Element x : ups) {
      us.push_back(construct_U(p, x));
      all_preserving = all_preserving && is_order_preserving(p, us.back()) && !us.back().bijective();
    }
    const auto auts = enumerate_automorphisms(p, opts.search);
    const auto stats = distinct_compositions(us, auts);
    const bool inj = stats.distinct == ups.size() * auts.size() && stats.max_multiplicity == 1;
    const BigInt end = count_endomorphisms(p, opts.search);
    const bool bound = BigInt(auts.size()) * ups.size() <= end;
    injective += inj;
    bounded += bound;
    preserving += all_preserving;
    if ((!inj || !bound || !all_preserving) && failure.empty()) failure = describe(p);
  }
  const auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(tested); };
  rep.check("instances with up-singles exist", tested > 0, std::to_string(tested));
  rep.check("every U_x is an order-preserving non-bijection", preserving == tested, frac(preserving));
  rep.check("distinct U-compositions = u * |Aut| with multiplicity 1", injective == tested, frac(injective) + " " + failure);
  rep.check("ratio <= 1/u", bounded == tested, frac(bounded));
  rep.details["instances"] = tested;
  return rep;
}

// -- siblings ------------------------------------------------------------------------------------

/// Multiplicity of V_{a,b} ∘ φ never exceeds two and reaches two only for twins.
inline SuiteReport verify_siblings(const VerifyOptions& opts) {
  SuiteReport rep{"siblings"};
  std::vector<Poset> instances;
  for (std::uint64_t i = 0; i < 200; ++i) {
    TowerSpec t;
    t.seed = opts.seed * 4099 + i;
    t.num_levels = 2 + i % 3;
    t.max_level_size = 3;
    t.density = 0.6;
    instances.push_back(gen_random_tower(t));
  }
  instances.push_back(fixture(FixtureName::Sib));
  instances.push_back(fixture(FixtureName::Diamond));
  instances.push_back(gen_diamond_tower(3));
  instances.push_back(fixture(FixtureName::K333));

  std::size_t tested = 0, bounded = 0, twin_exact = 0, preserving = 0, twins_seen = 0, non_twins_seen = 0;
  std::string failure;
  for (const Poset& p : instances) {
    const GradedInfo g = require_grading(p);
    const auto pairs = older_siblings(p, g);
    if (pairs.empty()) continue;
    ++tested;
    std::vector<Morphism> vs;
    bool ok_preserving = true;
    for (auto [a, b] : pairs) {
      vs.push_back(construct_V(p, a, b));
      ok_preserving = ok_preserving && is_order_preserving(p, vs.back()) && !vs.back().bijective();
    }
    const auto auts = enumerate_automorphisms(p, opts.search);
    const auto stats = distinct_compositions(vs, auts);
    bool exact = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const bool twin = std::binary_search(pairs.begin(), pairs.end(), std::pair{pairs[i].second, pairs[i].first});
      (twin ? twins_seen : non_twins_seen)++;
      exact = exact && stats.per_constructor_max[i] == (twin ? 2u : 1u);
    }
    const bool bound = stats.max_multiplicity <= 2;
    bounded += bound;
    twin_exact += exact;
    preserving += ok_preserving;
    if ((!bound || !exact || !ok_preserving) && failure.empty()) failure = describe(p);
  }
  const auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(tested); };
  rep.check("instances with older siblings exist", tested > 0 && twins_seen > 0 && non_twins_seen > 0,
            std::to_string(tested) + " posets, " + std::to_string(twins_seen) + " twin and " +
                std::to_string(non_twins_seen) + " non-twin ordered pairs");
  rep.check("every V_{a,b} is an order-preserving non-bijection", preserving == tested, frac(preserving));
  rep.check("max multiplicity of V ∘ φ is at most 2", bounded == tested, frac(bounded) + " " + failure);
  rep.check("multiplicity 2 exactly for twin pairs", twin_exact == tested, frac(twin_exact));
  rep.details["instances"] = tested;
  return rep;
}

// -- whidth 2 ------------------------------------------------------------------------------------

inline SuiteReport verify_whidth2(const VerifyOptions& opts) {
  SuiteReport rep{"whidth2"};
  std::vector<Rational> ratios;
  bool twins_everywhere = true;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t k = 1; k <= 6; ++k) {
    Poset p = gen_diamond_tower(k);
    const GradedInfo g = require_grading(p);
    auto r = count_result(p, opts.search);
    ratios.push_back(r.ratio);
    rows.push_back({{"k", k}, {"aut", str(r.aut_count)}, {"end", str(r.end_count)}, {"ratio", to_string(r.ratio)}});
    const auto twins = twin_pairs(older_siblings(p, g));
    for (Rank odd = 1; odd <= g.top_rank; odd += 2) {
      bool found = false;
      for (auto [a, b] : twins) found = found || (g.ranks[a] == odd && g.ranks[b] == odd);
      twins_everywhere = twins_everywhere && found;
    }
  }
  rep.details["diamond_towers"] = rows;
  rep.check("k=1 ratio is 1/18", ratios.front() == Rational(1, 18), to_string(ratios.front()));
  bool strictly = true;
  for (std::size_t i = 1; i < ratios.size(); ++i) strictly = strictly && ratios[i] < ratios[i - 1];
  rep.check("ratios strictly decrease for k = 1..6", strictly);
  rep.check("twin detector fires on every odd rank", twins_everywhere);

  // Rank-2 windows of whidth-2 towers free of singles have twin middles.
  std::size_t windows = 0, clean = 0, twin_middles = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    TowerSpec t;
    t.seed = opts.seed * 9973 + i;
    t.num_levels = 3 + i % 6;
    t.max_level_size = 2;
    t.min_level_size = 2;
    t.density = 0.9;
    Poset p = gen_random_tower(t);
    const GradedInfo g = require_grading(p);
    for (Rank lo = 0; lo + 2 <= g.top_rank; ++lo) {
      ++windows;
      Window w = window(p, g, lo, 2);
      if (std::any_of(w.elements.begin(), w.elements.end(), [&](Element e) { return has_single(p, e); })) continue;
      ++clean;
      const auto middle = g.level(lo + 1);
      twin_middles += middle.size() == 2 && is_older_sibling(p, g, middle[0], middle[1]) &&
                      is_older_sibling(p, g, middle[1], middle[0]);
    }
  }
  rep.check("single-free rank-2 windows have twin middle elements", clean > 0 && twin_middles == clean,
            std::to_string(twin_middles) + "/" + std::to_string(clean) + " of " + std::to_string(windows) + " windows");
  return rep;
}

// -- whidth 3 ------------------------------------------------------------------------------------

inline TowerSpec dense_whidth3_tower(std::uint64_t seed, std::size_t levels) {
  TowerSpec t;
  t.seed = seed;
  t.num_levels = levels;
  t.min_level_size = 2;
  t.max_level_size = 3;
  t.density = 0.5;
  t.min_degree = 2;
  return t;
}

inline SuiteReport verify_whidth3(const VerifyOptions& opts) {
  SuiteReport rep{"whidth3"};

  // Exhaustive: rank-2 posets with levels of at most 3.
  std::size_t examined = 0, at_max = 0;
  BigInt best = 0;
  std::string best_key;
  const std::string k333_key = as_window(fixture(FixtureName::K333)).canonical_key;
  EnumerateOptions eo;
  enumerate_all_graded(2, 3, [&](const Poset& p) {
    if (p.depth(p.linear_extension().back()) != 2) return;
    ++examined;
    const BigInt a = count_automorphisms(p, opts.search);
    if (a > best) {
      best = a;
      at_max = 0;
      best_key = as_window(p).canonical_key;
    }
    if (a == best) ++at_max;
  }, eo);
  rep.details["rank2_posets"] = examined;
  rep.details["max_aut"] = str(best);
  rep.check("max |Aut| over rank-2 posets with levels <= 3 is 216", best == 216,
            str(best) + " over " + std::to_string(examined) + " labelled posets");
  rep.check("the maximum is attained only by K333", best_key == k333_key && at_max == 1,
            std::to_string(at_max) + " labelled posets attain it");

  // Random single-free whidth-3 towers.
  std::size_t towers = 0, single_free = 0, gap_ok = 0, f_ok = 0, f_total = 0;
  std::string failure;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Poset p = gen_random_tower(dense_whidth3_tower(opts.seed * 1000003 + i, 5 + i % 3));
    const GradedInfo g = require_grading(p);
    ++towers;
    bool interior_clean = true;
    for (Element x = 0; x < p.size(); ++x)
      if (g.ranks[x] > 0 && g.ranks[x] < g.top_rank && has_single(p, x)) interior_clean = false;
    single_free += interior_clean;
    bool gap = true;
    for (Element s = 0; s < p.size(); ++s)
      for (Element t = 0; t < p.size(); ++t)
        if (g.ranks[t] == g.ranks[s] + 2 && !p.less(s, t)) gap = false;
    gap_ok += gap;
    for (Rank lo = 0; lo + 4 <= g.top_rank; ++lo) {
      Window w = window(p, g, lo, 4);
      for (Element x : g.level(lo + 2)) {
        ++f_total;
        try {
          Morphism f = construct_F(p, w, x);
          f_ok += is_order_preserving(p, f) && !f.bijective();
        } catch (const Error&) {
          if (failure.empty()) failure = describe(p);
        }
      }
    }
  }
  rep.check("generated towers have no singles on interior ranks", single_free == towers,
            std::to_string(single_free) + "/" + std::to_string(towers));
  rep.check("r(t) = r(s) + 2 implies s < t", gap_ok == towers, std::to_string(gap_ok) + "/" + std::to_string(towers));
  rep.check("construct_F succeeds at every window middle element", f_ok == f_total && f_total > 0,
            std::to_string(f_ok) + "/" + std::to_string(f_total) + " " + failure);

  // Stacked instances: |Aut| / |End| <= 216 / c.
  // Composition multisets are materialised, so only moderate groups are composed.
  constexpr unsigned kCompositionLimit = 50'000;
  std::size_t stacks = 0, ratio_ok = 0, distinct_ok = 0, composed = 0;
  auto rows = nlohmann::ordered_json::array();
  for (std::uint64_t b = 0; b < 6; ++b) {
    Poset block_poset = gen_random_tower(dense_whidth3_tower(opts.seed * 7777 + b, 5));
    Window block = as_window(block_poset);
    for (std::size_t k = 1; k <= 3; ++k) {
      Poset p = gen_stacked(block, k, Glue::complete(block));
      const GradedInfo g = require_grading(p);
      const auto repeat = find_repeating_windows(p, g, 4);
      const RepeatGroup* grp = repeat.find(block.canonical_key);
      if (!grp) continue;
      ++stacks;
      const std::size_t c = grp->c();
      const BigInt aut = count_automorphisms(p, opts.search);
      const BigInt end = count_endomorphisms(p, opts.search);
      const bool ratio = aut * c <= BigInt(216) * end;
      ratio_ok += ratio;
      nlohmann::ordered_json row{{"block", b}, {"k", k}, {"c", c}, {"aut", str(aut)}, {"end", str(end)}};
      if (aut <= kCompositionLimit) {
        const auto auts = enumerate_automorphisms(p, opts.search);
        std::vector<Morphism> fs;
        for (Rank lo : grp->chosen) fs.push_back(construct_F(p, window(p, g, lo, 4), g.level(lo + 2).front()));
        const auto stats = distinct_compositions(fs, auts);
        ++composed;
        distinct_ok += 216 * stats.distinct >= c * auts.size() && stats.max_multiplicity <= 216;
        row["distinct_F"] = stats.distinct;
        row["max_multiplicity"] = stats.max_multiplicity;
      }
      rows.push_back(row);
    }
  }
  rep.details["stacked"] = rows;
  rep.check("ratio <= 216/c on every stacked instance", stacks > 0 && ratio_ok == stacks,
            std::to_string(ratio_ok) + "/" + std::to_string(stacks));
  rep.check("distinct F-compositions >= c |Aut| / 216", composed > 0 && distinct_ok == composed,
            std::to_string(distinct_ok) + "/" + std::to_string(composed) + " instances with |Aut| <= " +
                std::to_string(kCompositionLimit));
  return rep;
}

// -- whidth 4 ------------------------------------------------------------------------------------

inline SuiteReport verify_whidth4_cases(const VerifyOptions& opts) {
  SuiteReport rep{"whidth4-cases"};
  {
    Poset p = fixture(FixtureName::S4);
    auto cls = classify_pair(p, require_grading(p), 0, 1);
    rep.check("S4 fixture classifies as S4", cls.tag == PairCase::S4 && cls.S.size() == 4 && cls.witness("z") == 7u,
              std::string(to_string(cls.tag)) + " " + cls.reason);
  }
  {
    Poset p = fixture(FixtureName::S3);
    auto cls = classify_pair(p, require_grading(p), 0, 1);
    rep.check("S3 fixture classifies as S3",
              cls.tag == PairCase::S3 && cls.witness("z") == 3u && cls.witness("x1") == 2u && cls.witness("y1") == 4u,
              std::string(to_string(cls.tag)));
  }
  Poset ladder = fixture(FixtureName::Ladder);
  const GradedInfo g = require_grading(ladder);
  auto cls = classify_pair(ladder, g, 0, 1);
  rep.check("LADDER classifies as S2-ladder with x1=4 y1=5 x2=8 y2=9 z1=6 t1=7",
            cls.tag == PairCase::S2Ladder && cls.witness("x1") == 4u && cls.witness("y1") == 5u &&
                cls.witness("x2") == 8u && cls.witness("y2") == 9u && cls.witness("z1") == 6u &&
                cls.witness("t1") == 7u,
            std::string(to_string(cls.tag)) + " " + cls.reason);
  {
    Poset k333 = fixture(FixtureName::K333);
    auto c = classify_pair(k333, require_grading(k333), 3, 4);
    rep.check("K333 middle pair is inapplicable", c.tag == PairCase::Inapplicable, c.reason);
  }
  if (cls.tag == PairCase::S2Ladder) {
    Morphism f = construct_swap(ladder, cls);
    std::vector<Element> expected{0, 1, 2, 3, 4, 5, 7, 7, 9, 9, 10};
    rep.check("swap map is exactly f(x2)=y2, f(z1)=t1, identity elsewhere", f.image == expected);
    rep.check("swap map is order-preserving and not bijective", is_order_preserving(ladder, f) && !f.bijective());
    const auto auts = enumerate_automorphisms(ladder, opts.search);
    const auto stats = distinct_compositions({f}, auts);
    rep.check("swap ∘ Aut yields at least |Aut|/2 distinct endomorphisms", 2 * stats.distinct >= auts.size(),
              std::to_string(stats.distinct) + " distinct from |Aut| = " + std::to_string(auts.size()));
    rep.details["ladder_aut"] = auts.size();
    rep.details["ladder_swap_distinct"] = stats.distinct;
  }

  // Propagation: above three of rank r and no down-singles at rank r+1 means
  // below all of rank r+1; dually downward.
  std::size_t towers = 0, ok = 0, applications = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    TowerSpec t;
    t.seed = opts.seed * 50021 + i;
    t.num_levels = 3 + i % 4;
    t.min_level_size = 2;
    t.max_level_size = 4;
    t.density = 0.5;
    t.min_degree = 2;
    Poset p = gen_random_tower(t);
    const GradedInfo gi = require_grading(p);
    ++towers;
    bool holds = true;
    for (Element x = 0; x < p.size(); ++x) {
      for (Rank r = gi.ranks[x] + 1; r < gi.top_rank; ++r) {
        const auto level = gi.level(r), next = gi.level(r + 1);
        const auto above = std::count_if(level.begin(), level.end(), [&](Element y) { return p.less(x, y); });
        const bool no_down_singles =
            std::none_of(next.begin(), next.end(), [&](Element y) { return p.down_covers(y).size() == 1; });
        if (above >= 3 && no_down_singles) {
          ++applications;
          holds = holds && std::all_of(next.begin(), next.end(), [&](Element y) { return p.less(x, y); });
        }
      }
      for (Rank s = gi.ranks[x]; s-- > 1;) {
        const auto level = gi.level(s), prev = gi.level(s - 1);
        const auto below = std::count_if(level.begin(), level.end(), [&](Element y) { return p.less(y, x); });
        const bool no_up_singles =
            std::none_of(prev.begin(), prev.end(), [&](Element y) { return p.up_covers(y).size() == 1; });
        if (below >= 3 && no_up_singles) {
          ++applications;
          holds = holds && std::all_of(prev.begin(), prev.end(), [&](Element y) { return p.less(y, x); });
        }
      }
    }
    ok += holds;
  }
  rep.check("propagation lemma on whidth-4 towers", ok == towers && applications > 0,
            std::to_string(ok) + "/" + std::to_string(towers) + " towers, " + std::to_string(applications) +
                " applications");
  return rep;
}

// -- zero posets ---------------------------------------------------------------------------------

inline SuiteReport verify_zero_posets(const VerifyOptions& opts) {
  SuiteReport rep{"zero-posets"};
  Rational max_two = 0, max_three = 0;
  std::string witness_two, witness_three;
  std::size_t with_zero = 0;
  bool half_ok = true, third_ok = true;
  for (std::size_t n = 2; n <= kMaxEnumeratedPosetSize; ++n) {
    enumerate_all_posets(n, [&](const Poset& p) {
      if (!minimum_element(p)) return;
      ++with_zero;
      const auto r = count_result(p, opts.search);
      half_ok = half_ok && r.ratio <= Rational(1, 2);
      if (r.ratio > max_two) {
        max_two = r.ratio;
        witness_two = describe(p);
      }
      if (n >= 3) {
        third_ok = third_ok && r.ratio <= Rational(1, 3);
        if (r.ratio > max_three) {
          max_three = r.ratio;
          witness_three = describe(p);
        }
      }
    }, true);
  }
  rep.details["posets_with_zero"] = with_zero;
  rep.details["max_ratio_n_ge_2"] = {{"ratio", to_string(max_two)}, {"witness", witness_two}};
  rep.details["max_ratio_n_ge_3"] = {{"ratio", to_string(max_three)}, {"witness", witness_three}};
  rep.check("ratio <= 1/2 for posets with a zero, 2 <= n <= 5", half_ok,
            "max " + to_string(max_two) + " at " + witness_two);
  rep.check("ratio <= 1/3 for posets with a zero, 3 <= n <= 5", third_ok,
            "max " + to_string(max_three) + " at " + witness_three);
  return rep;
}

// -- pigeonhole ----------------------------------------------------------------------------------

inline std::vector<std::pair<std::string, Window>> pigeonhole_blocks(std::uint64_t seed) {
  std::vector<std::pair<std::string, Window>> out;
  out.emplace_back("diamond", as_window(fixture(FixtureName::Diamond)));
  out.emplace_back("complete_2_3_2", as_window(gen_complete_levels({2, 3, 2})));
  TowerSpec t;
  t.seed = seed;
  t.num_levels = 4;
  t.min_level_size = 2;
  t.max_level_size = 4;
  t.density = 0.5;
  t.min_degree = 2;
  out.emplace_back("random_whidth4", as_window(gen_random_tower(t)));
  return out;
}

/// Stacking k linked copies of a block realises k rank-disjoint copies.
inline SuiteReport verify_pigeonhole(const VerifyOptions& opts) {
  SuiteReport rep{"pigeonhole"};
  for (const auto& [name, block] : pigeonhole_blocks(opts.seed)) {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 1; k <= 8; ++k) {
      Poset p = gen_stacked(block, k, Glue::complete(block));
      const GradedInfo g = require_grading(p);
      const auto repeat = find_repeating_windows(p, g, block.span);
      const RepeatGroup* grp = repeat.find(block.canonical_key);
      const std::size_t c = grp ? grp->c() : 0;
      ok = ok && c >= k;
      detail += (detail.empty() ? "c=" : ",") + std::to_string(c);
    }
    rep.check("block " + name + ": c >= k for k = 1..8", ok, detail);
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"singles", "siblings",    "whidth2", "whidth3",
                                              "whidth4-cases", "zero-posets", "oracle", "pigeonhole"};
  return names;
}

inline SuiteReport run_suite(std::string_view name, const VerifyOptions& opts = {}) {
  if (name == "oracle") return verify_oracle(opts);
  if (name == "singles") return verify_singles(opts);
  if (name == "siblings") return verify_siblings(opts);
  if (name == "whidth2") return verify_whidth2(opts);
  if (name == "whidth3") return verify_whidth3(opts);
  if (name == "whidth4-cases") return verify_whidth4_cases(opts);
  if (name == "zero-posets") return verify_zero_posets(opts);
  if (name == "pigeonhole") return verify_pigeonhole(opts);
  throw Error(ErrorKind::UnknownSuite, std::string(name));
}

}  // namespace poset_endo
