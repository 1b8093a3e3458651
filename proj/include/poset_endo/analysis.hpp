#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "poset_endo/window.hpp"

namespace poset_endo {

struct Singles {
  std::vector<Element> up;    // exactly one up-cover
  std::vector<Element> down;  // exactly one down-cover
};

inline Singles find_singles(const Poset& p) {
  Singles s;
  for (Element x = 0; x < p.size(); ++x) {
    if (p.up_covers(x).size() == 1) s.up.push_back(x);
    if (p.down_covers(x).size() == 1) s.down.push_back(x);
  }
  return s;
}

/// b is an older sibling of a: same rank, b covers everything a covers and
/// everything covering a also covers b.
inline bool is_older_sibling(const Poset& p, const GradedInfo& g, Element a, Element b) {
  if (a == b || g.ranks[a] != g.ranks[b]) return false;
  auto da = p.down_covers(a), db = p.down_covers(b);
  auto ua = p.up_covers(a), ub = p.up_covers(b);
  return std::includes(db.begin(), db.end(), da.begin(), da.end()) &&
         std::includes(ub.begin(), ub.end(), ua.begin(), ua.end());
}

/// All ordered pairs (a, b) with b an older sibling of a, sorted.
inline std::vector<std::pair<Element, Element>> older_siblings(const Poset& p, const GradedInfo& g) {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b)
      if (is_older_sibling(p, g, a, b)) out.emplace_back(a, b);
  return out;
}

/// Unordered pairs {a < b} present in both orders of `pairs`.
inline std::vector<std::pair<Element, Element>> twin_pairs(
    const std::vector<std::pair<Element, Element>>& pairs) {
  std::vector<std::pair<Element, Element>> out;
  for (auto [a, b] : pairs)
    if (a < b && std::binary_search(pairs.begin(), pairs.end(), std::pair{b, a})) out.emplace_back(a, b);
  return out;
}

/// Elements above everything r1 ranks below and below everything r2 ranks above.
inline std::vector<Element> central_elements(const Poset& p, const GradedInfo& g, Rank r1, Rank r2) {
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x) {
    const Rank r = g.ranks[x];
    if (r < r1 || r + r2 > g.top_rank) continue;
    bool central = true;
    for (Element y = 0; y < p.size() && central; ++y) {
      if (g.ranks[y] == r - r1 && !p.less(y, x)) central = false;
      if (g.ranks[y] == r + r2 && !p.less(x, y)) central = false;
    }
    if (central) out.push_back(x);
  }
  return out;
}

struct RepeatGroup {
  std::string key;
  std::vector<Rank> starts;   // every window start with this key, ascending
  std::vector<Rank> chosen;   // a maximum rank-disjoint subset of starts
  std::size_t c() const { return chosen.size(); }
};

/// Windows of a fixed span grouped by isomorphism class, with the maximum
/// number of pairwise rank-disjoint copies per class.
struct RepeatReport {
  Rank span = 0;
  std::vector<RepeatGroup> groups;  // sorted by key
  std::optional<std::size_t> best;  // index of the group maximising c

  std::size_t best_c() const { return best ? groups[*best].c() : 0; }
  const RepeatGroup* best_group() const { return best ? &groups[*best] : nullptr; }
  const RepeatGroup* find(const std::string& key) const {
    for (const auto& grp : groups)
      if (grp.key == key) return &grp;
    return nullptr;
  }
};

/// Greedy earliest-start selection; optimal for equal-length closed intervals.
inline std::vector<Rank> disjoint_starts(const std::vector<Rank>& sorted_starts, Rank span) {
  std::vector<Rank> chosen;
  for (Rank s : sorted_starts)
    if (chosen.empty() || s > chosen.back() + span) chosen.push_back(s);
  return chosen;
}

inline RepeatReport find_repeating_windows(const Poset& p, const GradedInfo& g, Rank span) {
  RepeatReport report;
  report.span = span;
  if (g.top_rank < span) return report;
  std::map<std::string, std::vector<Rank>> by_key;
  for (Rank lo = 0; lo + span <= g.top_rank; ++lo) by_key[window(p, g, lo, span).canonical_key].push_back(lo);
  for (auto& [key, starts] : by_key) {
    RepeatGroup grp{key, starts, disjoint_starts(starts, span)};
    report.groups.push_back(std::move(grp));
  }
  for (std::size_t i = 0; i < report.groups.size(); ++i)
    if (!report.best || report.groups[i].c() > report.groups[*report.best].c()) report.best = i;
  return report;
}

enum class PairCase { S4, S3, S2Ladder, Inapplicable };

constexpr std::string_view to_string(PairCase c) {
  switch (c) {
    case PairCase::S4: return "S4";
    case PairCase::S3: return "S3";
    case PairCase::S2Ladder: return "S2-ladder";
    case PairCase::Inapplicable: return "inapplicable";
  }
  return "?";
}

/// Where a pair (x, y) of equal rank lands in the whidth-4 case analysis.
///
/// S is the set of rank r+1 elements above x or y. Witnesses are named after
/// their roles: for S4 the up-cover pairs are x11/x12 and y11/y12 with rails
/// x21/x22, y21/y22, x31/x32, y31/y32 when the pairs share their up-covers;
/// for S3, z is the shared up-cover, x1/y1 the private ones and z1/z2 the
/// covers of z; for the ladder, x1/y1 = S, x2/y2 their common covers,
/// z1/t1 the extra element under x2/y2 and z0/t0 the shared floor below them.
struct PairClassification {
  Element x = 0;
  Element y = 0;
  Rank rank = 0;
  std::vector<Element> S;
  PairCase tag = PairCase::Inapplicable;
  std::string reason;
  std::vector<std::pair<std::string, Element>> witnesses;

  std::optional<Element> witness(std::string_view name) const {
    for (const auto& [n, e] : witnesses)
      if (n == name) return e;
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<Element> sorted_union(std::span<const Element> a, std::span<const Element> b) {
  std::vector<Element> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Element> sorted_minus(std::span<const Element> a, std::span<const Element> b) {
  std::vector<Element> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool same_covers(std::span<const Element> a, std::span<const Element> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// Records `prefix`1/`prefix`2 rails while both members of the pair share the
// same two up-covers.
inline void follow_rail(const Poset& p, Element first, Element second, char letter, int level,
                        PairClassification& out) {
  while (p.up_covers(first).size() == 2 && same_covers(p.up_covers(first), p.up_covers(second))) {
    first = p.up_covers(first)[0];
    second = p.up_covers(second)[1];
    std::string base = std::string(1, letter) + std::to_string(level);
    out.witnesses.emplace_back(base + "1", first);
    out.witnesses.emplace_back(base + "2", second);
    ++level;
  }
}

}  // namespace detail

inline PairClassification classify_pair(const Poset& p, const GradedInfo& g, Element x, Element y) {
  PairClassification cls;
  cls.x = x;
  cls.y = y;
  auto inapplicable = [&](std::string why) {
    cls.tag = PairCase::Inapplicable;
    cls.reason = std::move(why);
    return cls;
  };
  if (x >= p.size() || y >= p.size()) return inapplicable("element out of range");
  cls.rank = g.ranks[x];
  if (g.whidth > 4) return inapplicable("whidth exceeds 4");
  if (x == y) return inapplicable("x and y coincide");
  if (g.ranks[y] != g.ranks[x]) return inapplicable("x and y have different ranks");
  auto ux = p.up_covers(x), uy = p.up_covers(y);
  if (ux.size() != 2 || uy.size() != 2)
    return inapplicable("x or y is not below exactly two elements of the next rank");

  cls.S = detail::sorted_union(ux, uy);
  auto add = [&](const char* name, Element e) { cls.witnesses.emplace_back(name, e); };

  if (cls.S.size() == 4) {
    cls.tag = PairCase::S4;
    add("x11", ux[0]);
    add("x12", ux[1]);
    add("y11", uy[0]);
    add("y12", uy[1]);
    detail::follow_rail(p, ux[0], ux[1], 'x', 2, cls);
    detail::follow_rail(p, uy[0], uy[1], 'y', 2, cls);
    auto x21 = cls.witness("x21"), x22 = cls.witness("x22");
    auto y21 = cls.witness("y21"), y22 = cls.witness("y22");
    if (x21 && y21) {
      std::vector<Element> xs{*x21, *x22}, ys{*y21, *y22}, common;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
      cls.reason = "second-rail intersection size " + std::to_string(common.size());
      if (common.size() == 1) add("z", common[0]);
    }
    return cls;
  }

  if (cls.S.size() == 3) {
    cls.tag = PairCase::S3;
    std::vector<Element> common;
    std::set_intersection(ux.begin(), ux.end(), uy.begin(), uy.end(), std::back_inserter(common));
    const Element z = common[0];
    add("z", z);
    add("x1", ux[0] == z ? ux[1] : ux[0]);
    add("y1", uy[0] == z ? uy[1] : uy[0]);
    if (p.up_covers(z).size() == 2) {
      add("z1", p.up_covers(z)[0]);
      add("z2", p.up_covers(z)[1]);
    }
    return cls;
  }

  // |S| == 2: both x and y sit under the same pair.
  const Element x1 = cls.S[0], y1 = cls.S[1];
  if (p.up_covers(x1).size() != 2 || !detail::same_covers(p.up_covers(x1), p.up_covers(y1)))
    return inapplicable("S2 without a common two-element cover pair above S");
  const Element x2 = p.up_covers(x1)[0], y2 = p.up_covers(x1)[1];
  const std::vector<Element> rail{x1, y1};
  auto extra_x = detail::sorted_minus(p.down_covers(x2), rail);
  auto extra_y = detail::sorted_minus(p.down_covers(y2), rail);
  if (extra_x.size() != 1 || extra_y.size() != 1 || extra_x[0] == extra_y[0])
    return inapplicable("S2 without the z1/t1 side rails");
  cls.tag = PairCase::S2Ladder;
  add("x1", x1);
  add("y1", y1);
  add("x2", x2);
  add("y2", y2);
  add("z1", extra_x[0]);
  add("t1", extra_y[0]);
  std::vector<Element> floor;
  auto dz = p.down_covers(extra_x[0]), dt = p.down_covers(extra_y[0]);
  std::set_intersection(dz.begin(), dz.end(), dt.begin(), dt.end(), std::back_inserter(floor));
  if (floor.size() == 2 && floor[0] != x && floor[0] != y && floor[1] != x && floor[1] != y) {
    add("z0", floor[0]);
    add("t0", floor[1]);
  }
  return cls;
}

struct CentralWitness {
  Element x;
  Rank r1;
  Rank r2;
  friend auto operator<=>(const CentralWitness&, const CentralWitness&) = default;
};

struct StructureReport {
  std::vector<Element> up_singles;
  std::vector<Element> down_singles;
  std::vector<std::pair<Element, Element>> older_sibling_pairs;
  std::vector<std::pair<Element, Element>> twin_pairs;
  std::vector<CentralWitness> central_witnesses;
};

inline StructureReport structure_report(const Poset& p, const GradedInfo& g) {
  StructureReport rep;
  auto singles = find_singles(p);
  rep.up_singles = std::move(singles.up);
  rep.down_singles = std::move(singles.down);
  rep.older_sibling_pairs = older_siblings(p, g);
  rep.twin_pairs = twin_pairs(rep.older_sibling_pairs);
  for (Rank r1 : {1u, 2u})
    for (Rank r2 : {1u, 2u})
      for (Element x : central_elements(p, g, r1, r2)) rep.central_witnesses.push_back({x, r1, r2});
  std::sort(rep.central_witnesses.begin(), rep.central_witnesses.end());
  return rep;
}

}  // namespace poset_endo
