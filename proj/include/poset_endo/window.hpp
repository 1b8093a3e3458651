#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poset_endo/grading.hpp"

namespace poset_endo {

/// Largest level the canonical-form search will permute (8! labelings).
inline constexpr std::size_t kMaxCanonicalLevel = 8;

/// Consecutive-rank slice [lo, lo + span] of a graded poset.
///
/// `elements` lists the source elements sorted by (rank, index); element i of
/// `induced` is elements[i]. `levels[i]` is its rank relative to lo.
/// `canonical_order` lists induced indices in canonical position, so two
/// windows with equal keys are matched position by position.
struct Window {
  Rank lo = 0;
  Rank span = 0;
  std::vector<Element> elements;
  Poset induced;
  std::vector<Rank> levels;
  std::string canonical_key;
  std::vector<Element> canonical_order;

  Rank hi() const { return lo + span; }
};

struct IsoMap {
  std::vector<std::pair<Element, Element>> forward;  // source elements, sorted by first
  long rank_shift = 0;

  friend bool operator==(const IsoMap&, const IsoMap&) = default;
};

namespace detail {

struct CanonicalResult {
  std::string key;
  std::vector<Element> order;
};

// Lexicographically minimal encoding of the level-to-level cover matrices over
// all level-preserving relabelings. The search runs level by level and keeps
// every labeling that attains the minimal prefix; since later blocks depend
// only on the ordering of the newest level, ties are collapsed on it.
inline CanonicalResult canonical_leveled(const Poset& p, const std::vector<Rank>& levels) {
  Rank top = 0;
  for (Rank r : levels) top = std::max(top, r);
  std::vector<std::vector<Element>> by_level(p.empty() ? 0 : top + 1);
  for (Element x = 0; x < p.size(); ++x) by_level[levels[x]].push_back(x);
  for (const auto& lvl : by_level)
    if (lvl.size() > kMaxCanonicalLevel)
      throw Error(ErrorKind::SizeLimit, "canonical form level of size " + std::to_string(lvl.size()));

  std::string key;
  key.push_back(static_cast<char>(by_level.size()));
  for (const auto& lvl : by_level) key.push_back(static_cast<char>(lvl.size()));
  if (by_level.empty()) return {key, {}};

  struct State {
    std::vector<Element> order;  // full labeling so far
    std::vector<Element> last;   // ordering of the newest level
  };
  std::vector<State> states;
  {
    std::vector<Element> perm = by_level[0];
    do {
      states.push_back({perm, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  for (std::size_t j = 0; j + 1 < by_level.size(); ++j) {
    std::string best;
    std::map<std::vector<Element>, std::vector<Element>> next;  // newest ordering -> labeling
    std::vector<Element> perm = by_level[j + 1];
    std::sort(perm.begin(), perm.end());
    std::string block(by_level[j].size() * perm.size(), '\0');
    do {
      for (const State& s : states) {
        std::size_t k = 0;
        for (Element a : s.last)
          for (Element b : perm) block[k++] = p.covers(a, b) ? '\1' : '\0';
        if (best.empty() || block < best) {
          best = block;
          next.clear();
        }
        if (block == best && !next.contains(perm)) {
          auto order = s.order;
          order.insert(order.end(), perm.begin(), perm.end());
          next.emplace(perm, std::move(order));
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    key += best;
    states.clear();
    for (auto& [last, order] : next) states.push_back({std::move(order), last});
  }
  return {key, states.front().order};
}

}  // namespace detail

/// Canonical key of a window: equal keys iff a rank-preserving isomorphism exists.
inline std::string canonical_form(const Window& w) {
  return detail::canonical_leveled(w.induced, w.levels).key;
}

/// Wraps an already-graded poset (levels = ranks) as a window over its full
/// rank range. Useful for blocks and stand-alone shapes.
inline Window as_window(const Poset& p, Rank lo = 0) {
  GradedInfo g = require_grading(p);
  Window w;
  w.lo = lo;
  w.span = g.top_rank;
  w.elements.resize(p.size());
  std::iota(w.elements.begin(), w.elements.end(), Element{0});
  std::stable_sort(w.elements.begin(), w.elements.end(),
                   [&](Element a, Element b) { return g.ranks[a] < g.ranks[b]; });
  std::vector<Element> position(p.size());
  for (Element i = 0; i < w.elements.size(); ++i) position[w.elements[i]] = i;
  std::vector<Cover> covers;
  for (auto [u, v] : p.cover_list()) covers.emplace_back(position[u], position[v]);
  w.induced = from_cover_list(p.size(), covers);
  for (Element e : w.elements) w.levels.push_back(g.ranks[e]);
  auto canon = detail::canonical_leveled(w.induced, w.levels);
  w.canonical_key = std::move(canon.key);
  w.canonical_order = std::move(canon.order);
  return w;
}

/// Window over ranks [lo, lo + m]. On consecutive ranks of a graded poset the
/// induced covers are exactly the source covers between window elements.
inline Window window(const Poset& p, const GradedInfo& g, Rank lo, Rank m) {
  if (lo + m > g.top_rank)
    throw Error(ErrorKind::RankOutOfRange,
                "window [" + std::to_string(lo) + "," + std::to_string(lo + m) + "] exceeds top rank " +
                    std::to_string(g.top_rank));
  Window w;
  w.lo = lo;
  w.span = m;
  for (Rank r = lo; r <= lo + m; ++r)
    for (Element x : g.level(r)) w.elements.push_back(x);
  std::vector<Element> position(p.size(), static_cast<Element>(-1));
  for (Element i = 0; i < w.elements.size(); ++i) position[w.elements[i]] = i;
  std::vector<Cover> covers;
  for (Element e : w.elements)
    for (Element v : p.up_covers(e))
      if (position[v] != static_cast<Element>(-1)) covers.emplace_back(position[e], position[v]);
  w.induced = from_cover_list(w.elements.size(), covers);
  for (Element e : w.elements) w.levels.push_back(g.ranks[e] - lo);
  auto canon = detail::canonical_leveled(w.induced, w.levels);
  w.canonical_key = std::move(canon.key);
  w.canonical_order = std::move(canon.order);
  return w;
}

/// Rank-preserving cover isomorphism between two windows, if one exists.
inline std::optional<IsoMap> is_isomorphic_rank_preserving(const Window& a, const Window& b) {
  if (a.canonical_key != b.canonical_key) return std::nullopt;
  IsoMap iso;
  iso.rank_shift = static_cast<long>(b.lo) - static_cast<long>(a.lo);
  for (std::size_t i = 0; i < a.canonical_order.size(); ++i)
    iso.forward.emplace_back(a.elements[a.canonical_order[i]], b.elements[b.canonical_order[i]]);
  std::sort(iso.forward.begin(), iso.forward.end());
  return iso;
}

}  // namespace poset_endo
