#pragma once

#include <algorithm>
#include <set>
#include <variant>
#include <vector>

#include "poset_endo/poset.hpp"

namespace poset_endo {

using Rank = std::size_t;

struct GradedInfo {
  std::vector<Rank> ranks;
  std::vector<std::size_t> whitney;
  std::size_t whidth = 0;
  Rank top_rank = 0;

  /// Elements of rank r in increasing index order.
  std::vector<Element> level(Rank r) const {
    std::vector<Element> out;
    for (Element x = 0; x < ranks.size(); ++x)
      if (ranks[x] == r) out.push_back(x);
    return out;
  }
};

/// Two maximal chains of different lengths, longer first.
struct NotGraded {
  std::vector<Element> longer;
  std::vector<Element> shorter;
};

namespace detail {

// Longest chain from a minimal element up to x, lowest-index predecessor on ties.
inline std::vector<Element> longest_chain_to(const Poset& p, Element x) {
  std::vector<Element> chain{x};
  while (!p.is_minimal(chain.back())) {
    Element cur = chain.back();
    Element best = p.down_covers(cur).front();
    for (Element d : p.down_covers(cur))
      if (p.depth(d) > p.depth(best)) best = d;
    chain.push_back(best);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

inline void extend_to_maximal(const Poset& p, std::vector<Element>& chain) {
  while (!p.is_maximal(chain.back())) chain.push_back(p.up_covers(chain.back()).front());
}

}  // namespace detail

/// Ranks are longest-path distances from the minimal elements; the poset is
/// graded iff every cover raises rank by exactly one and every maximal element
/// sits at the top rank.
inline std::variant<GradedInfo, NotGraded> compute_grading(const Poset& p) {
  if (p.empty()) throw Error(ErrorKind::InvalidParameter, "compute_grading on an empty poset");
  const std::size_t n = p.size();
  GradedInfo g;
  g.ranks.resize(n);
  for (Element x = 0; x < n; ++x) g.ranks[x] = p.depth(x);
  g.top_rank = *std::max_element(g.ranks.begin(), g.ranks.end());

  for (Element u = 0; u < n; ++u) {
    for (Element v : p.up_covers(u)) {
      if (g.ranks[v] == g.ranks[u] + 1) continue;
      NotGraded witness;
      witness.longer = detail::longest_chain_to(p, v);
      witness.shorter = detail::longest_chain_to(p, u);
      witness.shorter.push_back(v);
      detail::extend_to_maximal(p, witness.longer);
      detail::extend_to_maximal(p, witness.shorter);
      return witness;
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (p.is_maximal(x) && g.ranks[x] != g.top_rank) {
      auto top = static_cast<Element>(
          std::find(g.ranks.begin(), g.ranks.end(), g.top_rank) - g.ranks.begin());
      return NotGraded{detail::longest_chain_to(p, top), detail::longest_chain_to(p, x)};
    }
  }

  g.whitney.assign(g.top_rank + 1, 0);
  for (Rank r : g.ranks) ++g.whitney[r];
  g.whidth = *std::max_element(g.whitney.begin(), g.whitney.end());
  return g;
}

/// compute_grading for callers that require gradedness.
inline GradedInfo require_grading(const Poset& p) {
  auto result = compute_grading(p);
  if (auto* g = std::get_if<GradedInfo>(&result)) return std::move(*g);
  throw Error(ErrorKind::NotGraded, "poset has maximal chains of different lengths");
}

inline bool is_graded(const Poset& p) {
  return !p.empty() && std::holds_alternative<GradedInfo>(compute_grading(p));
}

/// Induced subposet on the elements whose rank lies in `ranks`, with the full
/// order restricted and re-reduced.
inline Poset rank_selected(const Poset& p, const GradedInfo& g, const std::set<Rank>& ranks) {
  for (Rank r : ranks)
    if (r > g.top_rank)
      throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(r) + " above top rank");
  std::vector<Element> chosen;
  for (Element x = 0; x < p.size(); ++x)
    if (ranks.contains(g.ranks[x])) chosen.push_back(x);
  if (chosen.empty()) throw Error(ErrorKind::EmptySelection, "no element has a selected rank");
  return induced_subposet(p, chosen);
}

}  // namespace poset_endo
