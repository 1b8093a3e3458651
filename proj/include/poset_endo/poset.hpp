#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "poset_endo/error.hpp"

namespace poset_endo {

using Element = std::uint32_t;
using Cover = std::pair<Element, Element>;
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// A finite poset stored as its Hasse diagram.
///
/// Elements are the dense indices 0..n-1. The cover lists are sorted and
/// mutually transposed; the strict order is precomputed as one up-set bitset
/// per element so comparisons are O(1). Instances are immutable once built by
/// from_cover_list().
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return up_.size(); }
  bool empty() const noexcept { return up_.empty(); }

  std::span<const Element> up_covers(Element x) const { return up_[x]; }
  std::span<const Element> down_covers(Element x) const { return down_[x]; }

  /// Strict up-set {y : x < y}.
  const ElementSet& above(Element x) const { return above_[x]; }
  /// Strict down-set {y : y < x}.
  const ElementSet& below(Element x) const { return below_[x]; }

  bool less(Element a, Element b) const { return above_[a].test(b); }
  bool leq(Element a, Element b) const { return a == b || less(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  bool covers(Element lower, Element upper) const {
    return std::binary_search(up_[lower].begin(), up_[lower].end(), upper);
  }

  /// Length of the longest chain ending at x, minus one.
  std::size_t depth(Element x) const { return depth_[x]; }

  /// Elements sorted by (depth, index); a linear extension.
  std::span<const Element> linear_extension() const { return linear_; }

  /// All cover pairs (lower, upper), lexicographically sorted.
  std::vector<Cover> cover_list() const {
    std::vector<Cover> out;
    for (Element u = 0; u < size(); ++u)
      for (Element v : up_[u]) out.emplace_back(u, v);
    return out;
  }

  std::size_t cover_count() const {
    std::size_t total = 0;
    for (const auto& ups : up_) total += ups.size();
    return total;
  }

  bool is_minimal(Element x) const { return down_[x].empty(); }
  bool is_maximal(Element x) const { return up_[x].empty(); }

  /// Optional external names; never consulted by any algorithm.
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names) {
    if (!names.empty() && names.size() != size())
      throw Error(ErrorKind::SizeMismatch, "names table must have one entry per element");
    names_ = std::move(names);
  }
  std::string label(Element x) const {
    return names_.empty() ? std::to_string(x) : names_[x];
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.up_ == b.up_ && a.names_ == b.names_;
  }

  friend Poset from_cover_list(std::size_t n, std::span<const Cover> covers);

 private:
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
  std::vector<std::size_t> depth_;
  std::vector<Element> linear_;
  std::vector<std::string> names_;
};

/// Builds a poset from its Hasse diagram. The pair list must already be a
/// transitive reduction: implied pairs are rejected, not dropped.
inline Poset from_cover_list(std::size_t n, std::span<const Cover> covers) {
  Poset p;
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (const auto& [u, v] : covers) {
    if (u >= n || v >= n)
      throw Error(ErrorKind::IndexOutOfRange,
                  "cover (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                      std::to_string(n));
    if (u == v) throw Error(ErrorKind::CycleDetected, "self-cover on " + std::to_string(u));
    p.up_[u].push_back(v);
    p.down_[v].push_back(u);
  }
  for (Element x = 0; x < n; ++x) {
    auto& ups = p.up_[x];
    std::sort(ups.begin(), ups.end());
    if (auto it = std::adjacent_find(ups.begin(), ups.end()); it != ups.end())
      throw Error(ErrorKind::DuplicateCover,
                  "(" + std::to_string(x) + "," + std::to_string(*it) + ")");
    std::sort(p.down_[x].begin(), p.down_[x].end());
  }

  // Kahn's algorithm; depth is the longest-path distance from a minimal element.
  std::vector<std::size_t> indegree(n);
  for (Element x = 0; x < n; ++x) indegree[x] = p.down_[x].size();
  std::vector<Element> topo;
  topo.reserve(n);
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) topo.push_back(x);
  p.depth_.assign(n, 0);
  for (std::size_t head = 0; head < topo.size(); ++head) {
    Element u = topo[head];
    for (Element v : p.up_[u]) {
      p.depth_[v] = std::max(p.depth_[v], p.depth_[u] + 1);
      if (--indegree[v] == 0) topo.push_back(v);
    }
  }
  if (topo.size() != n) {
    Element culprit = 0;
    while (indegree[culprit] == 0) ++culprit;
    throw Error(ErrorKind::CycleDetected, "element " + std::to_string(culprit) + " lies on a cycle");
  }

  p.above_.assign(n, ElementSet(n));
  p.below_.assign(n, ElementSet(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element u = *it;
    for (Element v : p.up_[u]) {
      p.above_[u].set(v);
      p.above_[u] |= p.above_[v];
    }
  }
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v)
      if (p.above_[u].test(v)) p.below_[v].set(u);

  for (Element u = 0; u < n; ++u) {
    for (Element v : p.up_[u]) {
      for (Element w : p.up_[u]) {
        if (w != v && p.above_[w].test(v))
          throw Error(ErrorKind::RedundantCover,
                      "(" + std::to_string(u) + "," + std::to_string(v) + ") is implied via " +
                          std::to_string(w));
      }
    }
  }

  p.linear_.resize(n);
  std::iota(p.linear_.begin(), p.linear_.end(), Element{0});
  std::stable_sort(p.linear_.begin(), p.linear_.end(),
                   [&](Element a, Element b) { return p.depth_[a] < p.depth_[b]; });
  return p;
}

inline Poset from_cover_list(std::size_t n, std::initializer_list<Cover> covers) {
  return from_cover_list(n, std::span<const Cover>(covers.begin(), covers.size()));
}

inline Poset from_cover_list(std::size_t n, const std::vector<Cover>& covers) {
  return from_cover_list(n, std::span<const Cover>(covers));
}

/// Hasse diagram of a strict order given as a dense relation matrix
/// (less[a][b] true iff a < b). The relation must be transitive.
inline Poset from_strict_order(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  std::vector<Cover> covers;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      bool implied = false;
      for (Element c = 0; c < n && !implied; ++c) implied = less[a][c] && less[c][b];
      if (!implied) covers.emplace_back(a, b);
    }
  }
  return from_cover_list(n, covers);
}

/// Subposet induced on `elements` (in the given order) with the full order
/// restricted and re-reduced to covers.
inline Poset induced_subposet(const Poset& p, std::span<const Element> elements) {
  std::vector<std::vector<bool>> less(elements.size(), std::vector<bool>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      less[i][j] = p.less(elements[i], elements[j]);
  Poset sub = from_strict_order(less);
  if (!p.names().empty()) {
    std::vector<std::string> names;
    for (Element e : elements) names.push_back(p.names()[e]);
    sub.set_names(std::move(names));
  }
  return sub;
}

/// Components of the Hasse diagram viewed as an undirected graph, each sorted,
/// listed by smallest element.
inline std::vector<std::vector<Element>> connected_components(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Element>> out;
  for (Element root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Element> members{root};
    comp[root] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      Element x = members[head];
      auto visit = [&](Element y) {
        if (comp[y] < 0) {
          comp[y] = id;
          members.push_back(y);
        }
      };
      for (Element y : p.up_covers(x)) visit(y);
      for (Element y : p.down_covers(x)) visit(y);
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

/// Size of a maximum antichain, via Dilworth: n minus a maximum matching in
/// the bipartite split of the strict comparability relation.
inline std::size_t width(const Poset& p) {
  const std::size_t n = p.size();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_right(n, kFree);
  std::vector<char> seen;
  auto augment = [&](auto&& self, Element u) -> bool {
    const ElementSet& succ = p.above(u);
    for (auto v = succ.find_first(); v != ElementSet::npos; v = succ.find_next(v)) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] == kFree || self(self, static_cast<Element>(match_right[v]))) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (Element u = 0; u < n; ++u) {
    seen.assign(n, 0);
    if (augment(augment, u)) ++matching;
  }
  return n - matching;
}

/// Disjoint union; b's elements are shifted by a.size().
inline Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<Cover> covers = a.cover_list();
  const auto shift = static_cast<Element>(a.size());
  for (auto [u, v] : b.cover_list()) covers.emplace_back(u + shift, v + shift);
  return from_cover_list(a.size() + b.size(), covers);
}

}  // namespace poset_endo
