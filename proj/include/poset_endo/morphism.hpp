#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "poset_endo/analysis.hpp"

namespace poset_endo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class MorphismKind { Automorphism, Endomorphism };

/// A total self-map of a poset's element set, tagged by bijectivity.
struct Morphism {
  std::vector<Element> image;
  MorphismKind kind = MorphismKind::Endomorphism;

  Morphism() = default;
  explicit Morphism(std::vector<Element> img) : image(std::move(img)) {
    std::vector<char> hit(image.size(), 0);
    bool bijective = true;
    for (Element e : image) {
      if (e >= image.size() || hit[e]) {
        bijective = false;
        break;
      }
      hit[e] = 1;
    }
    kind = bijective ? MorphismKind::Automorphism : MorphismKind::Endomorphism;
  }

  std::size_t size() const { return image.size(); }
  bool bijective() const { return kind == MorphismKind::Automorphism; }
  Element operator()(Element z) const { return image[z]; }

  friend bool operator==(const Morphism& a, const Morphism& b) { return a.image == b.image; }
  friend auto operator<=>(const Morphism& a, const Morphism& b) { return a.image <=> b.image; }
};

inline Morphism identity_morphism(std::size_t n) {
  std::vector<Element> img(n);
  std::iota(img.begin(), img.end(), Element{0});
  return Morphism(std::move(img));
}

/// Checking covers suffices: the order is generated by them.
inline bool is_order_preserving(const Poset& p, std::span<const Element> image) {
  if (image.size() != p.size()) return false;
  for (Element u = 0; u < p.size(); ++u) {
    if (image[u] >= p.size()) return false;
    for (Element v : p.up_covers(u))
      if (!p.leq(image[u], image[v])) return false;
  }
  return true;
}

inline bool is_order_preserving(const Poset& p, const Morphism& m) { return is_order_preserving(p, m.image); }

/// (outer ∘ inner)(z) = outer(inner(z)); inner applies first.
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (outer.size() != inner.size())
    throw Error(ErrorKind::SizeMismatch, "composing maps on different element counts");
  std::vector<Element> img(inner.size());
  for (std::size_t z = 0; z < img.size(); ++z) img[z] = outer.image[inner.image[z]];
  return Morphism(std::move(img));
}

inline Morphism inverse(const Morphism& m) {
  if (!m.bijective()) throw Error(ErrorKind::InvalidParameter, "inverse of a non-bijective map");
  std::vector<Element> img(m.size());
  for (Element z = 0; z < m.size(); ++z) img[m.image[z]] = z;
  return Morphism(std::move(img));
}

struct SearchOptions {
  std::uint64_t node_budget = 1'000'000'000;
  bool memo = false;  // frontier-keyed caching for endomorphism counting
};

namespace detail {

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (T e : v) h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

inline void charge(std::uint64_t& nodes, const SearchOptions& opts) {
  if (++nodes > opts.node_budget)
    throw Error(ErrorKind::BudgetExceeded, "search exceeded " + std::to_string(opts.node_budget) + " nodes");
}

// Level-wise automorphism search. Automorphisms preserve the longest-chain
// depth, so candidates for x are same-depth elements with the same cover
// degrees whose down-covers contain the images of x's down-covers.
template <class Visit>
void search_automorphisms(const Poset& p, const SearchOptions& opts, Visit&& visit) {
  const std::size_t n = p.size();
  auto order = p.linear_extension();
  std::vector<Element> image(n);
  std::vector<char> used(n, 0);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      visit(image);
      return;
    }
    const Element x = order[pos];
    for (Element y = 0; y < n; ++y) {
      if (used[y] || p.depth(y) != p.depth(x)) continue;
      if (p.down_covers(y).size() != p.down_covers(x).size() ||
          p.up_covers(y).size() != p.up_covers(x).size())
        continue;
      bool ok = true;
      for (Element d : p.down_covers(x))
        if (!p.covers(image[d], y)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      charge(nodes, opts);
      image[x] = y;
      used[y] = 1;
      self(self, pos + 1);
      used[y] = 0;
    }
  };
  rec(rec, 0);
}

inline void for_each_bit(std::uint64_t mask, auto&& fn) {
  while (mask) {
    fn(static_cast<Element>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

inline void for_each_bit(const ElementSet& mask, auto&& fn) {
  for (auto b = mask.find_first(); b != ElementSet::npos; b = mask.find_next(b)) fn(static_cast<Element>(b));
}

inline std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }
inline std::size_t popcount(const ElementSet& m) { return m.count(); }

template <class Mask>
Mask make_full(std::size_t n) {
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  } else {
    Mask m(n);
    m.set();
    return m;
  }
}

template <class Mask>
Mask make_upset(const Poset& p, Element y) {
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    std::uint64_t m = std::uint64_t{1} << y;
    for_each_bit(p.above(y), [&](Element b) { m |= std::uint64_t{1} << b; });
    return m;
  } else {
    Mask m = p.above(y);
    m.set(y);
    return m;
  }
}

// Counts order-preserving self-maps by assigning images along a linear
// extension. The candidates for x are the intersection of the principal
// up-sets of its down-covers' images.
template <class Mask>
class EndomorphismCounter {
 public:
  EndomorphismCounter(const Poset& p, const SearchOptions& opts) : p_(p), opts_(opts) {
    const std::size_t n = p.size();
    order_.assign(p.linear_extension().begin(), p.linear_extension().end());
    position_.resize(n);
    for (std::size_t i = 0; i < n; ++i) position_[order_[i]] = i;
    upset_.reserve(n);
    for (Element y = 0; y < n; ++y) upset_.push_back(make_upset<Mask>(p, y));
    full_ = make_full<Mask>(n);
    image_.assign(n, 0);
    if (opts_.memo) {
      // pending_[i]: elements placed at i or later together with their
      // down-covers placed before i. Their partial candidate masks are all
      // the future depends on.
      pending_.resize(n + 1);
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          std::vector<Element> placed;
          for (Element d : p.down_covers(order_[j]))
            if (position_[d] < i) placed.push_back(d);
          if (!placed.empty()) pending_[i].push_back(std::move(placed));
        }
      cache_.resize(n + 1);
    }
  }

  BigInt count() {
    if (p_.empty()) return 1;
    if (opts_.memo) return count_memo(0);
    std::uint64_t total = 0;
    count_plain(0, total);
    return BigInt(total);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Mask candidates(Element x) const {
    Mask cand = full_;
    for (Element d : p_.down_covers(x)) cand &= upset_[image_[d]];
    return cand;
  }

  void count_plain(std::size_t pos, std::uint64_t& total) {
    const Element x = order_[pos];
    Mask cand = candidates(x);
    if (pos + 1 == order_.size()) {
      charge(nodes_, opts_);
      total += popcount(cand);
      return;
    }
    for_each_bit(cand, [&](Element y) {
      charge(nodes_, opts_);
      image_[x] = y;
      count_plain(pos + 1, total);
    });
  }

  BigInt count_memo(std::size_t pos) {
    charge(nodes_, opts_);
    if (pos == order_.size()) return 1;
    std::vector<std::uint64_t> key;
    for (const auto& placed : pending_[pos]) {
      Mask m = full_;
      for (Element d : placed) m &= upset_[image_[d]];
      append_blocks(m, key);
    }
    auto& table = cache_[pos];
    if (auto it = table.find(key); it != table.end()) return it->second;
    const Element x = order_[pos];
    Mask cand = candidates(x);
    BigInt total = 0;
    if (pos + 1 == order_.size()) {
      total = popcount(cand);
    } else {
      for_each_bit(cand, [&](Element y) {
        image_[x] = y;
        total += count_memo(pos + 1);
      });
    }
    table.emplace(std::move(key), total);
    return total;
  }

  const Poset& p_;
  SearchOptions opts_;
  std::vector<Element> order_;
  std::vector<std::size_t> position_;
  std::vector<Mask> upset_;
  Mask full_{};
  std::vector<Element> image_;
  static void append_blocks(const Mask& m, std::vector<std::uint64_t>& out) {
    if constexpr (std::is_same_v<Mask, std::uint64_t>) {
      out.push_back(m);
    } else {
      boost::to_block_range(m, std::back_inserter(out));
    }
  }

  std::vector<std::vector<std::vector<Element>>> pending_;
  std::vector<std::unordered_map<std::vector<std::uint64_t>, BigInt, VectorHash>> cache_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Every automorphism, sorted by image vector.
inline std::vector<Morphism> enumerate_automorphisms(const Poset& p, const SearchOptions& opts = {}) {
  std::vector<Morphism> out;
  detail::search_automorphisms(p, opts, [&](const std::vector<Element>& img) { out.emplace_back(img); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Graded overload; automorphisms preserve rank, which the search relies on.
inline std::vector<Morphism> enumerate_automorphisms(const Poset& p, const GradedInfo&,
                                                     const SearchOptions& opts = {}) {
  return enumerate_automorphisms(p, opts);
}

inline BigInt count_automorphisms(const Poset& p, const SearchOptions& opts = {}) {
  BigInt total = 0;
  detail::search_automorphisms(p, opts, [&](const std::vector<Element>&) { ++total; });
  return total;
}

/// Exact |End(P)|. Throws BudgetExceeded rather than returning a partial count.
inline BigInt count_endomorphisms(const Poset& p, const SearchOptions& opts = {}) {
  if (p.size() <= 64) return detail::EndomorphismCounter<std::uint64_t>(p, opts).count();
  return detail::EndomorphismCounter<ElementSet>(p, opts).count();
}

inline constexpr std::size_t kBruteForceLimit = 7;

/// All order-preserving self-maps by exhaustive n^n enumeration.
inline std::vector<Morphism> brute_force_endomorphisms(const Poset& p) {
  const std::size_t n = p.size();
  if (n > kBruteForceLimit)
    throw Error(ErrorKind::SizeLimit, "brute force is limited to " + std::to_string(kBruteForceLimit) + " elements");
  std::vector<Morphism> out;
  std::vector<Element> img(n, 0);
  while (true) {
    if (is_order_preserving(p, img)) out.emplace_back(img);
    std::size_t i = 0;
    while (i < n && ++img[i] == n) img[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Order-preserving permutations by exhaustive n! enumeration.
inline std::vector<Morphism> brute_force_automorphisms(const Poset& p, std::size_t limit = 11) {
  if (p.size() > limit)
    throw Error(ErrorKind::SizeLimit, "permutation brute force is limited to " + std::to_string(limit) + " elements");
  std::vector<Element> img(p.size());
  std::iota(img.begin(), img.end(), Element{0});
  std::vector<Morphism> out;
  do {
    if (is_order_preserving(p, img)) out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// U_x: sends the up-single x to its unique cover, fixes everything else.
inline Morphism construct_U(const Poset& p, Element x) {
  if (x >= p.size() || p.up_covers(x).size() != 1)
    throw Error(ErrorKind::NotUpSingle, std::to_string(x) + " is not covered by exactly one element");
  auto img = identity_morphism(p.size()).image;
  img[x] = p.up_covers(x)[0];
  return Morphism(std::move(img));
}

/// V_{a,b}: folds a onto its older sibling b, fixes everything else.
inline Morphism construct_V(const Poset& p, Element a, Element b) {
  bool ok = a < p.size() && b < p.size() && a != b && p.depth(a) == p.depth(b);
  if (ok) {
    auto da = p.down_covers(a), db = p.down_covers(b);
    auto ua = p.up_covers(a), ub = p.up_covers(b);
    ok = std::includes(db.begin(), db.end(), da.begin(), da.end()) &&
         std::includes(ub.begin(), ub.end(), ua.begin(), ua.end());
  }
  if (!ok)
    throw Error(ErrorKind::NotOlderSibling, std::to_string(b) + " is not an older sibling of " + std::to_string(a));
  auto img = identity_morphism(p.size()).image;
  img[a] = b;
  return Morphism(std::move(img));
}

/// Source elements of w strictly between its lowest and highest rank.
inline std::vector<Element> window_interior(const Window& w) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < w.elements.size(); ++i)
    if (w.levels[i] > 0 && w.levels[i] < w.span) out.push_back(w.elements[i]);
  return out;
}

/// F_x: contracts the interior of w to x and fixes everything else. Requires
/// a < x < b for every a on w's lowest rank and every b on its highest.
inline Morphism construct_F(const Poset& p, const Window& w, Element x) {
  auto interior = window_interior(w);
  if (std::find(interior.begin(), interior.end(), x) == interior.end())
    throw Error(ErrorKind::NotCentral, std::to_string(x) + " is not interior to the window");
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    const Element e = w.elements[i];
    if (w.levels[i] == 0 && !p.less(e, x))
      throw Error(ErrorKind::NotCentral, std::to_string(e) + " is not below " + std::to_string(x));
    if (w.levels[i] == w.span && !p.less(x, e))
      throw Error(ErrorKind::NotCentral, std::to_string(e) + " is not above " + std::to_string(x));
  }
  auto img = identity_morphism(p.size()).image;
  for (Element e : interior) img[e] = x;
  return Morphism(std::move(img));
}

/// Sends every element of w to x. Valid when x is comparable to everything
/// around the window, e.g. when x is alone on its rank.
inline Morphism construct_shrink(const Poset& p, const Window& w, Element x) {
  if (std::find(w.elements.begin(), w.elements.end(), x) == w.elements.end())
    throw Error(ErrorKind::NotCentral, std::to_string(x) + " is not in the window");
  auto img = identity_morphism(p.size()).image;
  for (Element e : w.elements) img[e] = x;
  if (!is_order_preserving(p, img))
    throw Error(ErrorKind::NotCentral, "collapsing the window onto " + std::to_string(x) + " breaks order");
  return Morphism(std::move(img));
}

/// The ladder map: x2 -> y2, z1 -> t1, everything else fixed.
inline Morphism construct_swap(const Poset& p, const PairClassification& cls) {
  if (cls.tag != PairCase::S2Ladder)
    throw Error(ErrorKind::WrongCase, "swap map needs an S2-ladder classification, got " +
                                          std::string(to_string(cls.tag)));
  auto x2 = cls.witness("x2"), y2 = cls.witness("y2"), z1 = cls.witness("z1"), t1 = cls.witness("t1");
  if (!x2 || !y2 || !z1 || !t1) throw Error(ErrorKind::WrongCase, "ladder witnesses missing");
  auto img = identity_morphism(p.size()).image;
  img[*x2] = *y2;
  img[*z1] = *t1;
  if (!is_order_preserving(p, img))
    throw Error(ErrorKind::NotOrderPreserving, "ladder witnesses do not support the swap map");
  return Morphism(std::move(img));
}

struct CompositionStats {
  std::size_t total = 0;           // size of the multiset
  std::size_t distinct = 0;
  std::size_t max_multiplicity = 0;
  /// Largest multiplicity among compositions sharing one constructor.
  std::vector<std::size_t> per_constructor_max;
};

/// Distinct maps in the multiset {c ∘ φ : c in constructors, φ in auts}.
inline CompositionStats distinct_compositions(const std::vector<Morphism>& constructors,
                                              const std::vector<Morphism>& auts) {
  CompositionStats stats;
  std::unordered_map<std::vector<Element>, std::size_t, detail::VectorHash> seen;
  for (const Morphism& c : constructors) {
    std::unordered_map<std::vector<Element>, std::size_t, detail::VectorHash> local;
    std::size_t local_max = 0;
    for (const Morphism& phi : auts) {
      auto img = compose(c, phi).image;
      local_max = std::max(local_max, ++local[img]);
      ++seen[std::move(img)];
      ++stats.total;
    }
    stats.per_constructor_max.push_back(local_max);
  }
  stats.distinct = seen.size();
  for (const auto& [img, count] : seen) stats.max_multiplicity = std::max(stats.max_multiplicity, count);
  return stats;
}

struct CountResult {
  BigInt aut_count;
  BigInt end_count;
  Rational ratio;
};

inline CountResult count_result(const Poset& p, const SearchOptions& opts = {}) {
  CountResult r;
  r.aut_count = count_automorphisms(p, opts);
  r.end_count = count_endomorphisms(p, opts);
  r.ratio = Rational(r.aut_count, r.end_count);
  return r;
}

inline CountResult count_result(const Poset& p, const GradedInfo&, const SearchOptions& opts = {}) {
  return count_result(p, opts);
}

}  // namespace poset_endo
