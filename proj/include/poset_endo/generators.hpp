#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "poset_endo/window.hpp"

namespace poset_endo {

/// mt19937_64 with distribution code spelled out, so seeded output is
/// identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  bool bernoulli(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline Poset gen_chain(std::size_t len) {
  if (len < 1) throw Error(ErrorKind::InvalidParameter, "chain length must be at least 1");
  std::vector<Cover> covers;
  for (Element i = 0; i + 1 < len; ++i) covers.emplace_back(i, i + 1);
  return from_cover_list(len, covers);
}

inline Poset gen_antichain(std::size_t k) { return from_cover_list(k, std::vector<Cover>{}); }

/// Levels of the given sizes, each element covering the entire level below.
inline Poset gen_complete_levels(const std::vector<std::size_t>& sizes) {
  std::vector<Cover> covers;
  std::size_t start = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (sizes[j] == 0) throw Error(ErrorKind::InvalidParameter, "empty level");
    if (j + 1 < sizes.size()) {
      const std::size_t next = start + sizes[j];
      for (std::size_t a = 0; a < sizes[j]; ++a)
        for (std::size_t b = 0; b < sizes[j + 1]; ++b)
          covers.emplace_back(static_cast<Element>(start + a), static_cast<Element>(next + b));
    }
    start += sizes[j];
  }
  return from_cover_list(start, covers);
}

/// k diamonds stacked on shared extremal points: Whitney numbers 1,2,1,...,2,1.
inline Poset gen_diamond_tower(std::size_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "diamond tower needs k >= 1");
  std::vector<Cover> covers;
  for (Element i = 0; i < k; ++i) {
    const Element bottom = 3 * i, left = bottom + 1, right = bottom + 2, top = bottom + 3;
    covers.insert(covers.end(), {{bottom, left}, {bottom, right}, {left, top}, {right, top}});
  }
  return from_cover_list(3 * k + 1, covers);
}

/// How consecutive copies of a block are joined in gen_stacked().
///
/// Identify merges the top level of each copy with the bottom level of the
/// next (top position i becomes bottom position permutation[i]); copies then
/// share a level. Link keeps copies apart and adds the listed covers from top
/// position i of one copy to bottom position j of the next.
struct Glue {
  enum class Mode { Identify, Link };
  Mode mode = Mode::Identify;
  std::vector<Element> permutation;            // Identify; empty means in order
  std::vector<std::pair<Element, Element>> links;  // Link

  static Glue identify(std::vector<Element> perm = {}) { return {Mode::Identify, std::move(perm), {}}; }
  static Glue link(std::vector<std::pair<Element, Element>> pairs) { return {Mode::Link, {}, std::move(pairs)}; }
  /// Every top element covered by every bottom element of the next copy.
  static Glue complete(const Window& block) {
    std::size_t top = 0, bottom = 0;
    for (Rank r : block.levels) {
      top += r == block.span;
      bottom += r == 0;
    }
    Glue g{Mode::Link, {}, {}};
    for (Element i = 0; i < top; ++i)
      for (Element j = 0; j < bottom; ++j) g.links.emplace_back(i, j);
    return g;
  }
};

/// Tower of k copies of `block`; element ids run copy by copy in the block's
/// (rank, index) order, shared elements keeping their first id.
inline Poset gen_stacked(const Window& block, std::size_t k, const Glue& glue) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "stack needs k >= 1");
  const std::size_t b = block.elements.size();
  std::vector<Element> bottom_pos, top_pos;  // induced indices of extremal levels
  for (Element i = 0; i < b; ++i) {
    if (block.levels[i] == 0) bottom_pos.push_back(i);
    if (block.levels[i] == block.span) top_pos.push_back(i);
  }
  const auto block_covers = block.induced.cover_list();

  std::vector<Element> perm = glue.permutation;
  if (glue.mode == Glue::Mode::Identify) {
    if (block.span == 0) throw Error(ErrorKind::GlueMismatch, "cannot identify levels of a single-level block");
    if (top_pos.size() != bottom_pos.size())
      throw Error(ErrorKind::GlueMismatch, "top level has " + std::to_string(top_pos.size()) +
                                               " elements, bottom level " + std::to_string(bottom_pos.size()));
    if (perm.empty()) {
      perm.resize(top_pos.size());
      std::iota(perm.begin(), perm.end(), Element{0});
    }
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (Element i = 0; i < sorted.size(); ++i)
      if (sorted.size() != top_pos.size() || sorted[i] != i)
        throw Error(ErrorKind::GlueMismatch, "identify glue is not a permutation of the interface level");
  } else {
    std::vector<char> top_hit(top_pos.size(), 0), bottom_hit(bottom_pos.size(), 0);
    std::set<std::pair<Element, Element>> unique;
    for (auto [i, j] : glue.links) {
      if (i >= top_pos.size() || j >= bottom_pos.size())
        throw Error(ErrorKind::GlueMismatch, "link glue references a missing interface position");
      if (!unique.insert({i, j}).second) throw Error(ErrorKind::GlueMismatch, "duplicate link");
      top_hit[i] = bottom_hit[j] = 1;
    }
    if (std::count(top_hit.begin(), top_hit.end(), 0) || std::count(bottom_hit.begin(), bottom_hit.end(), 0))
      throw Error(ErrorKind::GlueMismatch, "link glue leaves an interface element uncovered");
  }

  std::vector<Cover> covers;
  std::vector<Element> prev_ids;  // ids of the previous copy, by induced index
  Element next_id = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<Element> ids(b, static_cast<Element>(-1));
    if (c > 0 && glue.mode == Glue::Mode::Identify)
      for (Element i = 0; i < top_pos.size(); ++i) ids[bottom_pos[perm[i]]] = prev_ids[top_pos[i]];
    for (Element i = 0; i < b; ++i)
      if (ids[i] == static_cast<Element>(-1)) ids[i] = next_id++;
    for (auto [u, v] : block_covers) covers.emplace_back(ids[u], ids[v]);
    if (c > 0 && glue.mode == Glue::Mode::Link)
      for (auto [i, j] : glue.links) covers.emplace_back(prev_ids[top_pos[i]], ids[bottom_pos[j]]);
    prev_ids = std::move(ids);
  }
  std::sort(covers.begin(), covers.end());
  return from_cover_list(next_id, covers);
}

struct TowerSpec {
  std::uint64_t seed = 1;
  std::size_t num_levels = 3;
  std::size_t min_level_size = 1;
  std::size_t max_level_size = 2;
  double density = 0.5;
  /// Every element gets at least min(min_degree, adjacent level size) covers
  /// on each side that has a neighbouring level.
  std::size_t min_degree = 1;
  std::size_t max_retries = 1000;
};

/// Seeded random graded tower: covers only join consecutive levels, sampled
/// by density and then repaired up to the minimum degree. Disconnected draws
/// are rejected and redrawn.
inline Poset gen_random_tower(const TowerSpec& spec) {
  if (spec.max_level_size < 1 || spec.max_level_size > 4 || spec.min_level_size < 1 ||
      spec.min_level_size > spec.max_level_size)
    throw Error(ErrorKind::InvalidParameter, "level sizes must satisfy 1 <= min <= max <= 4");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw Error(ErrorKind::InvalidParameter, "density must lie in (0, 1]");
  if (spec.num_levels < 1) throw Error(ErrorKind::InvalidParameter, "tower needs at least one level");
  Rng rng(spec.seed);
  for (std::size_t attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<std::size_t> sizes(spec.num_levels);
    for (auto& s : sizes) s = rng.between(spec.min_level_size, spec.max_level_size);
    std::vector<Element> start(spec.num_levels + 1, 0);
    for (std::size_t j = 0; j < spec.num_levels; ++j) start[j + 1] = start[j] + sizes[j];

    std::vector<Cover> covers;
    for (std::size_t j = 0; j + 1 < spec.num_levels; ++j) {
      const std::size_t lo = sizes[j], hi = sizes[j + 1];
      std::vector<std::vector<char>> rel(lo, std::vector<char>(hi, 0));
      for (auto& row : rel)
        for (auto& cell : row) cell = rng.bernoulli(spec.density);
      auto repair = [&](bool lower_side) {
        const std::size_t count = lower_side ? lo : hi, other = lower_side ? hi : lo;
        const std::size_t need = std::min(spec.min_degree, other);
        for (std::size_t a = 0; a < count; ++a) {
          auto cell = [&](std::size_t b) -> char& { return lower_side ? rel[a][b] : rel[b][a]; };
          std::vector<std::size_t> missing;
          std::size_t have = 0;
          for (std::size_t b = 0; b < other; ++b) {
            if (cell(b)) ++have;
            else missing.push_back(b);
          }
          while (have < need) {
            std::size_t pick = rng.below(missing.size());
            cell(missing[pick]) = 1;
            missing.erase(missing.begin() + static_cast<long>(pick));
            ++have;
          }
        }
      };
      repair(true);
      repair(false);
      for (std::size_t a = 0; a < lo; ++a)
        for (std::size_t b = 0; b < hi; ++b)
          if (rel[a][b]) covers.emplace_back(start[j] + a, start[j + 1] + b);
    }
    Poset p = from_cover_list(start.back(), covers);
    if (connected_components(p).size() == 1) return p;
  }
  throw Error(ErrorKind::RetryExhausted, "no connected tower after " + std::to_string(spec.max_retries) + " draws");
}

inline Poset gen_random_tower(std::uint64_t seed, std::size_t num_levels, std::size_t max_level_size,
                              double density) {
  TowerSpec spec;
  spec.seed = seed;
  spec.num_levels = num_levels;
  spec.max_level_size = max_level_size;
  spec.density = density;
  return gen_random_tower(spec);
}

/// Seeded random poset on n elements (not necessarily graded): a random
/// relation compatible with a hidden shuffled linear order, closed
/// transitively.
inline Poset gen_random_poset(std::uint64_t seed, std::size_t n, double density) {
  Rng rng(seed);
  std::vector<Element> hidden(n);
  std::iota(hidden.begin(), hidden.end(), Element{0});
  rng.shuffle(hidden);
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(density)) less[hidden[i]][hidden[j]] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (less[k][j]) less[i][j] = true;
  return from_strict_order(less);
}

enum class FixtureName { Diamond, Ladder, S4, S3, Sib, K333, K333x5 };

/// Named shapes used by the case analysis.
///
/// LADDER: rank 0 {x=0, y=1, z0=2, t0=3}; rank 1 {4, 5, 6, 7} with 0,1 under
/// 4 and 5 and 2,3 under 6 and 7; rank 2 {8, 9, 10} with 8 over {4,5,6},
/// 9 over {4,5,7}, 10 over {6,7}.
/// S4: x=0, y=1 with disjoint cover pairs {2,3} and {4,5}; rank 2 holds 6
/// over {2,3}, 7 over all four and 8 over {4,5}, so 7 is the shared element.
/// S3: x=0 under {2,3}, y=1 under {3,4}; 5 and 6 each cover 2, 3 and 4.
/// SIB: 0,1 minimal; 2 covers 0; 3 covers 0,1; 4 covers 2,3.
inline Poset fixture(FixtureName name) {
  switch (name) {
    case FixtureName::Diamond:
      return from_cover_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    case FixtureName::Ladder:
      return from_cover_list(11, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7},
                                  {4, 8}, {4, 9}, {5, 8}, {5, 9}, {6, 8}, {6, 10}, {7, 9}, {7, 10}});
    case FixtureName::S4:
      return from_cover_list(9, {{0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7},
                                 {4, 7}, {4, 8}, {5, 7}, {5, 8}});
    case FixtureName::S3:
      return from_cover_list(7, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6},
                                 {4, 5}, {4, 6}});
    case FixtureName::Sib:
      return from_cover_list(5, {{0, 2}, {0, 3}, {1, 3}, {2, 4}, {3, 4}});
    case FixtureName::K333:
      return gen_complete_levels({3, 3, 3});
    case FixtureName::K333x5:
      return gen_complete_levels({3, 3, 3, 3, 3});
  }
  throw Error(ErrorKind::InvalidParameter, "unknown fixture");
}

inline std::optional<FixtureName> parse_fixture(std::string_view name) {
  static const std::pair<std::string_view, FixtureName> table[] = {
      {"DIAMOND", FixtureName::Diamond}, {"LADDER", FixtureName::Ladder}, {"S4", FixtureName::S4},
      {"S3", FixtureName::S3},           {"SIB", FixtureName::Sib},       {"K333", FixtureName::K333},
      {"K333x5", FixtureName::K333x5}};
  for (auto [key, value] : table)
    if (key == name) return value;
  return std::nullopt;
}

/// Canonical key of an arbitrary small poset: the minimal strict-order bit
/// string over all n! relabelings.
inline std::string canonical_poset_key(const Poset& p) {
  const std::size_t n = p.size();
  if (n > 8) throw Error(ErrorKind::SizeLimit, "brute-force canonical key limited to 8 elements");
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::string best, cur(n * n, '0');
  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) cur[i * n + j] = p.less(perm[i], perm[j]) ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

struct EnumerateOptions {
  bool connected_only = false;
  bool dedupe = false;  // collapse isomorphic outputs
  std::uint64_t budget = 50'000'000;  // candidate relations examined
};

/// Streams every graded poset whose rank is at most max_rank and whose levels
/// hold between 1 and max_level elements, numbered level by level. Returns the
/// number of posets streamed.
inline std::uint64_t enumerate_all_graded(Rank max_rank, std::size_t max_level,
                                          const std::function<void(const Poset&)>& visit,
                                          const EnumerateOptions& opts = {}) {
  if (max_level < 1 || max_level > 4) throw Error(ErrorKind::InvalidParameter, "max_level must lie in 1..4");
  std::uint64_t examined = 0, streamed = 0;
  std::set<std::string> seen;
  for (Rank rank = 0; rank <= max_rank; ++rank) {
    std::vector<std::size_t> sizes(rank + 1, 1);
    while (true) {
      std::vector<Element> start(rank + 2, 0);
      for (Rank j = 0; j <= rank; ++j) start[j + 1] = start[j] + sizes[j];
      std::vector<Cover> covers;
      auto rec = [&](auto&& self, Rank j) -> void {
        if (j == rank) {
          Poset p = from_cover_list(start.back(), covers);
          if (opts.connected_only && connected_components(p).size() != 1) return;
          if (opts.dedupe) {
            std::vector<Rank> levels(p.size());
            for (Rank r = 0; r <= rank; ++r)
              for (Element e = start[r]; e < start[r + 1]; ++e) levels[e] = r;
            if (!seen.insert(detail::canonical_leveled(p, levels).key).second) return;
          }
          ++streamed;
          visit(p);
          return;
        }
        const std::size_t lo = sizes[j], hi = sizes[j + 1];
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (lo * hi)); ++mask) {
          if (++examined > opts.budget)
            throw Error(ErrorKind::BudgetExceeded, "graded enumeration exceeded its budget");
          bool ok = true;
          for (std::size_t a = 0; a < lo && ok; ++a) ok = ((mask >> (a * hi)) & ((1u << hi) - 1)) != 0;
          for (std::size_t b = 0; b < hi && ok; ++b) {
            bool any = false;
            for (std::size_t a = 0; a < lo; ++a) any |= (mask >> (a * hi + b)) & 1;
            ok = any;
          }
          if (!ok) continue;
          const std::size_t before = covers.size();
          for (std::size_t a = 0; a < lo; ++a)
            for (std::size_t b = 0; b < hi; ++b)
              if ((mask >> (a * hi + b)) & 1) covers.emplace_back(start[j] + a, start[j + 1] + b);
          self(self, j + 1);
          covers.resize(before);
        }
      };
      rec(rec, 0);
      Rank pos = 0;
      while (pos <= rank && ++sizes[pos] > max_level) sizes[pos++] = 1;
      if (pos > rank) break;
    }
  }
  return streamed;
}

inline constexpr std::size_t kMaxEnumeratedPosetSize = 5;

/// Streams every labelled poset on n elements (or one per isomorphism class
/// with dedupe). Each unordered pair is assigned <, > or incomparable and
/// non-transitive assignments are discarded.
inline std::uint64_t enumerate_all_posets(std::size_t n, const std::function<void(const Poset&)>& visit,
                                          bool dedupe = false) {
  if (n > kMaxEnumeratedPosetSize)
    throw Error(ErrorKind::SizeLimit, "poset enumeration is limited to " +
                                          std::to_string(kMaxEnumeratedPosetSize) + " elements");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<int> state(pairs.size(), 0);
  std::set<std::string> seen;
  std::uint64_t streamed = 0;
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n));
  while (true) {
    for (auto& row : less) std::fill(row.begin(), row.end(), false);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (state[k] == 1) less[i][j] = true;
      if (state[k] == 2) less[j][i] = true;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        if (less[a][b])
          for (std::size_t c = 0; c < n && transitive; ++c)
            if (less[b][c] && !less[a][c]) transitive = false;
    if (transitive) {
      Poset p = from_strict_order(less);
      if (!dedupe || seen.insert(canonical_poset_key(p)).second) {
        ++streamed;
        visit(p);
      }
    }
    std::size_t k = 0;
    while (k < state.size() && ++state[k] == 3) state[k++] = 0;
    if (k == state.size()) break;
  }
  return streamed;
}

/// Element below every other element, if any.
inline std::optional<Element> minimum_element(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    if (p.above(x).count() + 1 == p.size()) return x;
  return std::nullopt;
}

}  // namespace poset_endo
