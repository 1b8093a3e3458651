#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "poset_endo/generators.hpp"
#include "poset_endo/grading.hpp"
#include "poset_endo/poset.hpp"
#include "poset_endo/window.hpp"

using namespace poset_endo;

namespace {

Poset diamond() { return from_cover_list(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

std::vector<Element> span_vec(std::span<const Element> s) { return {s.begin(), s.end()}; }

}  // namespace

// -- from_cover_list -------------------------------------------------------------------------------

TEST(FromCoverList, DiamondHasSortedTransposedCovers) {
  Poset d = diamond();
  ASSERT_EQ(d.size(), 4u);
  EXPECT_EQ(span_vec(d.up_covers(0)), (std::vector<Element>{1, 2}));
  EXPECT_EQ(span_vec(d.down_covers(3)), (std::vector<Element>{1, 2}));
  EXPECT_EQ(d.cover_count(), 4u);
  EXPECT_TRUE(d.less(0, 3));
  EXPECT_FALSE(d.comparable(1, 2));
}

TEST(FromCoverList, CoverListIsSortedRegardlessOfInputOrder) {
  Poset d = from_cover_list(4, {{2, 3}, {1, 3}, {0, 2}, {0, 1}});
  EXPECT_EQ(d.cover_list(), (std::vector<Cover>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(d, diamond());
}

TEST(FromCoverList, RedundantCoverRejected) {
  EXPECT_ERROR_KIND(from_cover_list(3, {{0, 1}, {1, 2}, {0, 2}}), ErrorKind::RedundantCover);
}

TEST(FromCoverList, CycleRejected) {
  EXPECT_ERROR_KIND(from_cover_list(2, {{0, 1}, {1, 0}}), ErrorKind::CycleDetected);
  EXPECT_ERROR_KIND(from_cover_list(3, {{0, 1}, {1, 2}, {2, 0}}), ErrorKind::CycleDetected);
}

TEST(FromCoverList, SelfLoopIsACycle) { EXPECT_ERROR_KIND(from_cover_list(1, {{0, 0}}), ErrorKind::CycleDetected); }

TEST(FromCoverList, IndexOutOfRangeRejected) {
  EXPECT_ERROR_KIND(from_cover_list(2, {{0, 2}}), ErrorKind::IndexOutOfRange);
}

TEST(FromCoverList, DuplicateCoverRejected) {
  EXPECT_ERROR_KIND(from_cover_list(2, {{0, 1}, {0, 1}}), ErrorKind::DuplicateCover);
}

TEST(FromCoverList, EmptyPosetAllowed) {
  Poset p = from_cover_list(0, std::vector<Cover>{});
  EXPECT_TRUE(p.empty());
}

TEST(FromCoverList, TransitiveReductionRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Poset p = gen_random_poset(seed, 3 + seed % 8, 0.4);
    const auto order = oracle::reachability(p.size(), p.cover_list());
    EXPECT_EQ(order, oracle::strict_order(p)) << "seed " << seed;
    EXPECT_EQ(oracle::transitive_reduction(order), p.cover_list()) << "seed " << seed;
    EXPECT_EQ(from_strict_order(order), p);
  }
}

TEST(FromCoverList, DepthIsLongestPath) {
  Poset p = from_cover_list(4, {{0, 1}, {1, 2}, {3, 2}});
  EXPECT_EQ(p.depth(0), 0u);
  EXPECT_EQ(p.depth(3), 0u);
  EXPECT_EQ(p.depth(2), 2u);
  const auto ext = span_vec(p.linear_extension());
  EXPECT_EQ(ext, (std::vector<Element>{0, 3, 1, 2}));
}

TEST(Poset, NamesMustMatchSize) {
  Poset d = diamond();
  EXPECT_ERROR_KIND(d.set_names({"a"}), ErrorKind::SizeMismatch);
  d.set_names({"0", "a", "b", "1"});
  EXPECT_EQ(d.label(1), "a");
  EXPECT_NE(d, diamond());
}

// -- grading ---------------------------------------------------------------------------------------

TEST(Grading, Diamond) {
  GradedInfo g = require_grading(diamond());
  EXPECT_EQ(g.ranks, (std::vector<Rank>{0, 1, 1, 2}));
  EXPECT_EQ(g.whitney, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(g.whidth, 2u);
  EXPECT_EQ(g.top_rank, 2u);
  EXPECT_EQ(g.level(1), (std::vector<Element>{1, 2}));
}

TEST(Grading, NotGradedCarriesWitnessChains) {
  Poset p = from_cover_list(4, {{0, 1}, {1, 2}, {3, 2}});
  auto result = compute_grading(p);
  ASSERT_TRUE(std::holds_alternative<NotGraded>(result));
  const auto& w = std::get<NotGraded>(result);
  EXPECT_EQ(w.longer, (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(w.shorter, (std::vector<Element>{3, 2}));
  EXPECT_FALSE(is_graded(p));
  EXPECT_ERROR_KIND(require_grading(p), ErrorKind::NotGraded);
}

TEST(Grading, ShortMaximalChainDetected) {
  // 0 < 1 < 2 and a separate maximal 3 above 0: graded by covers but not by
  // maximal rank.
  Poset p = from_cover_list(4, {{0, 1}, {1, 2}, {0, 3}});
  auto result = compute_grading(p);
  ASSERT_TRUE(std::holds_alternative<NotGraded>(result));
  const auto& w = std::get<NotGraded>(result);
  EXPECT_GT(w.longer.size(), w.shorter.size());
}

TEST(Grading, ChainHasUnitWhitney) {
  for (std::size_t n = 1; n <= 9; ++n) {
    GradedInfo g = require_grading(gen_chain(n));
    EXPECT_EQ(g.top_rank, n - 1);
    EXPECT_EQ(g.whitney, std::vector<std::size_t>(n, 1));
  }
}

TEST(Grading, InvariantsOnRandomTowers) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Poset p = gen_random_tower(seed, 2 + seed % 6, 1 + seed % 4, 0.5);
    GradedInfo g = require_grading(p);
    for (auto [u, v] : p.cover_list()) EXPECT_EQ(g.ranks[v], g.ranks[u] + 1);
    std::size_t total = 0;
    for (auto w : g.whitney) total += w;
    EXPECT_EQ(total, p.size());
    for (Element x = 0; x < p.size(); ++x) {
      if (p.is_minimal(x)) {
        EXPECT_EQ(g.ranks[x], 0u);
      }
      if (p.is_maximal(x)) {
        EXPECT_EQ(g.ranks[x], g.top_rank);
      }
    }
    EXPECT_LE(g.whidth, width(p));
  }
}

TEST(Grading, EmptyPosetRejected) {
  EXPECT_ERROR_KIND(compute_grading(from_cover_list(0, std::vector<Cover>{})), ErrorKind::InvalidParameter);
}

// -- width -----------------------------------------------------------------------------------------

TEST(Width, Examples) {
  EXPECT_EQ(width(diamond()), 2u);
  EXPECT_EQ(width(gen_chain(5)), 1u);
  EXPECT_EQ(width(gen_antichain(4)), 4u);
}

TEST(Width, MatchesLargestAntichainBySubsets) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Poset p = gen_random_poset(seed, 2 + seed % 10, 0.3);
    std::size_t best = 0;
    const std::size_t n = p.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      bool antichain = true;
      for (Element a = 0; a < n && antichain; ++a)
        for (Element b = a + 1; b < n && antichain; ++b)
          if ((mask >> a & 1) && (mask >> b & 1) && p.comparable(a, b)) antichain = false;
      if (antichain) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    EXPECT_EQ(width(p), best) << "seed " << seed;
  }
}

// -- rank_selected ---------------------------------------------------------------------------------

TEST(RankSelected, DiamondEnds) {
  Poset d = diamond();
  GradedInfo g = require_grading(d);
  Poset ends = rank_selected(d, g, {0, 2});
  EXPECT_EQ(ends, gen_chain(2));
  Poset middle = rank_selected(d, g, {1});
  EXPECT_EQ(middle, gen_antichain(2));
}

TEST(RankSelected, ChainSkippingRanks) {
  Poset c = gen_chain(5);
  EXPECT_EQ(rank_selected(c, require_grading(c), {0, 2, 4}), gen_chain(3));
}

TEST(RankSelected, Errors) {
  Poset d = diamond();
  GradedInfo g = require_grading(d);
  EXPECT_ERROR_KIND(rank_selected(d, g, {}), ErrorKind::EmptySelection);
  EXPECT_ERROR_KIND(rank_selected(d, g, {3}), ErrorKind::RankOutOfRange);
}

TEST(RankSelected, OrderIsRestrictionOfFullOrder) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Poset p = gen_random_tower(seed, 5, 3, 0.5);
    GradedInfo g = require_grading(p);
    std::set<Rank> ranks{0, 2, 4};
    Poset q = rank_selected(p, g, ranks);
    std::vector<Element> kept;
    for (Element x = 0; x < p.size(); ++x)
      if (ranks.contains(g.ranks[x])) kept.push_back(x);
    ASSERT_EQ(q.size(), kept.size());
    for (Element a = 0; a < kept.size(); ++a)
      for (Element b = 0; b < kept.size(); ++b) EXPECT_EQ(q.less(a, b), p.less(kept[a], kept[b]));
  }
}

// -- windows and canonical form --------------------------------------------------------------------

TEST(Window, DiamondLowerHalf) {
  Poset d = diamond();
  Window w = window(d, require_grading(d), 0, 1);
  EXPECT_EQ(w.elements, (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(w.induced.cover_list(), (std::vector<Cover>{{0, 1}, {0, 2}}));
  EXPECT_EQ(w.levels, (std::vector<Rank>{0, 1, 1}));
  EXPECT_EQ(w.hi(), 1u);
}

TEST(Window, WholeDiamond) {
  Poset d = diamond();
  Window w = window(d, require_grading(d), 0, 2);
  EXPECT_EQ(w.induced, d);
  EXPECT_EQ(w.canonical_key, as_window(d).canonical_key);
}

TEST(Window, OutOfRange) {
  Poset d = diamond();
  EXPECT_ERROR_KIND(window(d, require_grading(d), 1, 2), ErrorKind::RankOutOfRange);
}

TEST(Window, DiamondTowerBlocksShareKey) {
  Poset t = gen_diamond_tower(4);
  GradedInfo g = require_grading(t);
  Window first = window(t, g, 0, 2);
  for (Rank lo : {2u, 4u, 6u}) {
    Window w = window(t, g, lo, 2);
    EXPECT_EQ(w.canonical_key, first.canonical_key);
    EXPECT_TRUE(oracle::windows_isomorphic(first, w));
  }
}

TEST(Window, UpperAndLowerHalvesDiffer) {
  Poset d = diamond();
  GradedInfo g = require_grading(d);
  Window lower = window(d, g, 0, 1), upper = window(d, g, 1, 1);
  EXPECT_NE(lower.canonical_key, upper.canonical_key);
  EXPECT_FALSE(oracle::windows_isomorphic(lower, upper));
  EXPECT_FALSE(is_isomorphic_rank_preserving(lower, upper));
}

TEST(Window, ConsecutiveWindowComparabilityTwoWays) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Poset p = gen_random_tower(seed, 6, 4, 0.4);
    GradedInfo g = require_grading(p);
    for (Rank lo = 0; lo + 3 <= g.top_rank; ++lo) {
      Window w = window(p, g, lo, 3);
      const auto inside = oracle::reachability(w.elements.size(), w.induced.cover_list());
      for (Element a = 0; a < w.elements.size(); ++a)
        for (Element b = 0; b < w.elements.size(); ++b)
          EXPECT_EQ(inside[a][b], p.less(w.elements[a], w.elements[b]));
    }
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  Rng rng(7);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Poset p = gen_random_tower(seed, 2 + seed % 4, 1 + seed % 4, 0.5);
    std::vector<Element> perm(p.size());
    std::iota(perm.begin(), perm.end(), Element{0});
    rng.shuffle(perm);
    Poset q = oracle::relabel(p, perm);
    EXPECT_EQ(as_window(p).canonical_key, as_window(q).canonical_key) << "seed " << seed;
    EXPECT_EQ(canonical_form(as_window(p)), as_window(p).canonical_key);
  }
}

TEST(CanonicalForm, SeparatesExactlyTheIsomorphismClasses) {
  // Every window of span 2 from random towers with levels of at most 4,
  // compared pairwise against brute-force isomorphism search.
  std::vector<Window> windows;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    TowerSpec spec;
    spec.seed = seed;
    spec.num_levels = 4;
    spec.max_level_size = 4;
    spec.density = 0.3 + 0.1 * static_cast<double>(seed % 6);
    Poset p = gen_random_tower(spec);
    GradedInfo g = require_grading(p);
    for (Rank lo = 0; lo + 2 <= g.top_rank; ++lo) windows.push_back(window(p, g, lo, 2));
  }
  std::size_t equal_pairs = 0;
  for (std::size_t i = 0; i < windows.size(); ++i)
    for (std::size_t j = i + 1; j < windows.size(); ++j) {
      const bool same_key = windows[i].canonical_key == windows[j].canonical_key;
      ASSERT_LE(windows[i].elements.size(), 12u);
      EXPECT_EQ(same_key, oracle::windows_isomorphic(windows[i], windows[j])) << i << " vs " << j;
      equal_pairs += same_key;
    }
  EXPECT_GT(equal_pairs, 0u);
}

TEST(CanonicalForm, SeparatesSmallGradedPosets) {
  std::vector<Window> all;
  enumerate_all_graded(2, 2, [&](const Poset& p) { all.push_back(as_window(p)); });
  std::set<std::string> keys;
  for (const auto& w : all) keys.insert(w.canonical_key);
  std::vector<std::size_t> rep;  // one representative per isomorphism class
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::size_t found = rep.size();
    for (std::size_t r = 0; r < rep.size() && found == rep.size(); ++r)
      if (oracle::windows_isomorphic(all[rep[r]], all[i])) found = r;
    if (found == rep.size()) rep.push_back(i);
  }
  EXPECT_EQ(keys.size(), rep.size());
}

TEST(Isomorphism, IdenticalWindowsGiveIdentity) {
  Poset p = fixture(FixtureName::Ladder);
  Window w = as_window(p);
  auto iso = is_isomorphic_rank_preserving(w, w);
  ASSERT_TRUE(iso);
  EXPECT_EQ(iso->rank_shift, 0);
  for (auto [a, b] : iso->forward)
    for (auto [c, d] : iso->forward) EXPECT_EQ(p.covers(a, c), p.covers(b, d));
  Poset c = gen_chain(4);
  auto chain_iso = is_isomorphic_rank_preserving(as_window(c), as_window(c));
  ASSERT_TRUE(chain_iso);
  for (auto [a, b] : chain_iso->forward) EXPECT_EQ(a, b);
}

TEST(Isomorphism, DifferentWhitneyGivesNone) {
  EXPECT_FALSE(is_isomorphic_rank_preserving(as_window(diamond()), as_window(gen_complete_levels({1, 3, 1}))));
}

TEST(Isomorphism, LowerDiamondVsVee) {
  Poset d = diamond();
  Window lower = window(d, require_grading(d), 0, 1);
  Poset vee = from_cover_list(3, {{0, 2}, {1, 2}});
  EXPECT_FALSE(is_isomorphic_rank_preserving(lower, as_window(vee)));
}

TEST(Isomorphism, MapPreservesCoversWithShift) {
  Poset t = gen_diamond_tower(3);
  GradedInfo g = require_grading(t);
  Window a = window(t, g, 0, 2), b = window(t, g, 4, 2);
  auto iso = is_isomorphic_rank_preserving(a, b);
  ASSERT_TRUE(iso);
  EXPECT_EQ(iso->rank_shift, 4);
  for (auto [x, fx] : iso->forward) EXPECT_EQ(g.ranks[fx], g.ranks[x] + 4);
  for (auto [x, fx] : iso->forward)
    for (auto [y, fy] : iso->forward) EXPECT_EQ(t.covers(x, y), t.covers(fx, fy));
}

// -- components ------------------------------------------------------------------------------------

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(diamond()).size(), 1u);
  auto two = connected_components(disjoint_union(diamond(), diamond()));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].size(), 4u);
  EXPECT_EQ(two[1].size(), 4u);
  EXPECT_EQ(connected_components(gen_antichain(3)).size(), 3u);
}

TEST(Components, InducedSubposetKeepsNames) {
  Poset d = diamond();
  d.set_names({"bot", "a", "b", "top"});
  std::vector<Element> keep{0, 3};
  Poset q = induced_subposet(d, keep);
  EXPECT_EQ(q.names(), (std::vector<std::string>{"bot", "top"}));
  EXPECT_TRUE(q.less(0, 1));
}
