#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.hpp"
#include "poset_endo/family.hpp"
#include "poset_endo/io.hpp"
#include "poset_endo/sweep.hpp"
#include "poset_endo/verify.hpp"

using namespace poset_endo;

namespace {

std::vector<Poset> all_fixtures() {
  std::vector<Poset> out;
  for (auto name : {FixtureName::Diamond, FixtureName::Ladder, FixtureName::S4, FixtureName::S3, FixtureName::Sib,
                    FixtureName::K333, FixtureName::K333x5})
    out.push_back(fixture(name));
  return out;
}

std::vector<NamedPoset> family(const char* json) { return expand_sweep(nlohmann::json::parse(json)); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

// -- poset files -----------------------------------------------------------------------------------

TEST(PosetFile, DiamondBytes) {
  Poset d = fixture(FixtureName::Diamond);
  d.set_names({"0", "a", "b", "1"});
  EXPECT_EQ(write_poset_string(d),
            "{\n"
            "  \"version\": 1,\n"
            "  \"n\": 4,\n"
            "  \"covers\": [\n"
            "    [0, 1],\n"
            "    [0, 2],\n"
            "    [1, 3],\n"
            "    [2, 3]\n"
            "  ],\n"
            "  \"names\": [\"0\", \"a\", \"b\", \"1\"]\n"
            "}\n");
}

TEST(PosetFile, NoCovers) {
  EXPECT_EQ(write_poset_string(gen_antichain(2)), "{\n  \"version\": 1,\n  \"n\": 2,\n  \"covers\": []\n}\n");
}

TEST(PosetFile, RoundTripIsByteStable) {
  for (Poset p : all_fixtures()) {
    const std::string text = write_poset_string(p);
    Poset back = read_poset_string(text);
    EXPECT_EQ(back, p);
    EXPECT_EQ(write_poset_string(back), text);
  }
  Poset named = fixture(FixtureName::Sib);
  named.set_names({"x", "y", "\"quoted\"", "ü", "top"});
  EXPECT_EQ(read_poset_string(write_poset_string(named)), named);
}

TEST(PosetFile, ReadsCompactSpecExample) {
  Poset p = read_poset_string(R"({"version":1, "n":4, "covers":[[0,1],[0,2],[1,3],[2,3]], "names":["0","a","b","1"]})");
  EXPECT_EQ(p.cover_list(), fixture(FixtureName::Diamond).cover_list());
  EXPECT_EQ(p.label(2), "b");
}

TEST(PosetFile, Errors) {
  EXPECT_ERROR_KIND(read_poset_string(R"({"version":1,"n":2,"covers":[[0,1],[1,0]]})"), ErrorKind::CycleDetected);
  EXPECT_ERROR_KIND(read_poset_string(R"({"version":1,"n":3,"covers":[[0,1],[1,2],[0,2]]})"), ErrorKind::RedundantCover);
  EXPECT_ERROR_KIND(read_poset_string("{\"version\":1,"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(read_poset_string(R"({"version":2,"n":1,"covers":[]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(read_poset_string(R"({"version":1,"covers":[]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(read_poset_string(R"({"version":1,"n":2,"covers":[[0]]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(read_poset_string(R"({"version":1,"n":2,"covers":[],"names":["a"]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(read_poset_string(R"([1,2])"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(read_poset("/nonexistent/poset.json"), ErrorKind::ParseError);
}

TEST(PosetFile, ParseErrorReportsPosition) {
  try {
    read_poset_string("{\n  \"version\": 1,\n  \"n\": ?\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("byte 2"), std::string::npos) << e.what();
  }
}

TEST(PosetFile, DiskRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "poset_endo_roundtrip.json";
  Poset p = fixture(FixtureName::Ladder);
  write_poset(p, path.string());
  EXPECT_EQ(read_poset(path.string()), p);
  std::filesystem::remove(path);
}

// -- DOT export ------------------------------------------------------------------------------------

TEST(Dot, Diamond) {
  const std::string dot = export_dot(fixture(FixtureName::Diamond));
  EXPECT_EQ(dot,
            "digraph hasse {\n"
            "  rankdir=BT;\n"
            "  node [shape=circle];\n"
            "  { rank=same; n0; }\n"
            "  { rank=same; n1; n2; }\n"
            "  { rank=same; n3; }\n"
            "  n0 [label=\"0\"];\n"
            "  n1 [label=\"1\"];\n"
            "  n2 [label=\"2\"];\n"
            "  n3 [label=\"3\"];\n"
            "  n0 -> n1;\n"
            "  n0 -> n2;\n"
            "  n1 -> n3;\n"
            "  n2 -> n3;\n"
            "}\n");
}

TEST(Dot, UsesNamesAndIsStable) {
  Poset d = fixture(FixtureName::Diamond);
  d.set_names({"bot", "a", "b", "top"});
  const std::string dot = export_dot(d);
  EXPECT_NE(dot.find("n3 [label=\"top\"]"), std::string::npos);
  EXPECT_EQ(dot, export_dot(d));
  std::size_t edges = 0;
  for (const auto& line : lines(dot)) edges += line.find("->") != std::string::npos;
  EXPECT_EQ(edges, 4u);
}

// -- family specs ----------------------------------------------------------------------------------

TEST(Family, SingleAndRange) {
  auto one = family(R"([{"kind":"diamond_tower","k":2}])");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].poset.size(), 7u);
  EXPECT_EQ(one[0].id, "diamond_tower(k=2)");
  auto many = family(R"({"families":[{"kind":"chain","range":{"param":"len","from":2,"to":8}}]})");
  ASSERT_EQ(many.size(), 7u);
  EXPECT_EQ(many.back().poset, gen_chain(8));
}

TEST(Family, AllKinds) {
  auto items = family(R"([
    {"kind":"antichain","k":3},
    {"kind":"complete_levels","sizes":[2,3]},
    {"kind":"k333"}, {"kind":"k333x5"}, {"kind":"ladder"}, {"kind":"s4_fixture"}, {"kind":"s3_fixture"},
    {"kind":"sib"}, {"kind":"fixture","name":"DIAMOND"},
    {"kind":"random_tower","seed":3,"num_levels":4,"max_level_size":3,"density":0.4},
    {"kind":"random_poset","seed":3,"n":6},
    {"kind":"stacked_block","block":"DIAMOND","k":3,"glue":"identify"},
    {"kind":"stacked_block","block":{"kind":"complete_levels","sizes":[2,2]},"k":2},
    {"kind":"stacked_block","block":"DIAMOND","k":2,"glue":"link","glue_links":[[0,0]]},
    {"kind":"enumerate_all","max_rank":1,"max_level":2,"connected_only":true},
    {"kind":"enumerate_posets","n":3}
  ])");
  ASSERT_EQ(items.size(), 14u + 6u + 5u);
  EXPECT_EQ(items[11].poset, gen_diamond_tower(3));
  EXPECT_EQ(items[12].poset.size(), 8u);
  EXPECT_EQ(items[13].poset.size(), 8u);
  EXPECT_EQ(items[13].poset.cover_count(), 9u);
}

TEST(Family, SameSeedSameBytes) {
  const char* spec = R"([{"kind":"random_tower","seed":11,"num_levels":6,"max_level_size":4,"density":0.5}])";
  EXPECT_EQ(write_poset_string(family(spec)[0].poset), write_poset_string(family(spec)[0].poset));
  auto other = family(R"([{"kind":"random_tower","seed":12,"num_levels":6,"max_level_size":4,"density":0.5}])");
  EXPECT_NE(write_poset_string(family(spec)[0].poset), write_poset_string(other[0].poset));
}

TEST(Family, Errors) {
  EXPECT_ERROR_KIND(family(R"([{"kind":"pentagon"}])"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"([{"kind":"chain"}])"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"([{"kind":"chain","len":-1}])"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"([{"kind":"fixture","name":"NOPE"}])"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"([{"kind":"stacked_block","block":"DIAMOND","k":2,"glue":"weld"}])"),
                    ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"({"list":[]})"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"([{"kind":"chain","range":{"from":1,"to":2}}])"), ErrorKind::ParseError);
  EXPECT_ERROR_KIND(family(R"([{"kind":"stacked_block","block":"K333","k":2,"glue":"identify","glue_permutation":[0,0,1]}])"),
                    ErrorKind::GlueMismatch);
  EXPECT_ERROR_KIND(generate_one(FamilySpec{nlohmann::json::parse(R"({"kind":"enumerate_posets","n":2})")}),
                    ErrorKind::ParseError);
}

// -- sweeps ----------------------------------------------------------------------------------------

TEST(Sweep, EmptyFamilyIsHeaderOnly) {
  EXPECT_EQ(sweep_csv(run_sweep({}, {})),
            "id,n,whidth,aut,end,ratio_num,ratio_den,ratio_dec,up_singles,sibling_pairs,twins,central,c_best,"
            "bounds_passed\n");
}

TEST(Sweep, DiamondRow) {
  auto rows = run_sweep(family(R"([{"kind":"fixture","name":"DIAMOND"}])"), {});
  const auto out = lines(sweep_csv(rows));
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1], "fixture(name=DIAMOND),4,2,2,36,1,18,0.0555556,2,2,1,2,1,2/2");
  EXPECT_EQ(out[2], "# non_increasing=true final_ratio=1/18");
}

TEST(Sweep, DiamondTowersStrictlyDecrease) {
  auto rows = run_sweep(family(R"([{"kind":"diamond_tower","range":{"param":"k","from":1,"to":6}}])"),
                        {{1'000'000'000, true}, 2, 2});
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].counts->ratio, Rational(1, 18));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].counts->ratio, rows[i - 1].counts->ratio);
  EXPECT_TRUE(ratios_non_increasing(rows));
}

TEST(Sweep, ChainsFollowCentralBinomials) {
  auto rows = run_sweep(family(R"([{"kind":"chain","range":{"param":"len","from":2,"to":8}}])"), {});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const unsigned n = static_cast<unsigned>(i + 2);
    EXPECT_EQ(rows[i].counts->ratio, Rational(1, binomial(2 * n - 1, n - 1)));
  }
  EXPECT_TRUE(ratios_non_increasing(rows));
}

TEST(Sweep, BoundsRecomputableFromRow) {
  auto rows = run_sweep(family(R"([{"kind":"random_tower","seed":5,"num_levels":4,"max_level_size":3},
                                   {"kind":"chain","len":4},{"kind":"k333"}])"),
                        {});
  for (const auto& r : rows) {
    ASSERT_TRUE(r.counts);
    EXPECT_EQ(r.counts->ratio, Rational(r.counts->aut_count, r.counts->end_count));
    for (const auto& b : r.bound_checks) {
      if (b.name == "aut_le_end") {
        EXPECT_EQ(b.passed, r.counts->aut_count <= r.counts->end_count);
      }
      if (b.name == "singles") {
        EXPECT_EQ(b.passed, r.counts->aut_count * r.up_singles <= r.counts->end_count);
      }
      EXPECT_TRUE(b.passed);
    }
  }
}

TEST(Sweep, BudgetRowsAreRecordedNotFatal) {
  SweepOptions opts;
  opts.search.node_budget = 50;
  auto rows = run_sweep(family(R"([{"kind":"chain","len":2},{"kind":"k333"}])"), opts);
  EXPECT_EQ(rows[0].status, "ok");
  EXPECT_EQ(rows[1].status, "budget_exceeded");
  const auto out = lines(sweep_csv(rows));
  EXPECT_EQ(out[2], "k333(),9,3,,,,,,0,18,9,3,1,budget_exceeded");
  EXPECT_EQ(out[3], "# non_increasing=true final_ratio=1/3");
}

TEST(Sweep, ParallelOutputMatchesSerial) {
  auto items = family(R"([{"kind":"random_tower","range":{"param":"seed","from":1,"to":24},"num_levels":4,
                           "max_level_size":3}])");
  SweepOptions serial, parallel;
  parallel.jobs = 4;
  EXPECT_EQ(sweep_csv(run_sweep(items, serial)), sweep_csv(run_sweep(items, parallel)));
}

TEST(Sweep, NonGradedRow) {
  auto rows = run_sweep({{"vee-chain", from_cover_list(4, {{0, 1}, {1, 2}, {3, 2}})}}, {});
  EXPECT_EQ(rows[0].whidth, 0u);
  EXPECT_TRUE(rows[0].whitney.empty());
  EXPECT_TRUE(rows[0].counts);
}

TEST(Sweep, RationalRendering) {
  EXPECT_EQ(to_string(Rational(2, 36)), "1/18");
  EXPECT_EQ(decimal_rendering(Rational(1, 3)), "0.333333");
  EXPECT_EQ(decimal_rendering(Rational(1, 1)), "1");
}

TEST(Sweep, CsvQuotesAwkwardIds) {
  auto rows = run_sweep({{"a,\"b\"", gen_chain(2)}}, {});
  EXPECT_EQ(lines(sweep_csv(rows))[1].substr(0, 9), "\"a,\"\"b\"\"\"");
}

// -- verify plumbing -------------------------------------------------------------------------------

TEST(Verify, SuiteNames) {
  const auto& names = suite_names();
  for (const char* expected :
       {"singles", "siblings", "whidth2", "whidth3", "whidth4-cases", "zero-posets", "oracle", "pigeonhole"})
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  EXPECT_ERROR_KIND(run_suite("nonsense"), ErrorKind::UnknownSuite);
}

TEST(Verify, ReportJsonShape) {
  auto rep = run_suite("whidth4-cases");
  EXPECT_TRUE(rep.passed());
  auto j = rep.to_json();
  EXPECT_EQ(j["suite"], "whidth4-cases");
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) EXPECT_TRUE(c.contains("detail"));
}

TEST(Verify, SameSeedSameReport) {
  VerifyOptions opts;
  opts.seed = 9;
  EXPECT_EQ(run_suite("singles", opts).to_json().dump(), run_suite("singles", opts).to_json().dump());
}
