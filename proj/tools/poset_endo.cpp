// poset-endo: command-line front end for the poset_endo library.
//
// Exit codes: 0 success, 1 check failure, 2 usage or parse error,
// 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "poset_endo/family.hpp"
#include "poset_endo/io.hpp"
#include "poset_endo/morphism.hpp"
#include "poset_endo/sweep.hpp"
#include "poset_endo/verify.hpp"

using namespace poset_endo;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::uint64_t budget = 1'000'000'000;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::string csv;
  std::string out;
  bool strict = false;
  bool memo = false;
  bool count = false;
  std::string format = "text";
  std::string path;
  std::string suite;
  Rank span = 2;
};

SearchOptions search_options(const Options& o) { return {o.budget, o.memo}; }

nlohmann::json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[') {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

json list(const std::vector<Element>& v) { return json(v); }

json pairs(const std::vector<std::pair<Element, Element>>& v) {
  json out = json::array();
  for (auto [a, b] : v) out.push_back({a, b});
  return out;
}

int cmd_analyze(const Options& o) {
  Poset p = read_poset(o.path);
  json doc;
  doc["n"] = p.size();
  doc["covers"] = p.cover_count();
  doc["width"] = width(p);
  json comps = json::array();
  for (const auto& c : connected_components(p)) comps.push_back(c);
  doc["components"] = comps;
  if (p.empty()) {
    doc["graded"] = false;
  } else if (auto graded = compute_grading(p); auto* ng = std::get_if<NotGraded>(&graded)) {
    doc["graded"] = false;
    doc["not_graded_witness"] = {{"longer", ng->longer}, {"shorter", ng->shorter}};
  } else {
    const GradedInfo& g = std::get<GradedInfo>(graded);
    doc["graded"] = true;
    doc["ranks"] = g.ranks;
    doc["whitney"] = g.whitney;
    doc["whidth"] = g.whidth;
    doc["top_rank"] = g.top_rank;
    const auto rep = structure_report(p, g);
    json structure;
    structure["up_singles"] = list(rep.up_singles);
    structure["down_singles"] = list(rep.down_singles);
    structure["older_sibling_pairs"] = pairs(rep.older_sibling_pairs);
    structure["twin_pairs"] = pairs(rep.twin_pairs);
    json central = json::array();
    for (const auto& w : rep.central_witnesses) central.push_back({w.x, w.r1, w.r2});
    structure["central_witnesses"] = central;
    doc["structure"] = structure;
    json repeats = json::array();
    for (Rank span = 2; span <= 4 && span <= g.top_rank; ++span) {
      const auto rr = find_repeating_windows(p, g, span);
      json groups = json::array();
      for (const auto& grp : rr.groups) groups.push_back({{"starts", grp.starts}, {"c", grp.c()}});
      repeats.push_back({{"span", span}, {"classes", rr.groups.size()}, {"best_c", rr.best_c()},
                         {"best_starts", rr.best_group() ? json(rr.best_group()->starts) : json::array()},
                         {"groups", groups}});
    }
    doc["repeating_windows"] = repeats;
  }
  if (o.count) {
    const auto r = count_result(p, search_options(o));
    doc["aut"] = r.aut_count.str();
    doc["end"] = r.end_count.str();
    doc["ratio"] = to_string(r.ratio);
  }

  if (o.format == "json") {
    emit(o, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "elements: " << p.size() << "\ncovers: " << doc["covers"] << "\nwidth: " << doc["width"]
      << "\ncomponents: " << doc["components"].size() << "\n";
  if (!doc["graded"]) {
    out << "graded: no (NotGraded)\n";
    if (doc.contains("not_graded_witness"))
      out << "  chain " << doc["not_graded_witness"]["longer"].dump() << " vs " << doc["not_graded_witness"]["shorter"].dump()
          << "\n";
  } else {
    out << "graded: yes\nwhitney: " << doc["whitney"].dump() << "\nwhidth: " << doc["whidth"]
        << "\ntop rank: " << doc["top_rank"] << "\n";
    const auto& s = doc["structure"];
    out << "up-singles: " << s["up_singles"].dump() << "\ndown-singles: " << s["down_singles"].dump()
        << "\nolder-sibling pairs: " << s["older_sibling_pairs"].dump() << "\ntwins: " << s["twin_pairs"].dump()
        << "\ncentral (x, r1, r2): " << s["central_witnesses"].dump() << "\n";
    for (const auto& r : doc["repeating_windows"])
      out << "span " << r["span"] << ": " << r["classes"] << " window classes, best c = " << r["best_c"]
          << " at starts " << r["best_starts"].dump() << "\n";
  }
  if (o.count)
    out << "automorphisms: " << doc["aut"].get<std::string>() << "\nendomorphisms: " << doc["end"].get<std::string>()
        << "\nratio: " << doc["ratio"].get<std::string>() << "\n";
  emit(o, out.str());
  return 0;
}

int cmd_count(const Options& o) {
  Poset p = read_poset(o.path);
  const auto r = count_result(p, search_options(o));
  // Counts are emitted as JSON numbers; cpp_int renders exact digits.
  std::ostringstream out;
  out << "{\"aut\":" << r.aut_count << ",\"end\":" << r.end_count << ",\"ratio\":\"" << to_string(r.ratio) << "\"}\n";
  emit(o, out.str());
  return 0;
}

int cmd_generate(const Options& o) {
  nlohmann::json spec = read_json_arg(o.path);
  if (o.seed && spec.is_object()) spec["seed"] = *o.seed;
  Poset p = generate_one(FamilySpec{spec});
  emit(o, write_poset_string(p));
  return 0;
}

int cmd_sweep(const Options& o) {
  nlohmann::json config = read_json_arg(o.path);
  if (o.seed) {
    auto& fams = config.is_object() ? config["families"] : config;
    for (auto& f : fams)
      if (f.is_object()) f["seed"] = *o.seed;
  }
  const auto items = expand_sweep(config);
  SweepOptions so;
  so.search = search_options(o);
  so.span = o.span;
  so.jobs = o.jobs;
  const auto rows = run_sweep(items, so);
  const std::string csv = sweep_csv(rows);
  if (!o.csv.empty()) write_text_file(o.csv, csv);
  else std::cout << csv;
  if (o.strict) {
    for (const auto& r : rows) {
      if (!r.counts) return kExitBudget;
      for (const auto& b : r.bound_checks)
        if (!b.passed) return kExitCheckFailed;
    }
  }
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  if (o.seed) vo.seed = *o.seed;
  vo.search.node_budget = o.budget;
  const SuiteReport rep = run_suite(o.suite, vo);
  if (o.format == "json") {
    emit(o, rep.to_json().dump(2) + "\n");
  } else {
    std::ostringstream out;
    for (const auto& c : rep.checks)
      out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    out << "suite " << rep.suite << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    emit(o, out.str());
  }
  return rep.passed() ? 0 : kExitCheckFailed;
}

int cmd_export_dot(const Options& o) {
  emit(o, export_dot(read_poset(o.path)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded posets: structure detection, exact Aut/End counting and bound verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "search node budget")->capture_default_str();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_flag("--memo", o.memo, "frontier-keyed caching in endomorphism counting");
  };
  auto set_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) { o.seed = s; }, "random seed");
  };

  auto* analyze = app.add_subcommand("analyze", "gradedness, structure and repeating windows");
  analyze->add_option("path", o.path, "poset file")->required();
  analyze->add_flag("--count", o.count, "also count automorphisms and endomorphisms");
  add_common(analyze);

  auto* count = app.add_subcommand("count", "exact |Aut|, |End| and their ratio as JSON");
  count->add_option("path", o.path, "poset file")->required();
  add_common(count);

  auto* generate = app.add_subcommand("generate", "materialise a family spec as a poset file");
  generate->add_option("spec", o.path, "family spec JSON (file or inline)")->required();
  add_common(generate);
  set_seed(generate);

  auto* sweep = app.add_subcommand("sweep", "ratio table over a list of families");
  sweep->add_option("spec", o.path, "sweep config JSON (file or inline)")->required();
  sweep->add_option("--csv", o.csv, "CSV output path");
  sweep->add_option("--jobs", o.jobs, "parallel workers")->check(CLI::PositiveNumber);
  sweep->add_option("--span", o.span, "window span for c_best");
  sweep->add_flag("--strict", o.strict, "nonzero exit on budget or bound failures");
  add_common(sweep);
  set_seed(sweep);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required();
  add_common(verify);
  set_seed(verify);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in Graphviz DOT");
  dot->add_option("path", o.path, "poset file")->required();
  add_common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o);
    if (count->parsed()) return cmd_count(o);
    if (generate->parsed()) return cmd_generate(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (verify->parsed()) return cmd_verify(o);
    if (dot->parsed()) return cmd_export_dot(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
