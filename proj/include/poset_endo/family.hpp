#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "poset_endo/generators.hpp"

namespace poset_endo {

/// A generator invocation as it appears in JSON configs:
/// {"kind": "diamond_tower", "k": 3}. Parameters are kind-specific; unknown
/// kinds and missing or ill-typed parameters are ParseErrors. A "range"
/// member {"param": "k", "from": 1, "to": 6} expands one spec into several.
struct FamilySpec {
  nlohmann::json params;

  std::string kind() const { return params.value("kind", std::string{}); }
};

struct NamedPoset {
  std::string id;
  Poset poset;
};

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing parameter \"") + key + "\"");
  return j[key];
}

inline std::size_t get_count(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_unsigned()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline std::size_t get_count_or(const nlohmann::json& j, const char* key, std::size_t fallback) {
  return j.contains(key) ? get_count(j, key) : fallback;
}

inline double get_real_or(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a number");
  return j[key].get<double>();
}

inline std::string param_suffix(const nlohmann::json& j) {
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind" || key == "range") continue;
    out += (out.empty() ? "" : ",") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

}  // namespace detail

inline std::vector<NamedPoset> expand_family(const FamilySpec& spec);

inline Poset generate_one(const FamilySpec& spec) {
  auto all = expand_family(spec);
  if (all.size() != 1)
    throw Error(ErrorKind::ParseError, "family \"" + spec.kind() + "\" does not describe exactly one poset");
  return std::move(all.front().poset);
}

/// Every poset a spec describes, in a deterministic order.
inline std::vector<NamedPoset> expand_family(const FamilySpec& spec) {
  using detail::get_count;
  using detail::get_count_or;
  const auto& j = spec.params;
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "family spec must be an object");
  const std::string kind = spec.kind();
  const std::string suffix = detail::param_suffix(j);
  const std::string id = kind + "(" + suffix + ")";

  if (j.contains("range")) {
    const auto& range = j["range"];
    if (!range.is_object() || !range.contains("param") || !range["param"].is_string())
      throw Error(ErrorKind::ParseError, "\"range\" needs a string \"param\"");
    const std::string param = range["param"].get<std::string>();
    const std::size_t from = get_count(range, "from"), to = get_count(range, "to");
    std::vector<NamedPoset> out;
    for (std::size_t v = from; v <= to; ++v) {
      FamilySpec one{j};
      one.params.erase("range");
      one.params[param] = v;
      for (auto& item : expand_family(one)) out.push_back(std::move(item));
    }
    return out;
  }

  auto single = [&](Poset p) { return std::vector<NamedPoset>{{id, std::move(p)}}; };

  if (kind == "chain") return single(gen_chain(get_count(j, "len")));
  if (kind == "antichain") return single(gen_antichain(get_count(j, "k")));
  if (kind == "diamond_tower") return single(gen_diamond_tower(get_count(j, "k")));
  if (kind == "complete_levels") {
    const auto& sizes = detail::require(j, "sizes");
    if (!sizes.is_array()) throw Error(ErrorKind::ParseError, "\"sizes\" must be an array");
    return single(gen_complete_levels(sizes.get<std::vector<std::size_t>>()));
  }
  if (kind == "k333") return single(fixture(FixtureName::K333));
  if (kind == "k333x5") return single(fixture(FixtureName::K333x5));
  if (kind == "ladder") return single(fixture(FixtureName::Ladder));
  if (kind == "s4_fixture") return single(fixture(FixtureName::S4));
  if (kind == "s3_fixture") return single(fixture(FixtureName::S3));
  if (kind == "sib") return single(fixture(FixtureName::Sib));
  if (kind == "fixture") {
    const auto& name = detail::require(j, "name");
    auto parsed = name.is_string() ? parse_fixture(name.get<std::string>()) : std::nullopt;
    if (!parsed) throw Error(ErrorKind::ParseError, "unknown fixture " + name.dump());
    return single(fixture(*parsed));
  }
  if (kind == "random_tower") {
    TowerSpec t;
    t.seed = get_count_or(j, "seed", 1);
    t.num_levels = get_count(j, "num_levels");
    t.min_level_size = get_count_or(j, "min_level_size", 1);
    t.max_level_size = get_count(j, "max_level_size");
    t.density = detail::get_real_or(j, "density", 0.5);
    t.min_degree = get_count_or(j, "min_degree", 1);
    return single(gen_random_tower(t));
  }
  if (kind == "random_poset")
    return single(gen_random_poset(get_count_or(j, "seed", 1), get_count(j, "n"), detail::get_real_or(j, "density", 0.5)));
  if (kind == "stacked_block") {
    const auto& block_spec = detail::require(j, "block");
    Poset block_poset = block_spec.is_string()
                            ? generate_one(FamilySpec{nlohmann::json{{"kind", "fixture"}, {"name", block_spec}}})
                            : generate_one(FamilySpec{block_spec});
    Window block = as_window(block_poset);
    const std::string mode = j.value("glue", std::string("link"));
    Glue glue;
    if (mode == "identify") {
      glue = Glue::identify(j.value("glue_permutation", std::vector<Element>{}));
    } else if (mode == "link") {
      glue = j.contains("glue_links")
                 ? Glue::link(j["glue_links"].get<std::vector<std::pair<Element, Element>>>())
                 : Glue::complete(block);
    } else {
      throw Error(ErrorKind::ParseError, "glue must be \"identify\" or \"link\"");
    }
    return single(gen_stacked(block, get_count(j, "k"), glue));
  }
  if (kind == "enumerate_all") {
    EnumerateOptions opts;
    opts.connected_only = j.value("connected_only", false);
    opts.dedupe = j.value("dedupe", true);
    std::vector<NamedPoset> out;
    enumerate_all_graded(get_count(j, "max_rank"), get_count(j, "max_level"), [&](const Poset& p) {
      out.push_back({id + "#" + std::to_string(out.size()), p});
    }, opts);
    return out;
  }
  if (kind == "enumerate_posets") {
    std::vector<NamedPoset> out;
    enumerate_all_posets(get_count(j, "n"), [&](const Poset& p) {
      out.push_back({id + "#" + std::to_string(out.size()), p});
    }, j.value("dedupe", true));
    return out;
  }
  throw Error(ErrorKind::ParseError, "unknown family kind \"" + kind + "\"");
}

/// A sweep config is either an array of family specs or {"families": [...]}.
inline std::vector<NamedPoset> expand_sweep(const nlohmann::json& config) {
  const nlohmann::json* list = &config;
  if (config.is_object()) {
    if (!config.contains("families")) throw Error(ErrorKind::ParseError, "sweep config needs \"families\"");
    list = &config["families"];
  }
  if (!list->is_array()) throw Error(ErrorKind::ParseError, "sweep families must be an array");
  std::vector<NamedPoset> out;
  for (const auto& item : *list)
    for (auto& np : expand_family(FamilySpec{item})) out.push_back(std::move(np));
  return out;
}

}  // namespace poset_endo
