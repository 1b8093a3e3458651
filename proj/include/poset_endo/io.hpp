#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "poset_endo/grading.hpp"

namespace poset_endo {

inline constexpr int kPosetFileVersion = 1;

/// Byte-stable JSON rendering: keys in the order version, n, covers, names;
/// two-space indentation; one cover per line in ascending order.
inline std::string write_poset_string(const Poset& p) {
  std::ostringstream out;
  out << "{\n  \"version\": " << kPosetFileVersion << ",\n  \"n\": " << p.size() << ",\n  \"covers\": [";
  const auto covers = p.cover_list();
  for (std::size_t i = 0; i < covers.size(); ++i)
    out << (i ? ",\n    [" : "\n    [") << covers[i].first << ", " << covers[i].second << "]";
  out << (covers.empty() ? "]" : "\n  ]");
  if (!p.names().empty()) {
    out << ",\n  \"names\": [";
    for (std::size_t i = 0; i < p.names().size(); ++i)
      out << (i ? ", " : "") << nlohmann::json(p.names()[i]).dump();
    out << "]";
  }
  out << "\n}\n";
  return out.str();
}

inline Poset read_poset_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  auto fail = [](const std::string& what) -> Error { return Error(ErrorKind::ParseError, what); };
  if (!doc.is_object()) throw fail("top level must be an object");
  if (!doc.contains("version") || doc["version"] != kPosetFileVersion) throw fail("unsupported or missing version");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) throw fail("\"n\" must be a nonnegative integer");
  const std::size_t n = doc["n"].get<std::size_t>();
  if (!doc.contains("covers") || !doc["covers"].is_array()) throw fail("\"covers\" must be an array");
  std::vector<Cover> covers;
  for (const auto& pair : doc["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned())
      throw fail("each cover must be a pair of nonnegative integers");
    covers.emplace_back(pair[0].get<Element>(), pair[1].get<Element>());
  }
  Poset p = from_cover_list(n, covers);
  if (doc.contains("names")) {
    const auto& names = doc["names"];
    if (!names.is_array() || names.size() != n) throw fail("\"names\" must list one string per element");
    std::vector<std::string> table;
    for (const auto& name : names) {
      if (!name.is_string()) throw fail("element names must be strings");
      table.push_back(name.get<std::string>());
    }
    p.set_names(std::move(table));
  }
  return p;
}

inline Poset read_poset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return read_poset_string(buf.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

inline void write_poset(const Poset& p, const std::string& path) { write_text_file(path, write_poset_string(p)); }

/// Hasse diagram as a bottom-to-top layered digraph, one same-rank group per
/// depth level.
inline std::string export_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::size_t max_depth = 0;
  for (Element x = 0; x < p.size(); ++x) max_depth = std::max(max_depth, p.depth(x));
  for (std::size_t d = 0; d <= max_depth && !p.empty(); ++d) {
    out << "  { rank=same;";
    for (Element x = 0; x < p.size(); ++x)
      if (p.depth(x) == d) out << " n" << x << ";";
    out << " }\n";
  }
  for (Element x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << nlohmann::json(p.label(x)).dump() << "];\n";
  for (auto [u, v] : p.cover_list()) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace poset_endo
