#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "fuzzy/graph.hpp"

namespace fuzzy {

// Graph documents are JSON:
//   {"vertices": [{"id": "a", "sigma": "1/2"}, ...],
//    "edges":    [{"u": "a", "v": "b", "mu": "0.25"}, ...]}
// Values are strings, either "p/q" or a decimal literal, parsed exactly.

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorCode::SyntaxError, where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::SyntaxError, where + ": missing field \"" + key + "\"");
  if (!it->is_string()) throw Error(ErrorCode::SyntaxError, where + "." + key + ": expected a string");
  return *it;
}

inline Membership field_value(const nlohmann::json& obj, const char* key, const std::string& where) {
  const auto& text = require_field(obj, key, where).get_ref<const std::string&>();
  try {
    return Membership::parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), where + "." + key + ": " + e.detail());
  }
}

inline std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace detail

inline FuzzyGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::SyntaxError, "document must be a JSON object");
  auto vit = doc.find("vertices");
  if (vit == doc.end() || !vit->is_array()) throw Error(ErrorCode::SyntaxError, "missing \"vertices\" array");

  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < vit->size(); ++i) {
    std::string where = "vertices[" + std::to_string(i) + "]";
    const auto& entry = (*vit)[i];
    vertices.push_back({detail::require_field(entry, "id", where).get<std::string>(), detail::field_value(entry, "sigma", where)});
  }

  std::vector<EdgeSpec> edges;
  std::set<std::pair<std::string, std::string>> seen;
  if (auto eit = doc.find("edges"); eit != doc.end()) {
    if (!eit->is_array()) throw Error(ErrorCode::SyntaxError, "\"edges\" must be an array");
    for (std::size_t i = 0; i < eit->size(); ++i) {
      std::string where = "edges[" + std::to_string(i) + "]";
      const auto& entry = (*eit)[i];
      EdgeSpec e{detail::require_field(entry, "u", where).get<std::string>(), detail::require_field(entry, "v", where).get<std::string>(),
                 detail::field_value(entry, "mu", where)};
      if (!seen.insert(std::minmax(e.u, e.v)).second) {
        throw Error(ErrorCode::DuplicateEdge, where + ": pair {" + e.u + "," + e.v + "} already listed");
      }
      edges.push_back(std::move(e));
    }
  }

  try {
    return FuzzyGraph::build(std::move(vertices), std::move(edges));
  } catch (const Error& e) {
    // Re-raise with the same code; the message already names the offending ids.
    throw Error(e.code(), "document: " + e.detail());
  }
}

/// Canonical byte-stable form: vertices by id, edges by (min id, max id),
/// values as lowest-terms "p/q", one entry per line, trailing newline.
inline std::string serialize_graph(const FuzzyGraph& g) {
  std::ostringstream out;
  out << "{\n  \"vertices\": [";
  for (std::size_t i = 0; i < g.order(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"id\": " << detail::json_quote(g.id(i)) << ", \"sigma\": \""
        << g.sigma(i).str() << "\"}";
  }
  out << (g.order() ? "\n  ],\n" : "],\n");
  out << "  \"edges\": [";
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& e = g.edges()[k];
    out << (k ? ",\n" : "\n") << "    {\"u\": " << detail::json_quote(g.id(e.u)) << ", \"v\": "
        << detail::json_quote(g.id(e.v)) << ", \"mu\": \"" << e.mu.str() << "\"}";
  }
  out << (g.size() ? "\n  ]\n" : "]\n") << "}\n";
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write \"" + path + "\"");
  out << text;
}

inline FuzzyGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

inline void save_graph(const std::string& path, const FuzzyGraph& g) { write_text_file(path, serialize_graph(g)); }

}  // namespace fuzzy
