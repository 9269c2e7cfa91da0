#pragma once

// JSON file formats and the word-literal grammar.
//
//   graph     {"vertices": [id...], "edges": [{"id", "src", "dst"}...]}
//   variable  {"graph": <graph object | path>, "terms": [{"word": [id...],
//              "star": bool, "re": rational, "im": rational}...]}
//   diagonal  {vertex-id: {"re": rational, "im": rational}...}
//
// Scalars are always written as rational strings so output stays exact.

#include <filesystem>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gwp/elements.hpp"

namespace gwp::io {

  using json = nlohmann::json;

  // All loaders throw ParseError on malformed documents; unknown ids inside an
  // otherwise well-formed variable or diagonal document are DomainErrors.
  json read_json_file(std::filesystem::path const& path);

  Graph    graph_from_json(json const& doc);
  json     graph_to_json(Graph const& g);
  GraphPtr load_graph_file(std::filesystem::path const& path);

  // A string "graph" entry is a path resolved against base_dir.
  RandomVariable variable_from_json(json const& doc, std::filesystem::path const& base_dir);
  RandomVariable load_variable_file(std::filesystem::path const& path);
  json           variable_to_json(RandomVariable const& a);

  json   scalar_to_json(Scalar const& z);
  Scalar scalar_from_json(json const& doc);

  DiagonalElement diagonal_from_json(json const& doc, Graph const& g);
  DiagonalElement load_diagonal_file(std::filesystem::path const& path, Graph const& g);
  json            diagonal_to_json(DiagonalElement const& d, Graph const& g);

  json word_to_json(Graph const& g, PathWord const& w);
  json normal_form_to_json(Graph const& g, NormalForm const& nf);

  // Whitespace-separated ids; a trailing '*' marks annihilation ("e1 e2*").
  // Each id is a single edge or vertex. Malformed tokens are ParseErrors,
  // unknown ids DomainErrors.
  std::vector<Letter> parse_word_literal(Graph const& g, std::string_view text);

}  // namespace gwp::io
