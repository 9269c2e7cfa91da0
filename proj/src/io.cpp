#include "gwp/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gwp/error.hpp"

namespace gwp::io {

  namespace {
    json const& require(json const& doc, char const* key) {
      if (!doc.is_object() || !doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
      }
      return doc.at(key);
    }

    std::string require_string(json const& doc, char const* what) {
      if (!doc.is_string()) {
        throw ParseError(std::string(what) + " must be a string");
      }
      return doc.get<std::string>();
    }

    Rational rational_field(json const& doc, char const* key) {
      if (!doc.contains(key)) {
        return 0;
      }
      return parse_rational(require_string(doc.at(key), key));
    }
  }  // namespace

  json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open '" + path.string() + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError("'" + path.string() + "': " + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  Graph graph_from_json(json const& doc) {
    auto const& vs = require(doc, "vertices");
    if (!vs.is_array()) {
      throw ParseError("'vertices' must be an array");
    }
    std::vector<std::string> vertices;
    for (auto const& v : vs) {
      vertices.push_back(require_string(v, "vertex id"));
    }
    std::vector<EdgeSpec> edges;
    if (doc.contains("edges")) {
      auto const& es = doc.at("edges");
      if (!es.is_array()) {
        throw ParseError("'edges' must be an array");
      }
      for (auto const& e : es) {
        edges.push_back({require_string(require(e, "id"), "edge id"),
                         require_string(require(e, "src"), "edge src"),
                         require_string(require(e, "dst"), "edge dst")});
      }
    }
    return Graph(std::move(vertices), edges);
  }

  json graph_to_json(Graph const& g) {
    json vertices = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      vertices.push_back(g.vertex_name(v));
    }
    json edges = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto const& edge = g.edge(e);
      edges.push_back({{"id", edge.id},
                       {"src", g.vertex_name(edge.src)},
                       {"dst", g.vertex_name(edge.dst)}});
    }
    return {{"vertices", vertices}, {"edges", edges}};
  }

  GraphPtr load_graph_file(std::filesystem::path const& path) {
    return std::make_shared<Graph const>(graph_from_json(read_json_file(path)));
  }

  ////////////////////////////////////////////////////////////////////////
  // Scalars and diagonal elements
  ////////////////////////////////////////////////////////////////////////

  json scalar_to_json(Scalar const& z) {
    return {{"re", to_string(z.re())}, {"im", to_string(z.im())}};
  }

  Scalar scalar_from_json(json const& doc) {
    if (!doc.is_object()) {
      throw ParseError("scalar must be an object with 're' and 'im'");
    }
    return Scalar(rational_field(doc, "re"), rational_field(doc, "im"));
  }

  DiagonalElement diagonal_from_json(json const& doc, Graph const& g) {
    if (!doc.is_object()) {
      throw ParseError("diagonal element must be an object keyed by vertex id");
    }
    DiagonalElement d;
    for (auto const& [name, value] : doc.items()) {
      auto v = g.find_vertex(name);
      if (!v) {
        throw DomainError("unknown vertex '" + name + "'");
      }
      d.add(*v, scalar_from_json(value));
    }
    return d;
  }

  DiagonalElement load_diagonal_file(std::filesystem::path const& path, Graph const& g) {
    return diagonal_from_json(read_json_file(path), g);
  }

  json diagonal_to_json(DiagonalElement const& d, Graph const& g) {
    json out = json::object();
    for (auto const& [v, q] : d.entries()) {
      out[g.vertex_name(v)] = scalar_to_json(q);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words and variables
  ////////////////////////////////////////////////////////////////////////

  json word_to_json(Graph const& g, PathWord const& w) {
    return to_names(g, w);
  }

  json normal_form_to_json(Graph const& g, NormalForm const& nf) {
    switch (nf.kind()) {
      case NormalForm::Kind::zero:
        return {{"kind", "zero"}};
      case NormalForm::Kind::unit:
        return {{"kind", "unit"}};
      case NormalForm::Kind::pair:
        break;
    }
    return {{"kind", "pair"},
            {"alpha", word_to_json(g, nf.alpha())},
            {"beta", word_to_json(g, nf.beta())}};
  }

  RandomVariable variable_from_json(json const& doc, std::filesystem::path const& base_dir) {
    auto const& gdoc = require(doc, "graph");
    GraphPtr    graph;
    if (gdoc.is_string()) {
      std::filesystem::path p = gdoc.get<std::string>();
      if (p.is_relative()) {
        p = base_dir / p;
      }
      graph = load_graph_file(p);
    } else {
      graph = std::make_shared<Graph const>(graph_from_json(gdoc));
    }

    RandomVariable a(graph);
    auto const&    terms = require(doc, "terms");
    if (!terms.is_array()) {
      throw ParseError("'terms' must be an array");
    }
    for (auto const& t : terms) {
      auto const& wdoc = require(t, "word");
      if (!wdoc.is_array()) {
        throw ParseError("term 'word' must be an array of ids");
      }
      std::vector<std::string> names;
      for (auto const& n : wdoc) {
        names.push_back(require_string(n, "word entry"));
      }
      bool star = false;
      if (t.contains("star")) {
        if (!t.at("star").is_boolean()) {
          throw ParseError("term 'star' must be a boolean");
        }
        star = t.at("star").get<bool>();
      }
      a.add(word_from_names(*graph, names), star,
            Scalar(rational_field(t, "re"), rational_field(t, "im")));
    }
    return a;
  }

  RandomVariable load_variable_file(std::filesystem::path const& path) {
    return variable_from_json(read_json_file(path), path.parent_path());
  }

  json variable_to_json(RandomVariable const& a) {
    Graph const& g     = *a.graph();
    json         terms = json::array();
    for (auto const& [l, c] : a.terms()) {
      terms.push_back({{"word", word_to_json(g, l.word())},
                       {"star", l.star()},
                       {"re", to_string(c.re())},
                       {"im", to_string(c.im())}});
    }
    return {{"graph", graph_to_json(g)}, {"terms", terms}};
  }

  std::vector<Letter> parse_word_literal(Graph const& g, std::string_view text) {
    std::vector<Letter> out;
    std::istringstream  in{std::string(text)};
    std::string         token;
    while (in >> token) {
      bool star = false;
      if (token.back() == '*') {
        star = true;
        token.pop_back();
      }
      if (token.empty() || token.find('*') != std::string::npos) {
        throw ParseError("malformed letter in word literal '" + std::string(text) + "'");
      }
      if (auto v = g.find_vertex(token)) {
        out.emplace_back(PathWord::vertex(*v), false);
      } else if (auto e = g.find_edge(token)) {
        out.emplace_back(PathWord::path(g, {*e}), star);
      } else {
        throw DomainError("unknown id '" + token + "'");
      }
    }
    if (out.empty()) {
      throw ParseError("empty word literal");
    }
    return out;
  }

}  // namespace gwp::io
