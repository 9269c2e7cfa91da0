#include "gwp/graph.hpp"

#include <algorithm>
#include <numeric>

#include "gwp/error.hpp"

namespace gwp {

  Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> const& edges)
      : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
      throw ParseError("graph has no vertices");
    }
    for (VertexId v = 0; v < vertices_.size(); ++v) {
      if (!vertex_index_.emplace(vertices_[v], v).second) {
        throw ParseError("duplicate vertex id '" + vertices_[v] + "'");
      }
    }

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a].id < edges[b].id; });

    out_.resize(vertices_.size());
    for (std::size_t i : order) {
      EdgeSpec const& spec = edges[i];
      if (vertex_index_.contains(spec.id)) {
        throw ParseError("id '" + spec.id + "' is used for both a vertex and an edge");
      }
      auto src = vertex_index_.find(spec.src);
      auto dst = vertex_index_.find(spec.dst);
      if (src == vertex_index_.end() || dst == vertex_index_.end()) {
        throw ParseError("edge '" + spec.id + "' has a dangling endpoint");
      }
      auto const id = static_cast<EdgeId>(edges_.size());
      if (!edge_index_.emplace(spec.id, id).second) {
        throw ParseError("duplicate edge id '" + spec.id + "'");
      }
      edges_.push_back({spec.id, src->second, dst->second});
      out_[src->second].push_back(id);
    }
  }

  std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::tuple<std::string, VertexId, VertexId>> Graph::edge_tuples() const {
    std::vector<std::tuple<std::string, VertexId, VertexId>> out;
    out.reserve(edges_.size());
    for (auto const& e : edges_) {
      out.emplace_back(e.id, e.src, e.dst);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PathWord
  ////////////////////////////////////////////////////////////////////////

  PathWord PathWord::path(Graph const& g, std::vector<EdgeId> edges) {
    if (edges.empty()) {
      throw DomainError("a path needs at least one edge");
    }
    std::vector<VertexId> vertices;
    vertices.reserve(edges.size() + 1);
    vertices.push_back(g.edge(edges.front()).src);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& e = g.edge(edges[i]);
      if (e.src != vertices.back()) {
        throw DomainError("inadmissible path: '" + g.edge(edges[i - 1]).id + "' then '" + e.id
                          + "'");
      }
      vertices.push_back(e.dst);
    }
    return PathWord(std::move(vertices), std::move(edges));
  }

  PathWord PathWord::prefix(std::size_t n) const {
    return PathWord({vertices_.begin(), vertices_.begin() + static_cast<long>(n) + 1},
                    {edges_.begin(), edges_.begin() + static_cast<long>(n)});
  }

  PathWord PathWord::suffix(std::size_t n) const {
    std::size_t const skip = length() - n;
    return PathWord({vertices_.begin() + static_cast<long>(skip), vertices_.end()},
                    {edges_.begin() + static_cast<long>(skip), edges_.end()});
  }

  bool PathWord::has_prefix(PathWord const& p) const {
    if (p.is_vertex()) {
      return p.source() == source();
    }
    return p.length() <= length() && std::equal(p.edges_.begin(), p.edges_.end(), edges_.begin());
  }

  bool PathWord::has_suffix(PathWord const& p) const {
    if (p.is_vertex()) {
      return p.range() == range();
    }
    return p.length() <= length()
           && std::equal(p.edges_.rbegin(), p.edges_.rend(), edges_.rbegin());
  }

  std::strong_ordering operator<=>(PathWord const& a, PathWord const& b) {
    if (a.is_vertex() != b.is_vertex()) {
      return a.is_vertex() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.is_vertex()) {
      return a.source() <=> b.source();
    }
    if (auto c = a.length() <=> b.length(); c != 0) {
      return c;
    }
    return a.edges_ <=> b.edges_;
  }

  std::optional<PathWord> concat(PathWord const& w1, PathWord const& w2) {
    if (w1.range() != w2.source()) {
      return std::nullopt;
    }
    if (w1.is_vertex()) {
      return w2;
    }
    if (w2.is_vertex()) {
      return w1;
    }
    std::vector<VertexId> vertices(w1.vertices_);
    vertices.insert(vertices.end(), w2.vertices_.begin() + 1, w2.vertices_.end());
    std::vector<EdgeId> edges(w1.edges_);
    edges.insert(edges.end(), w2.edges_.begin(), w2.edges_.end());
    return PathWord(std::move(vertices), std::move(edges));
  }

  std::vector<PathWord> enumerate_paths(Graph const& g, std::size_t max_len) {
    std::vector<PathWord> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      out.push_back(PathWord::vertex(v));
    }
    std::vector<PathWord> frontier;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      frontier.push_back(PathWord::path(g, {e}));
    }
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
      // Extending in EdgeId order keeps each layer lexicographically sorted.
      std::vector<PathWord> next;
      for (auto const& w : frontier) {
        out.push_back(w);
        if (len == max_len) {
          continue;
        }
        for (EdgeId e : g.out_edges(w.range())) {
          next.push_back(*concat(w, PathWord::path(g, {e})));
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  PathWord primitive_root(PathWord const& w) {
    if (!w.is_loop()) {
      throw DomainError("primitive_root: word is not a loop");
    }
    auto const edges = w.edges();
    std::size_t const n = edges.size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) {
        periodic = edges[i] == edges[i - p];
      }
      if (periodic) {
        return w.prefix(p);
      }
    }
    return w;
  }

  PathWord power(PathWord const& p, std::size_t k) {
    if (!p.is_loop() || k == 0) {
      throw DomainError("power: needs a loop and a positive exponent");
    }
    PathWord out = p;
    for (std::size_t i = 1; i < k; ++i) {
      out = *concat(out, p);
    }
    return out;
  }

  PathWord diagram(PathWord const& w) {
    return w.is_loop() ? primitive_root(w) : w;
  }

  bool diagram_distinct(PathWord const& w1, PathWord const& w2) {
    if (w1.is_vertex() || w2.is_vertex()) {
      throw DomainError("diagram_distinct: vertices have no diagram");
    }
    return diagram(w1) != diagram(w2);
  }

  bool diagram_distinct_sets(std::span<PathWord const> x1, std::span<PathWord const> x2) {
    for (auto const& a : x1) {
      for (auto const& b : x2) {
        if (!diagram_distinct(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::string> to_names(Graph const& g, PathWord const& w) {
    if (w.is_vertex()) {
      return {g.vertex_name(w.source())};
    }
    std::vector<std::string> out;
    for (EdgeId e : w.edges()) {
      out.push_back(g.edge(e).id);
    }
    return out;
  }

  std::string to_string(Graph const& g, PathWord const& w) {
    std::string out;
    for (auto const& name : to_names(g, w)) {
      if (!out.empty()) {
        out += ' ';
      }
      out += name;
    }
    return out;
  }

  PathWord word_from_names(Graph const& g, std::span<std::string const> names) {
    if (names.empty()) {
      throw DomainError("empty word");
    }
    if (names.size() == 1) {
      if (auto v = g.find_vertex(names.front())) {
        return PathWord::vertex(*v);
      }
    }
    std::vector<EdgeId> edges;
    for (auto const& name : names) {
      auto e = g.find_edge(name);
      if (!e) {
        throw DomainError(g.find_vertex(name) ? "vertex '" + name + "' inside a path word"
                                              : "unknown id '" + name + "'");
      }
      edges.push_back(*e);
    }
    return PathWord::path(g, std::move(edges));
  }

}  // namespace gwp
