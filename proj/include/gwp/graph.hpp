#pragma once

// Directed multigraphs and their free semigroupoid: vertices act as units,
// finite paths are admissible edge sequences.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace gwp {

  using VertexId = std::uint32_t;
  using EdgeId   = std::uint32_t;

  struct EdgeSpec {
    std::string id;
    std::string src;
    std::string dst;
  };

  // Immutable after construction. Edge ids are renumbered so that EdgeId order
  // coincides with lexicographic order of the edge names; vertices keep their
  // input order.
  class Graph {
   public:
    struct Edge {
      std::string id;
      VertexId    src;
      VertexId    dst;
    };

    // Throws ParseError on an empty vertex set, duplicate ids (vertex and edge
    // ids share one namespace) or a dangling edge endpoint.
    Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> const& edges);

    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    std::string const& vertex_name(VertexId v) const { return vertices_.at(v); }
    Edge const&        edge(EdgeId e) const { return edges_.at(e); }

    std::optional<VertexId> find_vertex(std::string_view name) const;
    std::optional<EdgeId>   find_edge(std::string_view name) const;

    // Out-edges of v in EdgeId order.
    std::span<EdgeId const> out_edges(VertexId v) const { return out_[v]; }

    friend bool operator==(Graph const& a, Graph const& b) {
      return a.vertices_ == b.vertices_ && a.edge_tuples() == b.edge_tuples();
    }

   private:
    std::vector<std::tuple<std::string, VertexId, VertexId>> edge_tuples() const;

    std::vector<std::string>                     vertices_;
    std::vector<Edge>                            edges_;
    std::vector<std::vector<EdgeId>>             out_;
    std::unordered_map<std::string, VertexId>    vertex_index_;
    std::unordered_map<std::string, EdgeId>      edge_index_;
  };

  // An element of the free semigroupoid: either a vertex or a nonempty
  // admissible edge sequence. Carries its visited vertex sequence so that
  // concatenation and splitting need no graph lookup.
  class PathWord {
   public:
    static PathWord vertex(VertexId v) { return PathWord({v}, {}); }

    // Throws DomainError if the sequence is empty or not admissible.
    static PathWord path(Graph const& g, std::vector<EdgeId> edges);

    VertexId source() const noexcept { return vertices_.front(); }
    VertexId range() const noexcept { return vertices_.back(); }
    std::size_t length() const noexcept { return edges_.size(); }
    bool is_vertex() const noexcept { return edges_.empty(); }
    bool is_loop() const noexcept { return !edges_.empty() && source() == range(); }
    std::span<EdgeId const> edges() const noexcept { return edges_; }

    // First `n` edges; the source vertex when n == 0.
    PathWord prefix(std::size_t n) const;
    // Last `n` edges; the range vertex when n == 0.
    PathWord suffix(std::size_t n) const;

    // Vertex words are prefixes (suffixes) of exactly the words with that
    // source (range).
    bool has_prefix(PathWord const& p) const;
    bool has_suffix(PathWord const& p) const;

    // Vertices first (by id), then by length, then lexicographically by edge.
    friend std::strong_ordering operator<=>(PathWord const& a, PathWord const& b);
    friend bool operator==(PathWord const& a, PathWord const& b) = default;

   private:
    PathWord(std::vector<VertexId> vertices, std::vector<EdgeId> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

    friend std::optional<PathWord> concat(PathWord const&, PathWord const&);

    // vertices_.size() == edges_.size() + 1: the visited vertex sequence.
    std::vector<VertexId> vertices_;
    std::vector<EdgeId>   edges_;
  };

  // w1 w2 when r(w1) = s(w2), with vertices acting as units; nullopt otherwise.
  std::optional<PathWord> concat(PathWord const& w1, PathWord const& w2);

  // All words of length <= max_len: vertices first, then by (length,
  // lexicographic edge-id order).
  std::vector<PathWord> enumerate_paths(Graph const& g, std::size_t max_len);

  // The basic loop p with w = p^k. Throws DomainError for non-loops.
  PathWord primitive_root(PathWord const& w);

  // p^k for a loop p and k >= 1.
  PathWord power(PathWord const& p, std::size_t k);

  // Primitive root for loops, the word itself otherwise.
  PathWord diagram(PathWord const& w);

  // Throws DomainError if either word is a vertex.
  bool diagram_distinct(PathWord const& w1, PathWord const& w2);
  bool diagram_distinct_sets(std::span<PathWord const> x1, std::span<PathWord const> x2);

  // "e1 e2" for paths, the vertex name for vertices.
  std::string to_string(Graph const& g, PathWord const& w);
  std::vector<std::string> to_names(Graph const& g, PathWord const& w);

  // Resolves a list of names: a single vertex name, or one or more edge names
  // forming an admissible path. Throws DomainError on unknown names or an
  // inadmissible sequence.
  PathWord word_from_names(Graph const& g, std::span<std::string const> names);

}  // namespace gwp
