#pragma once

// Elements of the graph algebra: diagonal elements, finite sums of reduced
// pairs, and random variables given by their Fourier expansion.

#include <map>
#include <memory>
#include <vector>

#include "gwp/graph.hpp"
#include "gwp/opcalc.hpp"
#include "gwp/scalar.hpp"

namespace gwp {

  using GraphPtr = std::shared_ptr<Graph const>;

  // Throws DomainError unless both pointers refer to equal graphs.
  void require_same_graph(GraphPtr const& a, GraphPtr const& b);

  // sum_v q_v L[v]; zero entries are never stored. Multiplication is
  // entrywise since L[u] L[v] = delta_{u,v} L[v].
  class DiagonalElement {
   public:
    DiagonalElement() = default;

    static DiagonalElement unit(Graph const& g);
    static DiagonalElement projection(VertexId v, Scalar q = 1);

    Scalar at(VertexId v) const;
    void   add(VertexId v, Scalar const& q);

    bool is_zero() const noexcept { return entries_.empty(); }
    std::map<VertexId, Scalar> const& entries() const noexcept { return entries_; }

    DiagonalElement& operator+=(DiagonalElement const& o);
    DiagonalElement& operator*=(Scalar const& s);

    friend DiagonalElement operator+(DiagonalElement a, DiagonalElement const& b) { return a += b; }
    friend DiagonalElement operator*(Scalar const& s, DiagonalElement a) { return a *= s; }
    friend DiagonalElement operator*(DiagonalElement const& a, DiagonalElement const& b);
    friend bool operator==(DiagonalElement const&, DiagonalElement const&) = default;

   private:
    std::map<VertexId, Scalar> entries_;
  };

  // A finite linear combination of nonzero normal-form pairs. The unit is
  // stored as the sum of all vertex projections of the (finite) graph.
  class GeneralElement {
   public:
    explicit GeneralElement(GraphPtr graph) : graph_(std::move(graph)) {}

    static GeneralElement unit(GraphPtr graph);
    static GeneralElement from(GraphPtr graph, DiagonalElement const& d);
    static GeneralElement from(GraphPtr graph, NormalForm const& nf, Scalar const& coeff = 1);

    void add(NormalForm const& nf, Scalar const& coeff);

    GraphPtr const& graph() const noexcept { return graph_; }
    std::map<NormalForm, Scalar> const& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    GeneralElement adjoint() const;

    GeneralElement& operator+=(GeneralElement const& o);
    GeneralElement& operator*=(Scalar const& s);

    friend GeneralElement operator+(GeneralElement a, GeneralElement const& b) { return a += b; }
    friend GeneralElement operator*(Scalar const& s, GeneralElement a) { return a *= s; }
    friend bool operator==(GeneralElement const& a, GeneralElement const& b) {
      return a.terms_ == b.terms_;
    }

   private:
    GraphPtr                     graph_;
    std::map<NormalForm, Scalar> terms_;
  };

  // A random variable a = sum p_w L[w]^{u_w} over a finite support.
  class RandomVariable {
   public:
    explicit RandomVariable(GraphPtr graph) : graph_(std::move(graph)) {}

    // Accumulates coeff into the (word, star) term; star is ignored on vertices.
    void add(PathWord const& word, bool star, Scalar const& coeff);

    GraphPtr const& graph() const noexcept { return graph_; }
    std::map<Letter, Scalar> const& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(PathWord const& word, bool star) const;

    // F+(G:a), in PathWord order.
    std::vector<PathWord> support() const;
    // V(G:a)
    std::vector<VertexId> vertex_support() const;
    // FP(G:a)
    std::vector<PathWord> fp_support() const;
    // FP_*(G:a): finite paths w with both L[w] and L*[w] summands.
    std::vector<PathWord> fp_star_support() const;
    // FP_*^c(G:a)
    std::vector<PathWord> fp_nonstar_support() const;

    // a = a_d + a_(*) + a_(non-*)
    RandomVariable diagonal_part() const;
    RandomVariable star_part() const;
    RandomVariable nonstar_part() const;

    RandomVariable adjoint() const;
    bool is_self_adjoint() const { return *this == adjoint(); }

    GeneralElement to_element() const;

    RandomVariable& operator+=(RandomVariable const& o);
    RandomVariable& operator*=(Scalar const& s);

    friend RandomVariable operator+(RandomVariable a, RandomVariable const& b) { return a += b; }
    friend RandomVariable operator*(Scalar const& s, RandomVariable a) { return a *= s; }
    friend bool operator==(RandomVariable const& a, RandomVariable const& b) {
      return a.terms_ == b.terms_;
    }

   private:
    template <typename Pred>
    RandomVariable filtered(Pred&& keep) const;

    GraphPtr                 graph_;
    std::map<Letter, Scalar> terms_;
  };

  // Bilinear extension of the letter-by-letter reduction.
  GeneralElement multiply(GeneralElement const& x, GeneralElement const& y, Mode mode = Mode::ck);
  GeneralElement multiply(DiagonalElement const& d, GeneralElement const& x);
  GeneralElement multiply(GeneralElement const& x, DiagonalElement const& d);

  // The diagonal part: E(L[v]) = L[v], zero on every other pair.
  DiagonalElement expectation(NormalForm const& nf, Graph const& g);
  DiagonalElement expectation(GeneralElement const& x);
  DiagonalElement expectation(RandomVariable const& a);

}  // namespace gwp
