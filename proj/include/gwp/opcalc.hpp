#pragma once

// Words in the generators L[w], L*[w] and their reduction to normal form.
//
// A nonzero normal form is a pair (alpha, beta) standing for the operator
// L[alpha] L*[beta] with r(alpha) = r(beta); (v, v) is the projection L[v].
// Two rewrite systems are provided:
//
//   Toeplitz  only the relations that hold on l^2 of the path space:
//             L*[w] L[w] = L[r(w)], prefix cancellation, projections.
//   CK        additionally L[w] L*[w] = L[s(w)], applied eagerly after every
//             multiplication.
//
// Expectations, moments and cumulants always use CK.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gwp/graph.hpp"
#include "gwp/scalar.hpp"

namespace gwp {

  enum class Mode { toeplitz, ck };

  // L[word] when star is false, L*[word] otherwise. Vertex letters are stored
  // with star == false since L*[v] = L[v].
  class Letter {
   public:
    Letter(PathWord word, bool star) : word_(std::move(word)), star_(star && !word_.is_vertex()) {}

    static Letter creation(PathWord w) { return Letter(std::move(w), false); }
    static Letter annihilation(PathWord w) { return Letter(std::move(w), true); }

    PathWord const& word() const noexcept { return word_; }
    bool star() const noexcept { return star_; }
    bool is_vertex() const noexcept { return word_.is_vertex(); }

    Letter adjoint() const { return Letter(word_, !star_); }

    friend auto operator<=>(Letter const&, Letter const&) = default;
    friend bool operator==(Letter const&, Letter const&) = default;

   private:
    PathWord word_;
    bool     star_;
  };

  // An empty letter sequence is the unit.
  struct Monomial {
    std::vector<Letter> letters;
    Scalar              coefficient{1};

    friend bool operator==(Monomial const&, Monomial const&) = default;
  };

  Monomial adjoint(Monomial const& m);

  class NormalForm {
   public:
    enum class Kind : std::uint8_t { zero, unit, pair };

    static NormalForm zero() { return NormalForm(Kind::zero); }
    static NormalForm unit() { return NormalForm(Kind::unit); }
    // Requires r(alpha) == r(beta); throws DomainError otherwise.
    static NormalForm pair(PathWord alpha, PathWord beta);
    static NormalForm projection(VertexId v) {
      return pair(PathWord::vertex(v), PathWord::vertex(v));
    }

    Kind kind() const noexcept { return kind_; }
    bool is_zero() const noexcept { return kind_ == Kind::zero; }
    bool is_unit() const noexcept { return kind_ == Kind::unit; }
    bool is_pair() const noexcept { return kind_ == Kind::pair; }
    // True for pairs (v, v).
    bool is_projection() const noexcept;

    // Only meaningful for pairs.
    PathWord const& alpha() const { return pairs_.at(0); }
    PathWord const& beta() const { return pairs_.at(1); }

    // (alpha, beta) -> (beta, alpha).
    NormalForm adjoint() const;

    // A shortest letter sequence multiplying out to this normal form; empty
    // for the unit. Throws DomainError for zero.
    std::vector<Letter> letters() const;

    friend std::strong_ordering operator<=>(NormalForm const& a, NormalForm const& b);
    friend bool operator==(NormalForm const&, NormalForm const&) = default;

   private:
    explicit NormalForm(Kind k) : kind_(k) {}

    Kind                  kind_;
    std::vector<PathWord> pairs_;
  };

  // One step of left-to-right evaluation: state * letter.
  NormalForm multiply(NormalForm const& state, Letter const& letter, Mode mode);

  // Exhaustive application of L[w] L*[w] -> L[s(w)] in both suffix shapes.
  NormalForm ck_collapse(NormalForm state);

  // Coefficient is ignored; only the operator word is reduced.
  NormalForm reduce(Monomial const& m, Mode mode);
  NormalForm reduce(std::vector<Letter> const& letters, Mode mode);

  struct LatticePath {
    bool empty = true;
    std::vector<std::pair<long, long>> steps;

    std::pair<long, long> endpoint() const;
  };

  // Steps: vertex (0, +1), creation (+|w|, +|w|), annihilation (-|w|, -|w|).
  // Empty exactly when the CK reduction of m is zero.
  LatticePath lattice_path(Monomial const& m);

  bool star_axis_property(Monomial const& m);

  std::string to_string(Graph const& g, Letter const& l);
  std::string to_string(Graph const& g, NormalForm const& nf);

}  // namespace gwp
