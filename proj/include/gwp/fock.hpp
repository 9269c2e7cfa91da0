#pragma once

// Numerical oracle: creation and annihilation operators as sparse matrices on
// the span of {xi_w : |w| <= L}, a truncation of l^2 of the path space.
//
// Identities are only asserted on interior sub-bases, i.e. on basis vectors
// that cannot leave the truncation under the operators involved.

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "gwp/graph.hpp"
#include "gwp/opcalc.hpp"

namespace gwp::fock {

  using Matrix = Eigen::SparseMatrix<std::complex<double>>;

  inline constexpr double tolerance = 1e-12;

  class TruncatedBasis {
   public:
    TruncatedBasis(Graph const& g, std::size_t max_len);

    Graph const& graph() const noexcept { return *graph_; }
    std::size_t max_len() const noexcept { return max_len_; }
    std::size_t size() const noexcept { return words_.size(); }
    std::vector<PathWord> const& words() const noexcept { return words_; }

    // Index of the word (source vertex, edge list); nullopt outside the
    // truncation.
    std::optional<std::size_t> find(VertexId source, std::vector<EdgeId> const& edges) const;

    // Indices of basis words of length <= max_len - margin.
    std::vector<std::size_t> interior(std::size_t margin) const;

   private:
    Graph const*                                               graph_;
    std::size_t                                                max_len_;
    std::vector<PathWord>                                      words_;
    std::map<std::pair<VertexId, std::vector<EdgeId>>, std::size_t> index_;
  };

  struct OperatorMatrix {
    Matrix matrix;
    // Columns whose image would leave the truncation (set to zero).
    std::vector<std::size_t> truncated_columns;
  };

  // Throws DomainError if the letter's word is longer than the truncation.
  OperatorMatrix represent(Letter const& letter, TruncatedBasis const& basis);

  // Toeplitz normal form: identity, zero, or L[alpha] L*[beta].
  Matrix represent(NormalForm const& nf, TruncatedBasis const& basis);

  // max |(A - B) e_j| over the given columns.
  double max_column_error(Matrix const& a, Matrix const& b, std::vector<std::size_t> const& cols);

  struct RelationCheck {
    std::string              relation;
    std::string              status;  // "pass", "fail", or "fails-as-expected"
    double                   max_error = 0.0;
    std::size_t              instances = 0;
    std::vector<std::string> counterexamples;
  };

  struct OracleReport {
    std::size_t                trunc = 0;
    std::vector<RelationCheck> relations;

    bool toeplitz_relations_hold() const;
  };

  // Throws DomainError for trunc < 2.
  OracleReport verify_relations(Graph const& g, std::size_t trunc);

  // Compares the matrix product of the letters with the represented Toeplitz
  // normal form on the interior sub-basis. Throws DomainError when the total
  // creation length exceeds the truncation.
  bool cross_check_reduction(Monomial const& m, Graph const& g, std::size_t trunc);

}  // namespace gwp::fock
