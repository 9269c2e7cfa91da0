#pragma once

// Vertex compressions L[v0] a L[v0] and diagonal compressions
// P_V(a) = sum_j L[v_j] a L[v_j].
//
// A loop word has exactly one base vertex (its source, equal to its range), so
// the loop sets of distinct vertices never intersect in this representation.

#include <cstddef>
#include <span>
#include <vector>

#include "gwp/elements.hpp"
#include "gwp/freeprob.hpp"

namespace gwp {

  struct CompressedVariable {
    RandomVariable base;
    VertexId       vertex;
    // Support within {v0} and the loops based at v0; coefficients unchanged.
    RandomVariable terms;

    // q L[v0] where q = compressed_expectation(*this).
    DiagonalElement expectation_element() const;
  };

  // Throws DomainError for a vertex outside the graph.
  CompressedVariable compress_vertex(RandomVariable const& a, VertexId v0);

  // The v0-entry of E(x).
  Scalar compressed_expectation(CompressedVariable const& x);

  // Coefficient n (1-based) is the v0-entry of E(a_{v0}^n).
  std::vector<Scalar> compressed_moment_series(RandomVariable const& a, VertexId v0,
                                               std::size_t order);

  // Coefficient n is the v0-entry of the trivial k_n(a_{v0}, ..., a_{v0}).
  // Throws DomainError for order > cumulant_max_order.
  std::vector<Scalar> compressed_r_transform(RandomVariable const& a, VertexId v0,
                                             std::size_t order);

  // Throws DomainError for an empty, repeated or unknown vertex list.
  RandomVariable diagonal_compress(RandomVariable const& a, std::span<VertexId const> vertices);

  // loop_{vi}(G:a) intersected with loop_{vj}(G:a). Throws DomainError when
  // vi == vj.
  std::vector<PathWord> loop_intersection(RandomVariable const& a, VertexId vi, VertexId vj);

  // Loops in FP(G:a) based at v0, and those among them in FP_*(G:a).
  std::vector<PathWord> loops_at(RandomVariable const& a, VertexId v0);
  std::vector<PathWord> star_loops_at(RandomVariable const& a, VertexId v0);

  MixedCheck compressed_freeness_check(RandomVariable const& a, RandomVariable const& b,
                                       VertexId v0, std::size_t max_order);

}  // namespace gwp
