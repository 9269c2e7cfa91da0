#include "gwp/compress.hpp"

#include <algorithm>
#include <set>

#include "gwp/error.hpp"

namespace gwp {

  namespace {
    void check_vertex(RandomVariable const& a, VertexId v) {
      if (v >= a.graph()->num_vertices()) {
        throw DomainError("unknown vertex index " + std::to_string(v));
      }
    }

    bool based_at(PathWord const& w, VertexId v0) {
      return w.source() == v0 && w.range() == v0;
    }
  }  // namespace

  DiagonalElement CompressedVariable::expectation_element() const {
    return DiagonalElement::projection(vertex, compressed_expectation(*this));
  }

  CompressedVariable compress_vertex(RandomVariable const& a, VertexId v0) {
    check_vertex(a, v0);
    RandomVariable terms(a.graph());
    for (auto const& [l, c] : a.terms()) {
      // L[v0] L[w]^u L[v0] survives only for w = v0 w v0.
      if (based_at(l.word(), v0)) {
        terms.add(l.word(), l.star(), c);
      }
    }
    return {a, v0, std::move(terms)};
  }

  Scalar compressed_expectation(CompressedVariable const& x) {
    return expectation(x.terms).at(x.vertex);
  }

  std::vector<Scalar> compressed_moment_series(RandomVariable const& a, VertexId v0,
                                               std::size_t order) {
    if (order == 0) {
      throw DomainError("series order must be at least 1");
    }
    auto const x = compress_vertex(a, v0).terms.to_element();
    std::vector<Scalar> out;
    GeneralElement      power = x;
    for (std::size_t n = 1; n <= order; ++n) {
      if (n > 1) {
        power = multiply(power, x);
      }
      out.push_back(expectation(power).at(v0));
    }
    return out;
  }

  std::vector<Scalar> compressed_r_transform(RandomVariable const& a, VertexId v0,
                                             std::size_t order) {
    if (order == 0) {
      throw DomainError("series order must be at least 1");
    }
    if (order > cumulant_max_order) {
      throw DomainError("order " + std::to_string(order) + " exceeds the bound "
                        + std::to_string(cumulant_max_order));
    }
    auto const x = compress_vertex(a, v0).terms.to_element();
    std::vector<Scalar> out;
    for (std::size_t n = 1; n <= order; ++n) {
      std::vector<GeneralElement> items(n, x);
      out.push_back(cumulant(items).value.at(v0));
    }
    return out;
  }

  RandomVariable diagonal_compress(RandomVariable const& a, std::span<VertexId const> vertices) {
    if (vertices.empty()) {
      throw DomainError("diagonal compression needs at least one vertex");
    }
    std::set<VertexId> seen;
    RandomVariable     out(a.graph());
    for (VertexId v : vertices) {
      check_vertex(a, v);
      if (!seen.insert(v).second) {
        throw DomainError("repeated vertex in diagonal compression");
      }
      out += compress_vertex(a, v).terms;
    }
    return out;
  }

  std::vector<PathWord> loops_at(RandomVariable const& a, VertexId v0) {
    std::vector<PathWord> out;
    for (auto const& w : a.fp_support()) {
      if (based_at(w, v0)) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<PathWord> star_loops_at(RandomVariable const& a, VertexId v0) {
    std::vector<PathWord> out;
    for (auto const& w : a.fp_star_support()) {
      if (based_at(w, v0)) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<PathWord> loop_intersection(RandomVariable const& a, VertexId vi, VertexId vj) {
    check_vertex(a, vi);
    check_vertex(a, vj);
    if (vi == vj) {
      throw DomainError("loop_intersection needs distinct vertices");
    }
    auto const li = loops_at(a, vi);
    auto const lj = loops_at(a, vj);
    std::vector<PathWord> out;
    std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(), std::back_inserter(out));
    return out;
  }

  MixedCheck compressed_freeness_check(RandomVariable const& a, RandomVariable const& b,
                                       VertexId v0, std::size_t max_order) {
    return mixed_cumulants_vanish(compress_vertex(a, v0).terms, compress_vertex(b, v0).terms,
                                  max_order);
  }

}  // namespace gwp
