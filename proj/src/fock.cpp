#include "gwp/fock.hpp"

#include <algorithm>
#include <cmath>

#include "gwp/error.hpp"

namespace gwp::fock {

  namespace {
    using Triplet = Eigen::Triplet<std::complex<double>>;

    std::vector<EdgeId> edge_list(PathWord const& w) {
      return {w.edges().begin(), w.edges().end()};
    }

    Matrix from_triplets(std::size_t n, std::vector<Triplet> const& t) {
      Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      m.setFromTriplets(t.begin(), t.end());
      return m;
    }

    Matrix identity(std::size_t n) {
      Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      m.setIdentity();
      return m;
    }

    std::string vertex_xi(Graph const& g, VertexId v) {
      return "xi_" + g.vertex_name(v);
    }
  }  // namespace

  TruncatedBasis::TruncatedBasis(Graph const& g, std::size_t max_len)
      : graph_(&g), max_len_(max_len), words_(enumerate_paths(g, max_len)) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      index_.emplace(std::make_pair(words_[i].source(), edge_list(words_[i])), i);
    }
  }

  std::optional<std::size_t> TruncatedBasis::find(VertexId source,
                                                  std::vector<EdgeId> const& edges) const {
    auto it = index_.find({source, edges});
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::size_t> TruncatedBasis::interior(std::size_t margin) const {
    std::vector<std::size_t> out;
    if (margin > max_len_) {
      return out;
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i].length() <= max_len_ - margin) {
        out.push_back(i);
      }
    }
    return out;
  }

  OperatorMatrix represent(Letter const& letter, TruncatedBasis const& basis) {
    PathWord const& w = letter.word();
    if (w.length() > basis.max_len()) {
      throw DomainError("word longer than the truncation");
    }
    Graph const&         g = basis.graph();
    std::vector<Triplet> t;
    OperatorMatrix       out;
    auto const           we = edge_list(w);

    for (std::size_t col = 0; col < basis.size(); ++col) {
      PathWord const& h  = basis.words()[col];
      auto const      he = edge_list(h);
      if (letter.is_vertex()) {
        if (h.source() == w.source()) {
          t.emplace_back(col, col, 1.0);
        }
      } else if (!letter.star()) {
        // xi_h -> xi_{wh} when s(h) = r(w)
        VertexId const r = g.edge(we.back()).dst;
        if (h.source() != r) {
          continue;
        }
        std::vector<EdgeId> joined = we;
        joined.insert(joined.end(), he.begin(), he.end());
        if (auto row = basis.find(g.edge(we.front()).src, joined)) {
          t.emplace_back(*row, col, 1.0);
        } else {
          out.truncated_columns.push_back(col);
        }
      } else {
        // xi_{wh} -> xi_h
        if (he.size() < we.size() || !std::equal(we.begin(), we.end(), he.begin())) {
          continue;
        }
        std::vector<EdgeId> rest(he.begin() + static_cast<long>(we.size()), he.end());
        VertexId const      s = rest.empty() ? g.edge(we.back()).dst : g.edge(rest.front()).src;
        t.emplace_back(*basis.find(s, rest), col, 1.0);
      }
    }
    out.matrix = from_triplets(basis.size(), t);
    return out;
  }

  Matrix represent(NormalForm const& nf, TruncatedBasis const& basis) {
    auto const n = basis.size();
    if (nf.is_zero()) {
      return Matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    }
    if (nf.is_unit()) {
      return identity(n);
    }
    if (nf.beta().length() > basis.max_len()) {
      // L*[beta] annihilates every basis vector shorter than beta.
      return Matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    }
    Matrix left  = represent(Letter::creation(nf.alpha()), basis).matrix;
    Matrix right = represent(Letter::annihilation(nf.beta()), basis).matrix;
    return Matrix(left * right);
  }

  double max_column_error(Matrix const& a, Matrix const& b, std::vector<std::size_t> const& cols) {
    Matrix const diff  = a - b;
    double       worst = 0.0;
    for (std::size_t c : cols) {
      for (Matrix::InnerIterator it(diff, static_cast<Eigen::Index>(c)); it; ++it) {
        worst = std::max(worst, std::abs(it.value()));
      }
    }
    return worst;
  }

  bool OracleReport::toeplitz_relations_hold() const {
    return std::all_of(relations.begin(), relations.end(), [](RelationCheck const& r) {
      return r.status == "pass" || r.status == "fails-as-expected";
    });
  }

  OracleReport verify_relations(Graph const& g, std::size_t trunc) {
    if (trunc < 2) {
      throw DomainError("oracle truncation must be at least 2");
    }
    TruncatedBasis const basis(g, trunc);
    auto const           n   = basis.size();
    auto const           all = basis.interior(0);

    RelationCheck isometry{"adjoint-creation: L*[w]L[w] = L[r(w)]", "pass", 0.0, 0, {}};
    RelationCheck partial{"partial-isometry: L[w]L*[w]L[w] = L[w]", "pass", 0.0, 0, {}};
    RelationCheck projection{"projection: L[v]^2 = L[v] = L[v]^*", "pass", 0.0, 0, {}};
    RelationCheck resolution{"identity-resolution: sum_v L[v] = 1", "pass", 0.0, 0, {}};
    RelationCheck ck{"ck-collapse: L[w]L*[w] = L[s(w)]", "pass", 0.0, 0, {}};

    Matrix vertex_sum(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      Matrix const p = represent(Letter::creation(PathWord::vertex(v)), basis).matrix;
      Matrix const pp = p * p;
      Matrix const pa = p.adjoint();
      projection.max_error =
          std::max({projection.max_error, max_column_error(pp, p, all), max_column_error(pa, p, all)});
      ++projection.instances;
      vertex_sum += p;
    }
    resolution.max_error = max_column_error(vertex_sum, identity(n), all);
    resolution.instances = 1;

    for (auto const& w : enumerate_paths(g, trunc / 2)) {
      if (w.is_vertex()) {
        continue;
      }
      auto const interior = basis.interior(w.length());
      Matrix const create  = represent(Letter::creation(w), basis).matrix;
      Matrix const destroy = represent(Letter::annihilation(w), basis).matrix;
      Matrix const range   = represent(Letter::creation(PathWord::vertex(w.range())), basis).matrix;
      Matrix const source  = represent(Letter::creation(PathWord::vertex(w.source())), basis).matrix;

      Matrix const dc = destroy * create;
      isometry.max_error = std::max(isometry.max_error, max_column_error(dc, range, interior));
      ++isometry.instances;

      Matrix const cdc = create * dc;
      partial.max_error = std::max(partial.max_error, max_column_error(cdc, create, interior));
      ++partial.instances;

      Matrix const cd  = create * destroy;
      double const err = max_column_error(cd, source, interior);
      ck.max_error     = std::max(ck.max_error, err);
      ++ck.instances;
      if (err > tolerance && ck.counterexamples.empty()) {
        // <xi_{s(w)}, L[w] L*[w] xi_{s(w)}> = 0 while the CK value is 1.
        auto const col = *basis.find(w.source(), {});
        std::complex<double> const lhs = cd.coeff(static_cast<Eigen::Index>(col),
                                                  static_cast<Eigen::Index>(col));
        ck.counterexamples.push_back("<" + vertex_xi(g, w.source()) + ", L[" + to_string(g, w)
                                     + "]L*[" + to_string(g, w) + "] "
                                     + vertex_xi(g, w.source()) + "> = "
                                     + std::to_string(static_cast<int>(lhs.real()))
                                     + ", CK value 1");
      }
    }

    for (RelationCheck* r : {&isometry, &partial, &projection, &resolution}) {
      r->status = r->max_error <= tolerance ? "pass" : "fail";
    }
    ck.status = ck.counterexamples.empty() ? "pass" : "fails-as-expected";

    OracleReport report;
    report.trunc     = trunc;
    report.relations = {isometry, partial, projection, resolution, ck};
    return report;
  }

  bool cross_check_reduction(Monomial const& m, Graph const& g, std::size_t trunc) {
    std::size_t margin = 0;
    for (auto const& l : m.letters) {
      if (!l.star()) {
        margin += l.word().length();
      }
      if (l.word().length() > trunc) {
        throw DomainError("letter longer than the truncation");
      }
    }
    if (margin > trunc) {
      throw DomainError("total creation length exceeds the truncation");
    }
    TruncatedBasis const basis(g, trunc);
    Matrix               product = identity(basis.size());
    for (auto const& l : m.letters) {
      product = product * represent(l, basis).matrix;
    }
    Matrix const expected = represent(reduce(m, Mode::toeplitz), basis);
    return max_column_error(product, expected, basis.interior(margin)) <= tolerance;
  }

}  // namespace gwp::fock
