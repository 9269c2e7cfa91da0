#include "gwp/elements.hpp"

#include <algorithm>

#include "gwp/error.hpp"

namespace gwp {

  void require_same_graph(GraphPtr const& a, GraphPtr const& b) {
    if (a == b) {
      return;
    }
    if (!a || !b || !(*a == *b)) {
      throw DomainError("operands live on different graphs");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // DiagonalElement
  ////////////////////////////////////////////////////////////////////////

  DiagonalElement DiagonalElement::unit(Graph const& g) {
    DiagonalElement d;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      d.entries_.emplace(v, Scalar(1));
    }
    return d;
  }

  DiagonalElement DiagonalElement::projection(VertexId v, Scalar q) {
    DiagonalElement d;
    d.add(v, q);
    return d;
  }

  Scalar DiagonalElement::at(VertexId v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? Scalar() : it->second;
  }

  void DiagonalElement::add(VertexId v, Scalar const& q) {
    if (q.is_zero()) {
      return;
    }
    auto [it, inserted] = entries_.emplace(v, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) {
        entries_.erase(it);
      }
    }
  }

  DiagonalElement& DiagonalElement::operator+=(DiagonalElement const& o) {
    for (auto const& [v, q] : o.entries_) {
      add(v, q);
    }
    return *this;
  }

  DiagonalElement& DiagonalElement::operator*=(Scalar const& s) {
    if (s.is_zero()) {
      entries_.clear();
      return *this;
    }
    for (auto& [v, q] : entries_) {
      q *= s;
    }
    return *this;
  }

  DiagonalElement operator*(DiagonalElement const& a, DiagonalElement const& b) {
    DiagonalElement out;
    for (auto const& [v, q] : a.entries_) {
      auto it = b.entries_.find(v);
      if (it != b.entries_.end()) {
        out.add(v, q * it->second);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GeneralElement
  ////////////////////////////////////////////////////////////////////////

  GeneralElement GeneralElement::unit(GraphPtr graph) {
    GeneralElement x(std::move(graph));
    x.add(NormalForm::unit(), 1);
    return x;
  }

  GeneralElement GeneralElement::from(GraphPtr graph, DiagonalElement const& d) {
    GeneralElement x(std::move(graph));
    for (auto const& [v, q] : d.entries()) {
      x.add(NormalForm::projection(v), q);
    }
    return x;
  }

  GeneralElement GeneralElement::from(GraphPtr graph, NormalForm const& nf, Scalar const& coeff) {
    GeneralElement x(std::move(graph));
    x.add(nf, coeff);
    return x;
  }

  void GeneralElement::add(NormalForm const& nf, Scalar const& coeff) {
    if (nf.is_zero() || coeff.is_zero()) {
      return;
    }
    if (nf.is_unit()) {
      for (VertexId v = 0; v < graph_->num_vertices(); ++v) {
        add(NormalForm::projection(v), coeff);
      }
      return;
    }
    auto [it, inserted] = terms_.emplace(nf, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  GeneralElement GeneralElement::adjoint() const {
    GeneralElement out(graph_);
    for (auto const& [nf, c] : terms_) {
      out.add(nf.adjoint(), c.conj());
    }
    return out;
  }

  GeneralElement& GeneralElement::operator+=(GeneralElement const& o) {
    require_same_graph(graph_, o.graph_);
    for (auto const& [nf, c] : o.terms_) {
      add(nf, c);
    }
    return *this;
  }

  GeneralElement& GeneralElement::operator*=(Scalar const& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [nf, c] : terms_) {
      c *= s;
    }
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // RandomVariable
  ////////////////////////////////////////////////////////////////////////

  void RandomVariable::add(PathWord const& word, bool star, Scalar const& coeff) {
    if (coeff.is_zero()) {
      return;
    }
    Letter key(word, star);
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  Scalar RandomVariable::coefficient(PathWord const& word, bool star) const {
    auto it = terms_.find(Letter(word, star));
    return it == terms_.end() ? Scalar() : it->second;
  }

  std::vector<PathWord> RandomVariable::support() const {
    std::vector<PathWord> out;
    for (auto const& [l, c] : terms_) {
      if (out.empty() || out.back() != l.word()) {
        out.push_back(l.word());
      }
    }
    return out;
  }

  std::vector<VertexId> RandomVariable::vertex_support() const {
    std::vector<VertexId> out;
    for (auto const& [l, c] : terms_) {
      if (l.is_vertex()) {
        out.push_back(l.word().source());
      }
    }
    return out;
  }

  std::vector<PathWord> RandomVariable::fp_support() const {
    std::vector<PathWord> out;
    for (auto const& w : support()) {
      if (!w.is_vertex()) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<PathWord> RandomVariable::fp_star_support() const {
    std::vector<PathWord> out;
    for (auto const& w : fp_support()) {
      if (terms_.contains(Letter(w, false)) && terms_.contains(Letter(w, true))) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::vector<PathWord> RandomVariable::fp_nonstar_support() const {
    std::vector<PathWord> out;
    for (auto const& w : fp_support()) {
      if (!(terms_.contains(Letter(w, false)) && terms_.contains(Letter(w, true)))) {
        out.push_back(w);
      }
    }
    return out;
  }

  template <typename Pred>
  RandomVariable RandomVariable::filtered(Pred&& keep) const {
    RandomVariable out(graph_);
    for (auto const& [l, c] : terms_) {
      if (keep(l)) {
        out.terms_.emplace(l, c);
      }
    }
    return out;
  }

  RandomVariable RandomVariable::diagonal_part() const {
    return filtered([](Letter const& l) { return l.is_vertex(); });
  }

  RandomVariable RandomVariable::star_part() const {
    auto star = fp_star_support();
    return filtered([&](Letter const& l) {
      return std::binary_search(star.begin(), star.end(), l.word());
    });
  }

  RandomVariable RandomVariable::nonstar_part() const {
    auto star = fp_star_support();
    return filtered([&](Letter const& l) {
      return !l.is_vertex() && !std::binary_search(star.begin(), star.end(), l.word());
    });
  }

  RandomVariable RandomVariable::adjoint() const {
    RandomVariable out(graph_);
    for (auto const& [l, c] : terms_) {
      out.add(l.word(), !l.star(), c.conj());
    }
    return out;
  }

  GeneralElement RandomVariable::to_element() const {
    GeneralElement x(graph_);
    for (auto const& [l, c] : terms_) {
      x.add(reduce({l}, Mode::ck), c);
    }
    return x;
  }

  RandomVariable& RandomVariable::operator+=(RandomVariable const& o) {
    require_same_graph(graph_, o.graph_);
    for (auto const& [l, c] : o.terms_) {
      add(l.word(), l.star(), c);
    }
    return *this;
  }

  RandomVariable& RandomVariable::operator*=(Scalar const& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, c] : terms_) {
      c *= s;
    }
    return *this;
  }

  ////////////////////////////////////////////////////////////////////////
  // Products and expectation
  ////////////////////////////////////////////////////////////////////////

  GeneralElement multiply(GeneralElement const& x, GeneralElement const& y, Mode mode) {
    require_same_graph(x.graph(), y.graph());
    GeneralElement out(x.graph());
    for (auto const& [ny, cy] : y.terms()) {
      auto const letters = ny.letters();
      for (auto const& [nx, cx] : x.terms()) {
        NormalForm state = nx;
        for (auto const& l : letters) {
          state = multiply(state, l, mode);
          if (state.is_zero()) {
            break;
          }
        }
        out.add(state, cx * cy);
      }
    }
    return out;
  }

  GeneralElement multiply(DiagonalElement const& d, GeneralElement const& x) {
    return multiply(GeneralElement::from(x.graph(), d), x);
  }

  GeneralElement multiply(GeneralElement const& x, DiagonalElement const& d) {
    return multiply(x, GeneralElement::from(x.graph(), d));
  }

  DiagonalElement expectation(NormalForm const& nf, Graph const& g) {
    if (nf.is_unit()) {
      return DiagonalElement::unit(g);
    }
    if (nf.is_projection()) {
      return DiagonalElement::projection(nf.alpha().source());
    }
    return {};
  }

  DiagonalElement expectation(GeneralElement const& x) {
    DiagonalElement out;
    for (auto const& [nf, c] : x.terms()) {
      if (nf.is_projection()) {
        out.add(nf.alpha().source(), c);
      }
    }
    return out;
  }

  DiagonalElement expectation(RandomVariable const& a) {
    DiagonalElement out;
    for (auto const& [l, c] : a.terms()) {
      if (l.is_vertex()) {
        out.add(l.word().source(), c);
      }
    }
    return out;
  }

}  // namespace gwp
