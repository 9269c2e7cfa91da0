#include <algorithm>

#include "gwp/error.hpp"
#include "gwp/opcalc.hpp"

namespace gwp {

  Monomial adjoint(Monomial const& m) {
    Monomial out;
    out.coefficient = m.coefficient.conj();
    out.letters.reserve(m.letters.size());
    for (auto it = m.letters.rbegin(); it != m.letters.rend(); ++it) {
      out.letters.push_back(it->adjoint());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // NormalForm
  ////////////////////////////////////////////////////////////////////////

  NormalForm NormalForm::pair(PathWord alpha, PathWord beta) {
    if (alpha.range() != beta.range()) {
      throw DomainError("normal form pair needs r(alpha) = r(beta)");
    }
    NormalForm nf(Kind::pair);
    nf.pairs_.reserve(2);
    nf.pairs_.push_back(std::move(alpha));
    nf.pairs_.push_back(std::move(beta));
    return nf;
  }

  bool NormalForm::is_projection() const noexcept {
    return is_pair() && pairs_[0].is_vertex() && pairs_[1].is_vertex();
  }

  NormalForm NormalForm::adjoint() const {
    if (!is_pair()) {
      return *this;
    }
    return pair(beta(), alpha());
  }

  std::vector<Letter> NormalForm::letters() const {
    if (is_zero()) {
      throw DomainError("the zero normal form has no letter sequence");
    }
    if (is_unit()) {
      return {};
    }
    if (is_projection()) {
      return {Letter::creation(alpha())};
    }
    std::vector<Letter> out;
    if (!alpha().is_vertex()) {
      out.push_back(Letter::creation(alpha()));
    }
    if (!beta().is_vertex()) {
      out.push_back(Letter::annihilation(beta()));
    }
    return out;
  }

  std::strong_ordering operator<=>(NormalForm const& a, NormalForm const& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) {
      return c;
    }
    return a.pairs_ <=> b.pairs_;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction
  ////////////////////////////////////////////////////////////////////////

  NormalForm ck_collapse(NormalForm state) {
    while (state.is_pair()) {
      PathWord const& alpha = state.alpha();
      PathWord const& beta  = state.beta();
      if (!beta.is_vertex() && alpha.has_suffix(beta)) {
        // L[a''] L[b] L*[b] = L[a''] L[s(b)] = L[a'']
        PathWord head = alpha.prefix(alpha.length() - beta.length());
        VertexId r    = head.range();
        state         = NormalForm::pair(std::move(head), PathWord::vertex(r));
      } else if (!alpha.is_vertex() && beta.has_suffix(alpha)) {
        PathWord head = beta.prefix(beta.length() - alpha.length());
        VertexId r    = head.range();
        state         = NormalForm::pair(PathWord::vertex(r), std::move(head));
      } else {
        break;
      }
    }
    return state;
  }

  namespace {
    NormalForm multiply_raw(NormalForm const& state, Letter const& letter) {
      PathWord const& gamma = letter.word();
      if (state.is_zero()) {
        return state;
      }
      if (state.is_unit()) {
        if (letter.star()) {
          return NormalForm::pair(PathWord::vertex(gamma.range()), gamma);
        }
        return NormalForm::pair(gamma, PathWord::vertex(gamma.range()));
      }
      PathWord const& alpha = state.alpha();
      PathWord const& beta  = state.beta();
      if (letter.star()) {
        // L[a] L*[b] L*[g] = L[a] L*[g b]
        auto gb = concat(gamma, beta);
        if (!gb) {
          return NormalForm::zero();
        }
        return NormalForm::pair(alpha, std::move(*gb));
      }
      // L*[b] L[g]: prefix cancellation in either direction.
      if (gamma.has_prefix(beta)) {
        PathWord rest = gamma.suffix(gamma.length() - beta.length());
        auto     head = concat(alpha, rest);
        VertexId r    = rest.range();
        return NormalForm::pair(std::move(*head), PathWord::vertex(r));
      }
      if (beta.has_prefix(gamma)) {
        return NormalForm::pair(alpha, beta.suffix(beta.length() - gamma.length()));
      }
      return NormalForm::zero();
    }
  }  // namespace

  NormalForm multiply(NormalForm const& state, Letter const& letter, Mode mode) {
    NormalForm next = multiply_raw(state, letter);
    return mode == Mode::ck ? ck_collapse(std::move(next)) : next;
  }

  NormalForm reduce(std::vector<Letter> const& letters, Mode mode) {
    NormalForm state = NormalForm::unit();
    for (auto const& l : letters) {
      state = multiply(state, l, mode);
      if (state.is_zero()) {
        break;
      }
    }
    return state;
  }

  NormalForm reduce(Monomial const& m, Mode mode) {
    return reduce(m.letters, mode);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice paths
  ////////////////////////////////////////////////////////////////////////

  std::pair<long, long> LatticePath::endpoint() const {
    long x = 0;
    long y = 0;
    for (auto [dx, dy] : steps) {
      x += dx;
      y += dy;
    }
    return {x, y};
  }

  LatticePath lattice_path(Monomial const& m) {
    LatticePath path;
    if (reduce(m, Mode::ck).is_zero()) {
      return path;
    }
    path.empty = false;
    for (auto const& l : m.letters) {
      auto const k = static_cast<long>(l.word().length());
      if (l.is_vertex()) {
        path.steps.emplace_back(0, 1);
      } else if (l.star()) {
        path.steps.emplace_back(-k, -k);
      } else {
        path.steps.emplace_back(k, k);
      }
    }
    return path;
  }

  bool star_axis_property(Monomial const& m) {
    auto path = lattice_path(m);
    return !path.empty && path.endpoint().first == 0;
  }

  std::string to_string(Graph const& g, Letter const& l) {
    std::string out = "L";
    if (l.star()) {
      out += '*';
    }
    return out + "[" + to_string(g, l.word()) + "]";
  }

  std::string to_string(Graph const& g, NormalForm const& nf) {
    switch (nf.kind()) {
      case NormalForm::Kind::zero:
        return "0";
      case NormalForm::Kind::unit:
        return "1";
      case NormalForm::Kind::pair:
        break;
    }
    return "L[" + to_string(g, nf.alpha()) + "]L*[" + to_string(g, nf.beta()) + "]";
  }

}  // namespace gwp
