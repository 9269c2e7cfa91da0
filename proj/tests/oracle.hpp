#pragma once

// Reference implementations used only by the tests. They share no code with
// the engine beyond the graph and scalar types.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gwp/elements.hpp"

namespace gwp::oracle {

  // A generator on single edges: projection P_v, creation S_e, annihilation S_e*.
  struct Atom {
    enum Kind : std::uint8_t { proj, create, destroy } kind;
    std::uint32_t id;
    friend bool operator==(Atom const&, Atom const&) = default;
  };

  // Splits each letter into single-edge atoms: L[e1 e2] = S_e1 S_e2 and
  // L*[e1 e2] = S_e2* S_e1*.
  inline std::vector<Atom> atoms(std::vector<Letter> const& letters) {
    std::vector<Atom> out;
    for (auto const& l : letters) {
      auto const edges = l.word().edges();
      if (edges.empty()) {
        out.push_back({Atom::proj, l.word().source()});
      } else if (!l.star()) {
        for (EdgeId e : edges) {
          out.push_back({Atom::create, e});
        }
      } else {
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
          out.push_back({Atom::destroy, *it});
        }
      }
    }
    return out;
  }

  // Rewrites adjacent pairs to a fixed point using the single-edge relations
  //   S_e* S_e = P_r(e),  S_e* S_f = 0 (e != f),  projection absorption,
  // plus S_e S_e* = P_s(e) when ck is set. Returns nullopt for zero.
  inline std::optional<std::vector<Atom>> rewrite(Graph const& g, std::vector<Atom> w, bool ck) {
    auto src = [&](Atom a) {
      return a.kind == Atom::proj      ? a.id
             : a.kind == Atom::create ? g.edge(a.id).src
                                      : g.edge(a.id).dst;
    };
    auto rng = [&](Atom a) {
      return a.kind == Atom::proj      ? a.id
             : a.kind == Atom::create ? g.edge(a.id).dst
                                      : g.edge(a.id).src;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        Atom const x = w[i];
        Atom const y = w[i + 1];
        // Operators compose left to right as written; x y is defined only if
        // the "range" of x meets the "source" of y.
        if (rng(x) != src(y)) {
          return std::nullopt;
        }
        std::optional<Atom> merged;
        if (x.kind == Atom::proj) {
          merged = y;
        } else if (y.kind == Atom::proj) {
          merged = x;
        } else if (x.kind == Atom::destroy && y.kind == Atom::create) {
          if (x.id != y.id) {
            return std::nullopt;
          }
          merged = Atom{Atom::proj, g.edge(x.id).dst};
        } else if (ck && x.kind == Atom::create && y.kind == Atom::destroy && x.id == y.id) {
          merged = Atom{Atom::proj, g.edge(x.id).src};
        }
        if (merged) {
          w[i] = *merged;
          w.erase(w.begin() + static_cast<long>(i) + 1);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  // Vertex entry of E on a single monomial: nonzero only when the monomial
  // rewrites to a lone projection.
  inline std::optional<VertexId> expectation_vertex(Graph const& g,
                                                    std::vector<Letter> const& letters, bool ck) {
    auto r = rewrite(g, atoms(letters), ck);
    if (r && r->size() == 1 && r->front().kind == Atom::proj) {
      return r->front().id;
    }
    return std::nullopt;
  }

  // E(a_1 a_2 ... a_n) by expanding every variable into its terms.
  inline DiagonalElement brute_moment(std::vector<RandomVariable> const& vars, bool ck = true) {
    Graph const&        g = *vars.front().graph();
    DiagonalElement     out;
    std::vector<Letter> letters;
    auto rec = [&](auto&& self, std::size_t i, Scalar const& c) -> void {
      if (i == vars.size()) {
        if (auto v = expectation_vertex(g, letters, ck)) {
          out.add(*v, c);
        }
        return;
      }
      for (auto const& [l, coeff] : vars[i].terms()) {
        letters.push_back(l);
        self(self, i + 1, c * coeff);
        letters.pop_back();
      }
    };
    rec(rec, 0, Scalar(1));
    return out;
  }

  // Scalar free cumulants from moments m_1..m_N via
  //   m_n = sum_{s=1}^{n} k_s sum_{i_1+...+i_s = n-s} m_{i_1} ... m_{i_s},  m_0 = 1.
  inline std::vector<Scalar> free_cumulants(std::vector<Scalar> const& m) {
    std::size_t const   n_max = m.size();
    std::vector<Scalar> mm(n_max + 1);
    mm[0] = 1;
    for (std::size_t i = 0; i < n_max; ++i) {
      mm[i + 1] = m[i];
    }
    // conv[s][t] = sum over compositions of t into s nonnegative parts of prod m.
    std::vector<std::vector<Scalar>> conv(n_max + 1, std::vector<Scalar>(n_max + 1));
    conv[0][0] = 1;
    for (std::size_t s = 1; s <= n_max; ++s) {
      for (std::size_t t = 0; t <= n_max; ++t) {
        for (std::size_t j = 0; j <= t; ++j) {
          conv[s][t] += conv[s - 1][t - j] * mm[j];
        }
      }
    }
    std::vector<Scalar> k(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      Scalar rest;
      for (std::size_t s = 1; s < n; ++s) {
        rest += k[s] * conv[s][n - s];
      }
      k[n] = mm[n] - rest;
    }
    return {k.begin() + 1, k.end()};
  }

  inline long catalan(std::size_t n) {
    long c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      c = c * 2 * static_cast<long>(2 * i + 1) / static_cast<long>(i + 2);
    }
    return c;
  }

}  // namespace gwp::oracle
