#pragma once

#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gwp/elements.hpp"
#include "gwp/io.hpp"

namespace gwp::test {

  inline GraphPtr make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
    return std::make_shared<Graph const>(std::move(vertices), edges);
  }

  // v1 -e1-> v2 -e2-> v1
  inline GraphPtr graph_h() {
    return make_graph({"v1", "v2"}, {{"e1", "v1", "v2"}, {"e2", "v2", "v1"}});
  }

  // Three vertices, a self-loop at each, and a chain v1 -> v2 -> v3.
  inline GraphPtr graph_t3() {
    return make_graph({"v1", "v2", "v3"}, {{"a1", "v1", "v1"},
                                           {"a2", "v2", "v2"},
                                           {"a3", "v3", "v3"},
                                           {"e12", "v1", "v2"},
                                           {"e23", "v2", "v3"}});
  }

  // Disjoint self-loops f at u and g at v.
  inline GraphPtr graph_uv() {
    return make_graph({"u", "v"}, {{"f", "u", "u"}, {"g", "v", "v"}});
  }

  inline VertexId vid(GraphPtr const& g, std::string const& name) {
    return *g->find_vertex(name);
  }

  // "e1 e2" -> path word; a single vertex name -> vertex word.
  inline PathWord word(GraphPtr const& g, std::string const& text) {
    std::istringstream       in(text);
    std::vector<std::string> names;
    for (std::string t; in >> t;) {
      names.push_back(t);
    }
    return word_from_names(*g, names);
  }

  inline Letter L(GraphPtr const& g, std::string const& text) { return Letter(word(g, text), false); }
  inline Letter Ls(GraphPtr const& g, std::string const& text) { return Letter(word(g, text), true); }

  inline RandomVariable variable(GraphPtr const& g,
                                 std::vector<std::tuple<std::string, bool, Scalar>> const& terms) {
    RandomVariable a(g);
    for (auto const& [w, star, c] : terms) {
      a.add(word(g, w), star, c);
    }
    return a;
  }

  // L[w] + L*[w]
  inline RandomVariable self_adjoint_word(GraphPtr const& g, std::string const& w) {
    return variable(g, {{w, false, 1}, {w, true, 1}});
  }

  inline std::vector<Letter> generator_letters(GraphPtr const& g) {
    std::vector<Letter> out;
    for (VertexId v = 0; v < g->num_vertices(); ++v) {
      out.emplace_back(PathWord::vertex(v), false);
    }
    for (EdgeId e = 0; e < g->num_edges(); ++e) {
      out.emplace_back(PathWord::path(*g, {e}), false);
      out.emplace_back(PathWord::path(*g, {e}), true);
    }
    return out;
  }

  // Every tuple of `alphabet` of length n, in odometer order.
  template <typename T, typename F>
  void for_each_tuple(std::vector<T> const& alphabet, std::size_t n, F&& f) {
    std::vector<std::size_t> idx(n, 0);
    std::vector<T>           tuple(n, alphabet.front());
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        tuple[i] = alphabet[idx[i]];
      }
      f(tuple);
      std::size_t pos = n;
      while (pos > 0 && ++idx[pos - 1] == alphabet.size()) {
        idx[--pos] = 0;
      }
      if (pos == 0) {
        return;
      }
    }
  }

  // Random variable with up to `max_terms` terms over paths of length <= max_len
  // and small integer or Gaussian-rational coefficients.
  inline RandomVariable random_variable(GraphPtr const& g, std::mt19937& rng, std::size_t max_len,
                                        std::size_t max_terms) {
    auto const words = enumerate_paths(*g, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<std::size_t> count(0, max_terms);
    std::uniform_int_distribution<long>        coeff(-3, 3);
    std::bernoulli_distribution                coin(0.5);
    RandomVariable                             a(g);
    for (std::size_t k = count(rng); k > 0; --k) {
      auto const& w = words[pick(rng)];
      Scalar      c(Rational(coeff(rng), 2), Rational(coeff(rng)));
      a.add(w, coin(rng), c);
      if (!w.is_vertex() && coin(rng)) {
        a.add(w, true, c.conj());
      }
    }
    return a;
  }

}  // namespace gwp::test
