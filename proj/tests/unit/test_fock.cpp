#include <gtest/gtest.h>

#include <random>

#include "gwp/error.hpp"
#include "gwp/fock.hpp"
#include "support.hpp"

using namespace gwp;
using namespace gwp::fock;
using test::L;
using test::Ls;

TEST(Fock, BasisIndexesEveryWord) {
  auto           g = test::graph_h();
  TruncatedBasis b(*g, 4);
  EXPECT_EQ(b.size(), 10u);
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto const& w = b.words()[i];
    std::vector<EdgeId> edges(w.edges().begin(), w.edges().end());
    EXPECT_EQ(b.find(w.source(), edges), i);
  }
  EXPECT_EQ(b.interior(4).size(), 2u);
  EXPECT_TRUE(b.interior(5).empty());
}

TEST(Fock, ProjectionSelectsSource) {
  auto           g = test::graph_h();
  TruncatedBasis b(*g, 2);
  auto const     v1 = test::vid(g, "v1");
  Matrix const   p  = represent(L(g, "v1"), b).matrix;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      double const expected = (i == j && b.words()[i].source() == v1) ? 1.0 : 0.0;
      EXPECT_EQ(p.coeff(static_cast<long>(i), static_cast<long>(j)).real(), expected);
    }
  }
}

TEST(Fock, CreationIsAdjointOfAnnihilation) {
  auto           g = test::graph_t3();
  TruncatedBasis b(*g, 3);
  for (auto const& w : enumerate_paths(*g, 2)) {
    if (w.is_vertex()) {
      continue;
    }
    Matrix const c = represent(Letter(w, false), b).matrix;
    Matrix const a = represent(Letter(w, true), b).matrix;
    Matrix const diff = Matrix(c.adjoint()) - a;
    EXPECT_EQ(diff.norm(), 0.0);
  }
}

TEST(Fock, TruncatedColumnsAreReported) {
  auto           g = test::graph_h();
  TruncatedBasis b(*g, 2);
  auto const     m = represent(L(g, "e1"), b);
  // e1 applied to xi_{e2} or xi_{e2 e1} would need lengths 2 and 3.
  EXPECT_EQ(m.truncated_columns.size(), 1u);
  TruncatedBasis tiny(*g, 0);
  EXPECT_THROW(represent(L(g, "e1"), tiny), DomainError);
}

TEST(Fock, RelationsOnH) {
  auto const report = verify_relations(*test::graph_h(), 8);
  EXPECT_EQ(report.trunc, 8u);
  ASSERT_EQ(report.relations.size(), 5u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(report.relations[i].status, "pass") << report.relations[i].relation;
    EXPECT_LE(report.relations[i].max_error, tolerance);
    EXPECT_GT(report.relations[i].instances, 0u);
  }
  auto const& ck = report.relations[4];
  EXPECT_EQ(ck.status, "fails-as-expected");
  ASSERT_FALSE(ck.counterexamples.empty());
  EXPECT_EQ(ck.counterexamples.front(), "<xi_v1, L[e1]L*[e1] xi_v1> = 0, CK value 1");
  EXPECT_TRUE(report.toeplitz_relations_hold());
  EXPECT_THROW(verify_relations(*test::graph_h(), 1), DomainError);
}

TEST(Fock, RelationsOnT3) {
  auto const report = verify_relations(*test::graph_t3(), 6);
  EXPECT_TRUE(report.toeplitz_relations_hold());
}

TEST(Fock, CrossCheckMonomialsOnH) {
  auto       g    = test::graph_h();
  auto const gens = test::generator_letters(g);
  for (std::size_t n = 1; n <= 4; ++n) {
    test::for_each_tuple(gens, n, [&](std::vector<Letter> const& letters) {
      EXPECT_TRUE(cross_check_reduction({letters, 1}, *g, 6));
    });
  }
}

TEST(Fock, CrossCheckLongWordsOnT3) {
  auto         g     = test::graph_t3();
  auto const   words = enumerate_paths(*g, 2);
  std::mt19937 rng(41);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::bernoulli_distribution                coin(0.5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> letters;
    for (int k = 0; k < 3; ++k) {
      letters.emplace_back(words[pick(rng)], coin(rng));
    }
    EXPECT_TRUE(cross_check_reduction({letters, 1}, *g, 7));
  }
}

TEST(Fock, CrossCheckRejectsOversizedMonomials) {
  auto g = test::graph_h();
  EXPECT_THROW(cross_check_reduction({{L(g, "e1 e2"), L(g, "e1 e2")}, 1}, *g, 3), DomainError);
}
