#include <gtest/gtest.h>

#include "metdim/builders.hpp"
#include "metdim/errors.hpp"
#include "metdim/generate.hpp"
#include "metdim/graph6.hpp"
#include "metdim/resolving.hpp"
#include "metdim/twin.hpp"
#include "oracle.hpp"

using namespace metdim;

TEST(TwinsTest, Examples) {
  const Graph k5 = make::complete(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) EXPECT_TRUE(are_twins(k5, u, v));
  const Graph k23 = make::complete_bipartite(2, 3);
  EXPECT_TRUE(are_twins(k23, 0, 1));
  EXPECT_TRUE(are_twins(k23, 2, 4));
  EXPECT_FALSE(are_twins(k23, 0, 2));
  const Graph c5 = make::cycle(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) EXPECT_FALSE(are_twins(c5, u, v));
  EXPECT_THROW(are_twins(c5, 2, 2), InvalidArgument);
}

TEST(TwinDecompositionTest, CompleteBipartite) {
  const auto td = twin_decomposition(make::complete_bipartite(2, 3));
  ASSERT_EQ(td.class_count(), 2);
  EXPECT_EQ(td.classes[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(td.classes[1], (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(td.types[0], VertexType::N);
  EXPECT_EQ(td.types[1], VertexType::N);
  EXPECT_EQ(td.quotient, make::complete(2));
  EXPECT_EQ(td.alpha, 2);
}

TEST(TwinDecompositionTest, Cycle) {
  const auto td = twin_decomposition(make::cycle(5));
  EXPECT_EQ(td.class_count(), 5);
  EXPECT_EQ(td.quotient, make::cycle(5));
  EXPECT_EQ(td.alpha, 0);
  for (auto t : td.types) EXPECT_EQ(t, VertexType::One);
}

TEST(TwinDecompositionTest, Paw) {
  // Hub 0, triangle pair 1 2, leaf 3.
  const auto td = twin_decomposition(make::paw());
  ASSERT_EQ(td.class_count(), 3);
  EXPECT_EQ(td.classes[0], (std::vector<Vertex>{0}));
  EXPECT_EQ(td.classes[1], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(td.classes[2], (std::vector<Vertex>{3}));
  EXPECT_EQ(td.types, (std::vector<VertexType>{VertexType::One, VertexType::K, VertexType::One}));
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(0, 2);
  EXPECT_EQ(td.quotient, p3);
  EXPECT_EQ(td.alpha, 1);
}

TEST(TwinDecompositionTest, SingleVertex) {
  const auto td = twin_decomposition(make::complete(1));
  EXPECT_EQ(td.class_count(), 1);
  EXPECT_EQ(td.types[0], VertexType::One);
  EXPECT_EQ(td.quotient.order(), 1);
  EXPECT_THROW(quotient_distance_check(make::complete(1), td), InvalidArgument);
}

TEST(TwinDecompositionTest, TypeNames) {
  EXPECT_EQ(to_string(VertexType::One), "1");
  EXPECT_EQ(to_string(VertexType::K), "K");
  EXPECT_EQ(to_string(VertexType::N), "N");
}

// Pairwise agreement with a matrix-based twin test, plus the equivalence
// axioms, on every labelled graph up to order 6.
TEST(TwinDecompositionTest, ExhaustiveEquivalence) {
  for (int n = 2; n <= 6; ++n) {
    oracle::for_each_labeled(n, [&](const Graph& g) {
      bool t[6][6] = {};
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          t[u][v] = u == v || are_twins(g, u, v);
          if (u != v) ASSERT_EQ(t[u][v], oracle::brute_twins(g, u, v));
        }
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          ASSERT_EQ(t[u][v], t[v][u]);
          for (int w = 0; w < n; ++w)
            if (t[u][v] && t[v][w]) ASSERT_TRUE(t[u][w]);
        }
      const auto td = twin_decomposition(g);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) ASSERT_EQ(td.class_of[u] == td.class_of[v], t[u][v]);
    });
  }
}

TEST(TwinDecompositionTest, ExhaustiveStructure) {
  for (int n = 1; n <= 6; ++n) {
    oracle::for_each_labeled(n, [&](const Graph& g) {
      const auto td = twin_decomposition(g);
      int covered = 0;
      int alpha = 0;
      for (int c = 0; c < td.class_count(); ++c) {
        const auto& cls = td.classes[c];
        covered += td.class_size(c);
        ASSERT_TRUE(std::is_sorted(cls.begin(), cls.end()));
        if (c > 0) ASSERT_LT(td.classes[c - 1].front(), cls.front());
        int edges = 0;
        for (std::size_t i = 0; i < cls.size(); ++i)
          for (std::size_t j = i + 1; j < cls.size(); ++j) edges += g.adjacent(cls[i], cls[j]);
        const int pairs = static_cast<int>(cls.size() * (cls.size() - 1) / 2);
        // Homogeneous, and the type says which way.
        ASSERT_TRUE(edges == 0 || edges == pairs);
        switch (td.types[c]) {
          case VertexType::One: ASSERT_EQ(cls.size(), 1u); break;
          case VertexType::K: ASSERT_GE(cls.size(), 2u); ASSERT_EQ(edges, pairs); break;
          case VertexType::N: ASSERT_GE(cls.size(), 2u); ASSERT_EQ(edges, 0); break;
        }
        alpha += td.types[c] != VertexType::One;
        // Quotient adjacency equals adjacency of every member pair.
        for (int d = 0; d < td.class_count(); ++d) {
          if (d == c) continue;
          for (Vertex x : cls)
            for (Vertex y : td.classes[d]) ASSERT_EQ(g.adjacent(x, y), td.quotient.adjacent(c, d));
        }
      }
      ASSERT_EQ(covered, n);
      ASSERT_EQ(alpha, td.alpha);
    });
  }
}

// Two classes can be twins inside G* as a plain graph (the paw's quotient is
// P_3, whose leaves are twins). What must hold is that such classes could
// not be merged in G: adjacent ones need an N among them, non-adjacent ones
// a K. Anything else would mean the partition is not the coarsest.
TEST(TwinDecompositionTest, QuotientTwinsHaveIncompatibleTypes) {
  int quotient_twin_pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : oracle::iso_classes(n, true)) {
      const auto td = twin_decomposition(g);
      const Graph& q = td.quotient;
      for (int a = 0; a < q.order(); ++a)
        for (int b = a + 1; b < q.order(); ++b) {
          if (!are_twins(q, a, b)) continue;
          ++quotient_twin_pairs;
          const auto ta = td.types[a];
          const auto tb = td.types[b];
          if (q.adjacent(a, b)) {
            ASSERT_TRUE(ta == VertexType::N || tb == VertexType::N) << to_graph6(g);
          } else {
            ASSERT_TRUE(ta == VertexType::K || tb == VertexType::K) << to_graph6(g);
          }
        }
    }
  }
  EXPECT_GT(quotient_twin_pairs, 0);
}

TEST(QuotientDistanceTest, Examples) {
  const Graph k23 = make::complete_bipartite(2, 3);
  EXPECT_TRUE(quotient_distance_check(k23, twin_decomposition(k23)));
  const Graph c5 = make::cycle(5);
  EXPECT_TRUE(quotient_distance_check(c5, twin_decomposition(c5)));
  EXPECT_THROW(quotient_distance_check(make::empty(2), twin_decomposition(make::empty(2))),
               ConnectivityError);
}

TEST(QuotientDistanceTest, ExhaustiveUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : oracle::iso_classes(n, true)) {
      const auto td = twin_decomposition(g);
      ASSERT_TRUE(quotient_distance_check(g, td));
      const auto dg = oracle::floyd_warshall(g);
      const auto dq = oracle::floyd_warshall(td.quotient);
      ASSERT_LE(oracle::diameter(td.quotient), oracle::diameter(g));
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (td.class_of[u] != td.class_of[v])
            ASSERT_EQ(dq[td.class_of[u]][td.class_of[v]], dg[u][v]);
    }
  }
}

TEST(ShellTest, Examples) {
  const DistanceMatrix c5(make::cycle(5));
  EXPECT_EQ(shell(c5, 0, 0), (std::vector<Vertex>{0}));
  EXPECT_EQ(shell(c5, 0, 2), (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(shell(c5, 0, 3).empty());
  const DistanceMatrix k4(make::complete(4));
  EXPECT_EQ(shell(k4, 1, 1), (std::vector<Vertex>{0, 2, 3}));
}

TEST(TwinBoundsTest, BetaAtLeastOrderMinusQuotientOrder) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& g : connected_graphs(n)) {
      ASSERT_GE(metric_dimension(g).beta, n - twin_decomposition(g).class_count()) << to_graph6(g);
    }
  }
}

// If beta(G*) = n(G*) - t then beta(G) <= n(G) - t.
TEST(TwinBoundsTest, QuotientDeficitCarriesOver) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : oracle::iso_classes(n, true)) {
      const auto td = twin_decomposition(g);
      const int t = td.quotient.order() - oracle::brute_beta(td.quotient);
      ASSERT_LE(oracle::brute_beta(g), n - t) << to_graph6(g);
    }
  }
}
