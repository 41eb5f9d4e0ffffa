#include <gtest/gtest.h>

#include <set>

#include "homcfg/config_kernel.hpp"
#include "homcfg/perp_orbit.hpp"
#include "homcfg/polygon_quiver.hpp"
#include "oracles.hpp"

using namespace homcfg;

namespace {

// An (m+1)-diagonal cuts the N-gon into two parts whose vertex counts
// (endpoints included in both) are multiples of m + 1.
bool diagonal_by_parts(int N, int m, int i, int j) {
  const int a = j - i + 1;
  const int b = N - (j - i) + 1;
  return a % (m + 1) == 0 && b % (m + 1) == 0;
}

}  // namespace

TEST(PolygonQuiver, PolygonSize) {
  EXPECT_EQ(Polygon(3, 2).N(), 10);
  EXPECT_EQ(Polygon(3, 1).N(), 6);
  EXPECT_EQ(Polygon(3, 1).canon(0), 6);
  EXPECT_EQ(Polygon(3, 1).canon(-1), 5);
  EXPECT_THROW(Polygon(0, 1), std::invalid_argument);
}

TEST(PolygonQuiver, DiagonalExamples) {
  EXPECT_TRUE(is_m_diagonal(Polygon(3, 2), 1, 3));
  EXPECT_TRUE(is_m_diagonal(Polygon(3, 1), 1, 2));
  EXPECT_FALSE(is_m_diagonal(Polygon(3, 2), 1, 4));
  EXPECT_THROW(is_m_diagonal(Polygon(3, 2), 1, 1), std::invalid_argument);
  EXPECT_THROW(is_m_diagonal(Polygon(3, 2), 1, 11), std::invalid_argument);
  EXPECT_EQ(all_diagonals(Polygon(3, 2)).size(), 15u);
  EXPECT_EQ(all_diagonals(Polygon(3, 1)).size(), 9u);
  EXPECT_EQ(all_diagonals(Polygon(2, 1)).size(), 4u);
}

TEST(PolygonQuiver, DiagonalsMatchPartsRule) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m) {
      const Polygon p(n, m);
      std::size_t count = 0;
      for (int i = 1; i <= p.N(); ++i)
        for (int j = i + 1; j <= p.N(); ++j) {
          EXPECT_EQ(is_m_diagonal(p, i, j), diagonal_by_parts(p.N(), m, i, j)) << n << " " << m << " " << i << " " << j;
          count += is_m_diagonal(p, i, j);
        }
      EXPECT_EQ(count, static_cast<std::size_t>((m + 1) * n * (n + 1) / 2 - n));
    }
}

TEST(PolygonQuiver, GammaIsStableTranslationQuiver) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto g = build_gamma(n, m);
      const auto rep = verify_stable_translation(g.quiver);
      EXPECT_TRUE(rep.ok) << n << " " << m << (rep.violations.empty() ? "" : rep.violations.front());
    }
  EXPECT_EQ(build_gamma(3, 2).quiver.size(), 15u);
}

TEST(PolygonQuiver, SmallGammaByHand) {
  // The square: four edges, arrows rotate each edge onto its neighbour.
  const auto g = build_gamma(2, 1);
  ASSERT_EQ(g.quiver.size(), 4u);
  EXPECT_EQ(g.quiver.arrows.size(), 4u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(g.quiver.tau[g.quiver.tau[v]], v);
}

TEST(PolygonQuiver, VerifierRejectsBrokenTau) {
  auto g = build_gamma(3, 1);
  std::swap(g.quiver.tau[0], g.quiver.tau[1]);
  EXPECT_FALSE(verify_stable_translation(g.quiver).ok);
  TranslationQuiver bad{{"a", "b"}, {{0, 1}}, {0, 0}};
  EXPECT_FALSE(verify_stable_translation(bad).ok);
}

TEST(PolygonQuiver, GammaPrime) {
  const auto gp = build_gamma_prime(3);
  EXPECT_EQ(gp.quiver.size(), 9u);
  EXPECT_TRUE(verify_stable_translation(gp.quiver).ok);
}

TEST(PolygonQuiver, EdgeIsoExamples) {
  EXPECT_EQ(iso_edge_to_diagonal(3, OrientedEdge{1, 2}), Diagonal(1, 2));
  EXPECT_EQ(iso_edge_to_diagonal(3, OrientedEdge{1, 1}), Diagonal(1, 6));
  EXPECT_THROW(iso_edge_to_diagonal(1, OrientedEdge{1, 1}), std::invalid_argument);
  EXPECT_THROW(iso_edge_to_diagonal(3, OrientedEdge{1, 4}), std::invalid_argument);
}

TEST(PolygonQuiver, EdgeIsoIsQuiverIsomorphism) {
  for (int n = 2; n <= 7; ++n) {
    const auto gp = build_gamma_prime(n);
    const auto g = build_gamma(n, 1);
    std::set<std::pair<Diagonal, Diagonal>> arrows, image;
    for (auto [s, t] : g.quiver.arrows) arrows.emplace(g.diagonals[s], g.diagonals[t]);
    for (auto [s, t] : gp.quiver.arrows)
      image.emplace(iso_edge_to_diagonal(n, gp.edges[s]), iso_edge_to_diagonal(n, gp.edges[t]));
    EXPECT_EQ(image, arrows) << n;
    for (std::size_t v = 0; v < gp.edges.size(); ++v) {
      EXPECT_EQ(iso_edge_to_diagonal(n, gp.edges[gp.quiver.tau[v]]),
                g.diagonals[g.quiver.tau[g.index_of(iso_edge_to_diagonal(n, gp.edges[v]))]]);
    }
  }
}

TEST(PolygonQuiver, DiagonalArcMaps) {
  EXPECT_EQ(diagonal_to_arc(CyContext(-1), 3, 1, Diagonal(1, 2)), (Arc{6, 5}));
  EXPECT_EQ(diagonal_to_arc(CyContext(-2), 3, 2, Diagonal(1, 3)), (Arc{10, 8}));
  EXPECT_THROW(diagonal_to_arc(CyContext(-1), 3, 2, Diagonal(1, 3)), std::invalid_argument);
  EXPECT_THROW(diagonal_to_arc(CyContext(-2), 3, 2, Diagonal(1, 4)), std::invalid_argument);
  EXPECT_EQ(arc_to_diagonal(CyContext(-2), 3, 2, Arc{10, 8}), Diagonal(1, 3));
}

// G is a bijection from diagonals onto C1 of the base arc (N + 1, 0), and
// carries configurations to pairwise compatible sets of n arcs.
TEST(PolygonQuiver, DiagonalsToC1) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      const CyContext ctx(-m);
      const Polygon p(n, m);
      const Arc base{p.N() + 1, 0};
      std::vector<Arc> arcs;
      for (const auto& dg : all_diagonals(p)) {
        arcs.push_back(diagonal_to_arc(ctx, n, m, dg));
        EXPECT_EQ(arc_to_diagonal(ctx, n, m, arcs.back()), dg);
      }
      std::sort(arcs.begin(), arcs.end());
      EXPECT_EQ(arcs, c1_arcs(ctx, base));
      if (p.N() > 24) continue;
      for (const auto& conf : std::vector(*enumerate_diagonal_configs(n, m).configs)) {
        ASSERT_EQ(conf.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < conf.size(); ++i)
          for (std::size_t j = i + 1; j < conf.size(); ++j)
            EXPECT_TRUE(
                compatible(ctx, diagonal_to_arc(ctx, n, m, conf[i]), diagonal_to_arc(ctx, n, m, conf[j])));
      }
    }
}

TEST(PolygonQuiver, DiagonalConfigCounts) {
  EXPECT_EQ(enumerate_diagonal_configs(2, 1).count, 2u);
  EXPECT_EQ(enumerate_diagonal_configs(3, 1).count, 5u);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_diagonal_configs(n, 1, false).count, oracle::catalan(n));
  EXPECT_EQ(enumerate_diagonal_configs(1, 2).count, 2u);
  EXPECT_THROW(enumerate_diagonal_configs(21, 1), std::invalid_argument);
}

TEST(PolygonQuiver, DiagonalConfigsAreNoncrossingAndDisjoint) {
  for (const auto& conf : std::vector(*enumerate_diagonal_configs(4, 2).configs)) {
    for (std::size_t i = 0; i < conf.size(); ++i)
      for (std::size_t j = i + 1; j < conf.size(); ++j) {
        EXPECT_FALSE(chords_cross(conf[i], conf[j]));
        EXPECT_FALSE(conf[i].has(conf[j].i) || conf[i].has(conf[j].j));
      }
  }
}

TEST(PolygonQuiver, SerialAndParallelDiagonalEnumerationAgree) {
  for (int m = 1; m <= 3; ++m) {
    const auto serial = enumerate_diagonal_configs_serial(4, m);
    for (int workers : {1, 3}) EXPECT_EQ(enumerate_diagonal_configs(4, m, true, workers).configs, serial.configs);
  }
}

TEST(PolygonQuiver, DotExport) {
  const auto dot = export_dot(build_gamma(3, 2).quiver);
  std::size_t nodes = 0;
  for (std::size_t p = dot.find("label="); p != std::string::npos; p = dot.find("label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 15u);
  EXPECT_EQ(dot.rfind("digraph quiver {", 0), 0u);
  EXPECT_EQ(export_dot(TranslationQuiver{}), "digraph quiver {\n}\n");
}
