#include <gtest/gtest.h>

#include <set>

#include "homcfg/config_kernel.hpp"
#include "homcfg/enum_search.hpp"
#include "homcfg/noncross.hpp"
#include "oracles.hpp"

using namespace homcfg;

namespace {

NCPartition part(Label n, std::vector<std::vector<Label>> blocks) { return make_partition(iota_ground(n), std::move(blocks)); }

std::vector<int> owners(const std::vector<std::vector<Label>>& blocks, std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto k : blocks[b]) out[static_cast<std::size_t>(k - 1)] = static_cast<int>(b);
  return out;
}

const CyContext kW1(-1);

}  // namespace

TEST(Noncross, MakePartitionValidates) {
  EXPECT_THROW(part(3, {{1, 2}}), MalformedPartition);
  EXPECT_THROW(part(3, {{1, 2}, {2, 3}}), MalformedPartition);
  EXPECT_THROW(part(3, {{1, 2, 3}, {}}), MalformedPartition);
  const auto p = part(3, {{2}, {3, 1}});
  EXPECT_EQ(to_string(p), "{1,3}{2}");
}

TEST(Noncross, CrossingExamples) {
  EXPECT_TRUE(is_noncrossing(part(3, {{1, 3}, {2}})));
  EXPECT_FALSE(is_noncrossing(part(4, {{1, 3}, {2, 4}})));
  EXPECT_TRUE(is_noncrossing(part(4, {{1, 4}, {2, 3}})));
}

TEST(Noncross, CatalanCounts) {
  for (Label n = 1; n <= 8; ++n) {
    const auto all = all_noncrossing_partitions(n);
    EXPECT_EQ(all.size(), oracle::catalan(static_cast<int>(n)));
    std::size_t brute = 0;
    for (const auto& q : oracle::set_partitions(iota_ground(n)))
      brute += oracle::crossing_free(owners(q, static_cast<std::size_t>(n)));
    EXPECT_EQ(brute, all.size());
    for (const auto& p : all) EXPECT_TRUE(is_noncrossing(p));
  }
}

TEST(Noncross, KrewerasExamples) {
  EXPECT_EQ(kreweras(part(3, {{1, 3}, {2}})), part(3, {{1}, {2, 3}}));
  EXPECT_EQ(kreweras(singletons(iota_ground(4))), part(4, {{1, 2, 3, 4}}));
  EXPECT_EQ(kreweras(part(4, {{1, 2, 3, 4}})), singletons(iota_ground(4)));
  EXPECT_THROW(kreweras(part(4, {{1, 3}, {2, 4}})), CrossingPartition);
}

TEST(Noncross, KrewerasMatchesMaximalityOracle) {
  for (Label n = 1; n <= 7; ++n) {
    for (const auto& p : all_noncrossing_partitions(n)) {
      const auto k = kreweras(p);
      EXPECT_TRUE(is_noncrossing(k));
      EXPECT_EQ(k, part(n, oracle::kreweras(p.blocks, static_cast<int>(n)))) << to_string(p);
    }
  }
}

TEST(Noncross, KrewerasBlockCountsSumToNPlusOne) {
  for (Label n = 1; n <= 8; ++n)
    for (const auto& p : all_noncrossing_partitions(n)) EXPECT_EQ(p.blocks.size() + kreweras(p).blocks.size(), n + 1u);
}

TEST(Noncross, DoubledPositions) {
  EXPECT_EQ(doubled_position(0, Copy::ZPrime), 1);
  EXPECT_EQ(doubled_position(0, Copy::ZDoublePrime), -1);
  EXPECT_LT(doubled_position(1, Copy::ZDoublePrime), doubled_position(1, Copy::ZPrime));
  EXPECT_LT(doubled_position(1, Copy::ZPrime), doubled_position(2, Copy::ZDoublePrime));
  EXPECT_EQ(other(Copy::ZPrime), Copy::ZDoublePrime);
}

TEST(Noncross, RhoExamples) {
  EXPECT_EQ(rho(part(2, {{1, 2}}), 2), part(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(rho(part(1, {{1}}), 1), part(2, {{1, 2}}));
  EXPECT_EQ(rho(part(3, {{1}, {2}, {3}}), 3), part(6, {{1, 6}, {2, 3}, {4, 5}}));
  EXPECT_THROW(rho(part(4, {{1, 3}, {2, 4}}), 4), CrossingPartition);
}

TEST(Noncross, RhoRoundTrip) {
  for (Label n = 1; n <= 6; ++n) {
    for (const auto& p : all_noncrossing_partitions(n)) {
      const auto q = rho(p, n);
      EXPECT_TRUE(is_noncrossing(q));
      for (const auto& b : q.blocks) EXPECT_EQ(b.size(), 2u);
      EXPECT_EQ(rho_inverse(q, n), p);
    }
  }
}

TEST(Noncross, RhoInverseRejects) {
  EXPECT_THROW(rho_inverse(part(4, {{1, 2, 3, 4}}), 2), MalformedPartition);
  EXPECT_THROW(rho_inverse(part(4, {{1, 3}, {2, 4}}), 2), CrossingPartition);
}

// Every noncrossing pairing of {1..2n} is an outline.
TEST(Noncross, RhoIsOntoNoncrossingPairings) {
  for (Label n = 1; n <= 6; ++n) {
    std::size_t pairings = 0;
    for (const auto& q : all_noncrossing_partitions(2 * n)) {
      bool pairs = true;
      for (const auto& b : q.blocks) pairs = pairs && b.size() == 2;
      if (!pairs) continue;
      ++pairings;
      EXPECT_EQ(rho(rho_inverse(q, n), n), q);
    }
    EXPECT_EQ(pairings, oracle::catalan(static_cast<int>(n)));
  }
}

TEST(Noncross, SlotIndex) {
  EXPECT_EQ(slot_index(4, Copy::ZPrime), 2);
  EXPECT_FALSE(slot_index(4, Copy::ZDoublePrime).has_value());
  EXPECT_EQ(slot_index(-3, Copy::ZDoublePrime), -1);
  EXPECT_EQ(slot_ground(Window(1, 8), Copy::ZPrime), (std::vector<Label>{0, 1, 2, 3, 4}));
  EXPECT_EQ(slot_ground(Window(1, 8), Copy::ZDoublePrime), (std::vector<Label>{1, 2, 3, 4}));
}

TEST(Noncross, CanonicalFamilies) {
  const auto h1 = canonical_config(kW1, Family::H1, 0, Window(1, 8));
  const auto f1 = config_to_partition(h1, Copy::ZPrime);
  EXPECT_EQ(to_string(f1.partition), "{0,1,2,3,4}");
  EXPECT_EQ(classify_blocks(f1), (std::vector<BlockClass>{BlockClass::Spans}));
  const auto g1 = config_to_partition(h1, Copy::ZDoublePrime);
  EXPECT_EQ(g1.partition, singletons(g1.partition.ground));

  const auto h2 = canonical_config(kW1, Family::H2, 0, Window(-4, 4));
  const auto f2 = config_to_partition(h2, Copy::ZPrime);
  EXPECT_EQ(to_string(f2.partition), "{-2}{-1}{0,1,2}");
  EXPECT_EQ(classify_blocks(f2),
            (std::vector<BlockClass>{BlockClass::Interior, BlockClass::Interior, BlockClass::TouchesUpper}));
  const auto g2 = config_to_partition(h2, Copy::ZDoublePrime);
  EXPECT_EQ(to_string(g2.partition), "{-2,-1,0}{1}{2}");
  EXPECT_EQ(classify_blocks(g2),
            (std::vector<BlockClass>{BlockClass::TouchesLower, BlockClass::Interior, BlockClass::Interior}));
  EXPECT_EQ(to_string(BlockClass::TouchesUpper), "touches_upper");
}

TEST(Noncross, ConfigToPartitionPreconditions) {
  EXPECT_THROW(config_to_partition(ArcConfig(CyContext(-2), Window(1, 4), {{3, 1}}), Copy::ZPrime),
               std::invalid_argument);
  EXPECT_THROW(config_to_partition(ArcConfig(kW1, Window(1, 4), {{2, 1}}), Copy::ZPrime), std::invalid_argument);
}

TEST(Noncross, GIsKrewerasOfF) {
  for (Vertex lo : {-1, 0, 1, 2}) {
    for (Vertex s = 1; s <= 12; ++s) {
      const Window win(lo, lo + s - 1);
      for (const auto& c : std::vector(*enumerate_configs(kW1, win).configs)) {
        const auto f = config_to_partition(c, Copy::ZPrime);
        const auto g = config_to_partition(c, Copy::ZDoublePrime);
        EXPECT_TRUE(is_noncrossing(f.partition));
        EXPECT_EQ(kreweras(f.partition, Copy::ZPrime, g.partition.ground), g.partition) << to_string(c);
        EXPECT_EQ(kreweras(g.partition, Copy::ZDoublePrime, f.partition.ground), f.partition) << to_string(c);
      }
    }
  }
}

// f is injective on each window, has at most one spanning block, and has a
// block touching exactly one boundary precisely when the configuration fails
// the counting Riedtmann check.
TEST(Noncross, BoundaryProxies) {
  for (Vertex lo : {0, 1}) {
    for (Vertex s = 1; s <= 14; ++s) {
      const Window win(lo, lo + s - 1);
      const auto configs = *enumerate_configs(kW1, win).configs;
      std::set<std::string> seen;
      for (const auto& c : configs) {
        const auto f = config_to_partition(c, Copy::ZPrime);
        EXPECT_TRUE(seen.insert(to_string(f.partition)).second);
        int spans = 0, one_sided = 0;
        for (auto b : classify_blocks(f)) {
          spans += b == BlockClass::Spans;
          one_sided += b == BlockClass::TouchesLower || b == BlockClass::TouchesUpper;
        }
        EXPECT_LE(spans, 1);
        EXPECT_EQ(check_riedtmann(c), one_sided == 0) << to_string(c);
      }
    }
  }
}
