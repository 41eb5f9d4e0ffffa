#include <gtest/gtest.h>

#include <sstream>

#include "homcfg/io.hpp"

using namespace homcfg;

TEST(Io, ArcListRoundTrip) {
  std::istringstream in("# comment\n3 1\n\n  5 2 \n");
  const auto arcs = io::read_arc_list(in);
  EXPECT_EQ(arcs, (std::vector<Arc>{{3, 1}, {5, 2}}));
  std::ostringstream out;
  io::write_arc_list(out, arcs);
  EXPECT_EQ(out.str(), "3 1\n5 2\n");
}

TEST(Io, ArcListErrors) {
  std::istringstream bad("3\n");
  EXPECT_THROW(io::read_arc_list(bad), io::ParseError);
  std::istringstream junk("3 x\n");
  EXPECT_THROW(io::read_arc_list(junk), io::ParseError);
}

TEST(Io, ConfigRoundTrip) {
  std::istringstream in("w -2 window 1 4\n3 1\n");
  const auto cfg = io::read_config(in);
  EXPECT_EQ(cfg.ctx().w(), -2);
  EXPECT_EQ(cfg.window(), Window(1, 4));
  std::ostringstream out;
  io::write_config(out, cfg);
  EXPECT_EQ(out.str(), "w -2 window 1 4\n3 1\n");
  EXPECT_EQ(io::config_line(cfg), "(3,1)");
}

TEST(Io, ConfigErrors) {
  std::istringstream no_header("3 1\n");
  EXPECT_THROW(io::read_config(no_header), io::ParseError);
  std::istringstream inadmissible("w -1 window 1 4\n3 1\n");
  EXPECT_THROW(io::read_config(inadmissible), io::ParseError);
  std::istringstream empty("");
  EXPECT_THROW(io::read_config(empty), io::ParseError);
  std::istringstream reversed("w -1 window 4 1\n");
  EXPECT_THROW(io::read_config(reversed), io::ParseError);
}

TEST(Io, ParseArcAndWindow) {
  EXPECT_EQ(io::parse_arc("3,0"), (Arc{3, 0}));
  EXPECT_EQ(io::parse_arc("(-1, -4)"), (Arc{-1, -4}));
  EXPECT_THROW(io::parse_arc("3"), io::ParseError);
  EXPECT_EQ(io::parse_window("1..10"), Window(1, 10));
  EXPECT_EQ(io::parse_window("-4..4"), Window(-4, 4));
  EXPECT_THROW(io::parse_window("4..1"), io::ParseError);
  EXPECT_THROW(io::parse_window("4"), io::ParseError);
  EXPECT_THROW(io::parse_arc("99999999999999999999,0"), io::ParseError);
}

TEST(Io, Partitions) {
  const auto p = io::parse_partition("{1,3}{2}");
  EXPECT_EQ(to_string(p), "{1,3}{2}");
  EXPECT_EQ(to_string(io::parse_partition(" {2} {3,1} ")), "{1,3}{2}");
  EXPECT_THROW(io::parse_partition("{1,2}{2}"), io::ParseError);
  EXPECT_THROW(io::parse_partition("{1,2"), io::ParseError);
  EXPECT_THROW(io::parse_partition("1,2"), io::ParseError);
}

TEST(Io, Diagonals) {
  EXPECT_EQ(io::diagonal_line({Diagonal(1, 2), Diagonal(3, 6)}), "{1,2} {3,6}");
}

TEST(Io, Nakayama) {
  EXPECT_EQ(io::parse_nakayama("deg:0 socle:1 len:3", 3, 1), (NakayamaObject{3, 1, 0, 1, 3}));
  EXPECT_EQ(io::parse_nakayama("(3,2,1)", 3, 1), (NakayamaObject{3, 1, 0, 1, 3}));
  EXPECT_EQ(io::parse_nakayama("(1)", 3, 1, 1), (NakayamaObject{3, 1, 1, 1, 1}));
  EXPECT_THROW(io::parse_nakayama("(3,1)", 3, 1), io::ParseError);
  EXPECT_THROW(io::parse_nakayama("deg:0 socle:1", 3, 1), io::ParseError);
  EXPECT_THROW(io::parse_nakayama("deg:1 socle:1 len:3", 3, 1), io::ParseError);
  EXPECT_THROW(io::parse_nakayama("colour:1", 3, 1), io::ParseError);
}
