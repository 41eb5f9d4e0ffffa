#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HOMCFG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("homcfg_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, Hom) {
  const auto r = run("hom --w -1 --x 3,0 --y 1,0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("hom --w -1 --x 1,0 --y 3,2").out, "0\n");
}

TEST(Cli, Ext) {
  EXPECT_EQ(run("ext --w -1 --x 3,0 --y 1,0 --j 0").out, "1\n");
  EXPECT_EQ(run("ext --w -2 --x 11,0 --y 11,0 --j -1 --oracle").out, "0\n");
}

TEST(Cli, Hammock) {
  EXPECT_EQ(run("hammock --w -1 --x 3,0 --dir backward --window 0..7").out,
            "(3,0),(5,0),(7,0),(3,2),(5,2),(7,2)\n");
}

TEST(Cli, Check) {
  const auto good = temp_file("good.cfg", "w -2 window 1 4\n3 1\n");
  const auto r = run("check --w -2 --config " + good);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hom-configuration: yes; riedtmann: yes\n");
  const auto bad = temp_file("bad.cfg", "w -1 window 1 4\n2 1\n");
  const auto b = run("check --config " + bad);
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(b.out.rfind("hom-configuration: no; riedtmann: no\n", 0), 0u);
  EXPECT_NE(b.out.find("free_isolated_count"), std::string::npos);
  EXPECT_EQ(run("check --w -1 --config " + good).code, 2);
  EXPECT_EQ(run("check --config /nonexistent/file").code, 2);
}

TEST(Cli, Enumerate) {
  const auto r = run("enumerate --w -1 --window 1..4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(2,1),(4,3)\n(4,1),(3,2)\ncount=2\n");
  EXPECT_EQ(run("enumerate --w -1 --window 1..4 --oracle").out, r.out);
  EXPECT_EQ(run("enumerate --w -1 --window 1..10 --count-only --workers 3").out, "count=42\n");
}

TEST(Cli, PerpAndFunctor) {
  EXPECT_EQ(run("perp --w -1 --a 3,-4 --x 6,5").out, "C2\n");
  EXPECT_EQ(run("perp --w -1 --a 3,-4 --x 6,5 --splice fold").out, "(2,1)\n");
  EXPECT_EQ(run("functor-f --w -1 --a 3,-4 --object \"(3,2,1)\"").out, "(2,-3)\n");
  EXPECT_EQ(run("functor-f --w -1 --a 3,-4 --object \"deg:1 socle:1 len:1\"").out, "(1,0)\n");
  EXPECT_EQ(run("functor-f --w -1 --a 3,-4 --inverse --x 2,1").out, "deg:0 socle:1 len:1\n");
  EXPECT_EQ(run("functor-f --w -1 --a 3,-4 --inverse --x 6,5").code, 2);
}

TEST(Cli, QuiverAndDiagonals) {
  EXPECT_EQ(run("quiver --model gamma --n 3 --m 2 --verify").out,
            run("quiver --model gamma --n 3 --m 2").out + "stable translation quiver: yes\n");
  const auto dot = run("quiver --model gamma --n 3 --m 2 --dot");
  EXPECT_EQ(dot.out.rfind("digraph quiver {", 0), 0u);
  EXPECT_EQ(run("quiver --model gamma-prime --n 3").out.rfind("vertices=9 ", 0), 0u);
  EXPECT_EQ(run("quiver --model other").code, 2);
  EXPECT_EQ(run("diagonals --n 3 --m 1 --enumerate-configs --count-only").out, "count=5\n");
  EXPECT_EQ(run("diagonals --n 2 --m 1").out, "{1,2} {1,4} {2,3} {3,4}\ncount=4\n");
}

TEST(Cli, Nc) {
  EXPECT_EQ(run("nc --op kreweras --partition \"{1,3}{2}\"").out, "{1}{2,3}\n");
  EXPECT_EQ(run("nc --op rho --n 2 --partition \"{1,2}\"").out, "{1,2}{3,4}\n");
  EXPECT_EQ(run("nc --op rho-inv --n 2 --partition \"{1,2}{3,4}\"").out, "{1,2}\n");
  EXPECT_EQ(run("nc --op kreweras --partition \"{1,3}{2,4}\"").code, 2);
  const auto h1 = temp_file("h1.cfg", "w -1 window 1 8\n2 1\n4 3\n6 5\n8 7\n");
  EXPECT_EQ(run("nc --op from-config --config " + h1).out, "{0,1,2,3,4}\nspans\n");
}

TEST(Cli, Verify) {
  const auto r = run("verify --suite thm3.4 --w -1 --window 1..10");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equal (counts 42 = 42)\n");
  EXPECT_EQ(run("verify --suite rem6.6").code, 0);
  EXPECT_EQ(run("verify --suite thm5.1 --seed 3 --samples 200").code, 0);
  EXPECT_EQ(run("verify --suite nonsense").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("hom --w -1 --x 3,0").code, 2);
  EXPECT_EQ(run("hom --w -1 --x 2,0 --y 1,0").code, 2);
  EXPECT_EQ(run("hom --w 1 --x 3,0 --y 1,0").code, 2);
  EXPECT_EQ(run("enumerate --w -1 --window 1..40").code, 2);
}

TEST(Cli, Deterministic) {
  const std::string args = "enumerate --w -2 --window 0..13 --workers 4";
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run(args).out, run("enumerate --w -2 --window 0..13 --workers 1").out);
}
