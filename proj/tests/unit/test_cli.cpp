#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "syzcolor/errors.hpp"

using namespace syzcolor;
using namespace syzcolor::cli;

namespace {

std::string write_temp(const std::string &name, const std::string &text) {
  auto path = std::filesystem::temp_directory_path() / ("syzcolor_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kC5 = "# vertices: 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
const std::string kBowtie = "p edge 5 6\ne 1 2\ne 1 3\ne 2 3\ne 1 4\ne 1 5\ne 4 5\n";

int code_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const std::exception &e) {
    return exit_code_for(e);
  }
  return ExitCode::ok;
}

} // namespace

TEST(Cli, ColorReport) {
  ColorArgs args;
  args.input = write_temp("c5.txt", kC5);
  args.n = 5;
  args.d = 1;
  args.verify = true;
  Report r = cmd_color(args);
  EXPECT_EQ(r["tool"], "syzcolor");
  EXPECT_EQ(r["command"], "color");
  EXPECT_EQ(r["input"]["vertices"], 5);
  EXPECT_LE(r["result"]["colors_used"].get<int>(), 4);
  EXPECT_EQ(r["result"]["bound"], "4");
  EXPECT_EQ(r["result"]["bound_certified"], true);
  EXPECT_FALSE(r.contains("timing_ms"));
  EXPECT_EQ(render(r), render(cmd_color(args)));
}

TEST(Cli, ColorByBettiIndex) {
  ColorArgs args;
  args.i = 1;
  args.j = 4;
  Report r = color_graph(graphs::complete(6), args);
  EXPECT_EQ(r["result"]["colors_used"], 6);
  EXPECT_EQ(r["result"]["family"]["n"], 4);
  ColorArgs both = args;
  both.n = 4;
  both.d = 1;
  EXPECT_EQ(code_of([&] { color_graph(graphs::complete(3), both); }), ExitCode::domain);
}

TEST(Cli, ExitCodes) {
  ColorArgs bad;
  bad.input = write_temp("bad.txt", "0 1\nnot an edge\n");
  bad.n = 4;
  bad.d = 1;
  EXPECT_EQ(code_of([&] { cmd_color(bad); }), ExitCode::parse);
  BoundArgs unknown{"nope", {}};
  EXPECT_EQ(code_of([&] { cmd_bound(unknown); }), ExitCode::domain);
  CheckFreeArgs big;
  big.input = write_temp("big.txt", "# vertices: 20\n0 1\n");
  big.n = 4;
  big.d = 1;
  EXPECT_EQ(code_of([&] { cmd_check_free(big); }), ExitCode::capacity);
  EXPECT_EQ(code_of([] { throw std::runtime_error("x"); }), ExitCode::failure);
}

TEST(Cli, Betti) {
  BettiArgs args;
  args.input = write_temp("m2.txt", "0 1\n2 3\n");
  args.i = 1;
  args.j = 4;
  EXPECT_EQ(cmd_betti(args)["result"]["betti"], 1);
  args.vanishes = true;
  Report v = cmd_betti(args);
  EXPECT_EQ(v["result"]["vanishes"], false);
  EXPECT_EQ(v["result"]["witness"], Report({0, 1, 2, 3}));
  args.vanishes = false;
  args.input = write_temp("c4.txt", "0 1\n1 2\n2 3\n0 3\n");
  EXPECT_EQ(cmd_betti(args)["result"]["betti"], 0);
  args.j = 6;
  args.i = 3;
  EXPECT_EQ(cmd_betti(args)["result"]["betti"], 0);
}

TEST(Cli, Bound) {
  EXPECT_EQ(cmd_bound({"g", {7, 1, 3}})["result"]["value"], "13");
  EXPECT_EQ(cmd_bound({"wagon", {2, 3}})["result"]["value"], "6");
  EXPECT_EQ(cmd_bound({"closed", {7, 1, 3}})["result"]["value"], "16");
  EXPECT_EQ(cmd_bound({"sharp", {5, 1, 3}})["result"]["value"], false);
  EXPECT_EQ(cmd_bound({"betti_family", {2, 5}})["result"]["value"]["d"], 1);
  EXPECT_EQ(code_of([] { cmd_bound({"g", {7, 1}}); }), ExitCode::domain);
  EXPECT_EQ(code_of([] { cmd_bound({"g", {3, 1, 2}}); }), ExitCode::domain);
  BoundArgs table{"", {}, true, 4};
  Report t = cmd_bound(table);
  bool saw = false;
  for (const auto &row : t["result"]["table"]) {
    if (row["n"] == 7 && row["d"] == 1) {
      EXPECT_EQ(row["values"][2], "13");
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
}

TEST(Cli, CheckFree) {
  CheckFreeArgs args;
  args.input = write_temp("bowtie.col", kBowtie);
  args.n = 5;
  args.d = 1;
  Report r = cmd_check_free(args);
  EXPECT_EQ(r["result"]["free"], false);
  EXPECT_EQ(r["result"]["witness"].size(), 5u);
  args.input = write_temp("c5b.txt", kC5);
  EXPECT_EQ(cmd_check_free(args)["result"]["free"], true);
  args.input = write_temp("p3.txt", "0 1\n1 2\n");
  EXPECT_EQ(cmd_check_free(args)["result"]["free"], true);
}

TEST(Cli, Spotcheck) {
  SpotcheckArgs args;
  args.count = 60;
  Report a = cmd_spotcheck(args);
  EXPECT_EQ(render(a), render(cmd_spotcheck(args)));
  EXPECT_EQ(a["result"]["samples"], 60);
  args.i = 0;
  args.j = 3;
  EXPECT_EQ(code_of([&] { cmd_spotcheck(args); }), ExitCode::ok);
  args.i = 5;
  args.j = 7;
  EXPECT_EQ(code_of([&] { cmd_spotcheck(args); }), ExitCode::domain);
  SpotcheckArgs none;
  none.count = 0;
  Report z = cmd_spotcheck(none);
  EXPECT_EQ(z["result"]["vanishing"], 0);
  EXPECT_TRUE(z["result"]["fraction"].is_null());
}

TEST(Cli, Bench) {
  BenchArgs args;
  args.sizes = {100, 200, 400};
  Report r = cmd_bench(args);
  ASSERT_EQ(r["result"]["rows"].size(), 3u);
  EXPECT_EQ(r["result"]["rows"][2]["n"], 400);
  args.sizes.clear();
  EXPECT_TRUE(cmd_bench(args)["result"]["rows"].empty());
}

TEST(Cli, DigestIsStable) {
  EXPECT_EQ(graph_digest(graphs::cycle(5)), graph_digest(graphs::cycle(5)));
  EXPECT_NE(graph_digest(graphs::cycle(5)), graph_digest(graphs::path(5)));
  EXPECT_EQ(graph_digest(graphs::cycle(5)).size(), 16u);
}
