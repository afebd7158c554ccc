#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "syzcolor/graph_io.hpp"

using namespace syzcolor;
using namespace syzcolor::cli;

namespace {

void add_format(CLI::App *cmd, GraphFormat &format) {
  cmd->add_option_function<std::string>(
         "--format", [&format](const std::string &s) { format = parse_graph_format(s); },
         "Input format: auto, dimacs or edges")
      ->default_str("auto");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Colour graphs with vanishing syzygies and evaluate the associated bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  std::string output;
  bool timing = false;
  app.add_option("-o,--output", output, "Write the JSON report to this file");
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");

  std::function<Report()> run;

  ColorArgs color_args;
  auto *color = app.add_subcommand("color", "Colour a graph with the recursive clique partition");
  color->add_option("input", color_args.input, "Graph file")->required();
  add_format(color, color_args.format);
  color->add_option("--n", color_args.n, "Family index n");
  color->add_option("--d", color_args.d, "Family index d");
  color->add_option("--i", color_args.i, "Betti index i");
  color->add_option("--j", color_args.j, "Betti index j");
  color->add_option("--omega", color_args.omega, "Clique number to evaluate the bound at");
  color->add_flag("--verify", color_args.verify, "Check freeness / vanishing exhaustively");
  color->add_flag("--assume", color_args.assume, "Trust that the hypothesis holds");
  color->callback([&] { run = [&] { return cmd_color(color_args); }; });

  BettiArgs betti_args;
  auto *betti = app.add_subcommand("betti", "Graded Betti number of the edge ideal");
  betti->add_option("input", betti_args.input, "Graph file")->required();
  add_format(betti, betti_args.format);
  betti->add_option("--i", betti_args.i, "Homological degree")->required();
  betti->add_option("--j", betti_args.j, "Internal degree")->required();
  betti->add_option("--field", betti_args.field, "q, f2 or fp:<prime>")->capture_default_str();
  betti->add_flag("--vanishes", betti_args.vanishes, "Only decide vanishing, with witness");
  betti->add_option("--jobs", betti_args.jobs, "Worker threads")->capture_default_str();
  betti->callback([&] { run = [&] { return cmd_betti(betti_args); }; });

  BoundArgs bound_args;
  auto *bound = app.add_subcommand("bound", "Evaluate a bound function");
  bound->add_option("name", bound_args.name,
                    "g, closed, sharp, wagon, pk2, const_f, perfect_join, single_bump, "
                    "double_bump, main_cor, asym, parabolic, betti_family");
  bound->add_option("params", bound_args.params, "Integer parameters");
  bound->add_flag("--table", bound_args.table, "Print the g grid for small (n, d)");
  bound->add_option("--max-omega", bound_args.max_omega, "Largest omega in --table")
      ->capture_default_str();
  bound->callback([&] { run = [&] { return cmd_bound(bound_args); }; });

  CheckFreeArgs free_args;
  auto *check = app.add_subcommand("check-free", "Search for an induced member of B_{n,d}");
  check->add_option("input", free_args.input, "Graph file")->required();
  add_format(check, free_args.format);
  check->add_option("--n", free_args.n, "Family index n")->required();
  check->add_option("--d", free_args.d, "Family index d")->required();
  check->callback([&] { run = [&] { return cmd_check_free(free_args); }; });

  SpotcheckArgs spot_args;
  auto *spot = app.add_subcommand("spotcheck", "Sample G(n,p) and test the asymptotic bound");
  spot->add_option("--i", spot_args.i)->capture_default_str();
  spot->add_option("--j", spot_args.j)->capture_default_str();
  spot->add_option("--count", spot_args.count, "Number of samples")->capture_default_str();
  spot->add_option("--n", spot_args.n, "Vertices per sample")->capture_default_str();
  spot->add_option("--p", spot_args.p, "Edge probability")->capture_default_str();
  spot->add_option("--seed", spot_args.seed)->capture_default_str();
  spot->add_option("--field", spot_args.field)->capture_default_str();
  spot->add_option("--jobs", spot_args.jobs)->capture_default_str();
  spot->callback([&] { run = [&] { return cmd_spotcheck(spot_args); }; });

  BenchArgs bench_args{{250, 500, 1000, 2000}};
  auto *bench = app.add_subcommand("bench", "Time the colouring on G(n,p) graphs");
  bench->add_option("--sizes", bench_args.sizes)->capture_default_str();
  bench->add_option("--density", bench_args.density)->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--n", bench_args.n, "Family index n")->capture_default_str();
  bench->add_option("--d", bench_args.d, "Family index d")->capture_default_str();
  bench->callback([&] { run = [&] { return cmd_bench(bench_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::ok : ExitCode::parse;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  try {
    auto start = std::chrono::steady_clock::now();
    Report report = run();
    if (timing) {
      report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
    const std::string text = render(report);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << output << "\n";
        return ExitCode::failure;
      }
      out << text;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return ExitCode::ok;
}
