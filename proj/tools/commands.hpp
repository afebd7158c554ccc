#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "syzcolor/graph.hpp"
#include "syzcolor/graph_io.hpp"

namespace syzcolor::cli {

inline constexpr const char *kToolVersion = "0.1.0";

/// Reports keep insertion order so the serialised form is byte-stable.
using Report = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, failure = 1, parse = 2, domain = 3, capacity = 4 };

struct ColorArgs {
  std::string input;
  GraphFormat format = GraphFormat::automatic;
  std::optional<int> n, d, i, j;
  std::optional<int> omega;
  bool verify = false;
  bool assume = false;
};

struct BettiArgs {
  std::string input;
  GraphFormat format = GraphFormat::automatic;
  int i = 0;
  int j = 2;
  std::string field = "q";
  bool vanishes = false;
  int jobs = 1;
};

struct BoundArgs {
  std::string name;
  std::vector<long long> params;
  bool table = false;
  int max_omega = 6;
};

struct CheckFreeArgs {
  std::string input;
  GraphFormat format = GraphFormat::automatic;
  int n = 2;
  int d = 0;
};

struct SpotcheckArgs {
  int i = 1;
  int j = 4;
  int count = 100;
  int n = 9;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string field = "q";
  int jobs = 1;
};

struct BenchArgs {
  std::vector<int> sizes;
  double density = 0.05;
  std::uint64_t seed = 1;
  int n = 6;
  int d = 2;
};

// Each command throws ParseError / DomainError / CapacityError on failure;
// exit_code_for maps those to the documented process exit codes.
Report cmd_color(const ColorArgs &args);
Report cmd_betti(const BettiArgs &args);
Report cmd_bound(const BoundArgs &args);
Report cmd_check_free(const CheckFreeArgs &args);
Report cmd_spotcheck(const SpotcheckArgs &args);
Report cmd_bench(const BenchArgs &args);

/// Graph overload used by tests and by the file-based commands.
Report color_graph(const Graph &g, const ColorArgs &args);

int exit_code_for(const std::exception &e);

/// FNV-1a 64 of the edge-list serialisation, as 16 lowercase hex digits.
std::string graph_digest(const Graph &g);

/// Serialised report text (2-space indented JSON plus trailing newline).
std::string render(const Report &report);

} // namespace syzcolor::cli
