#include "commands.hpp"

#include <chrono>
#include <limits>
#include <random>
#include <sstream>

#include "syzcolor/bounds.hpp"
#include "syzcolor/coloring.hpp"
#include "syzcolor/errors.hpp"
#include "syzcolor/family.hpp"
#include "syzcolor/homology.hpp"
#include "syzcolor/oracles.hpp"
#include "syzcolor/random_graph.hpp"

namespace syzcolor::cli {
namespace {

Report header(const std::string &command) {
  Report r;
  r["tool"] = "syzcolor";
  r["version"] = kToolVersion;
  r["command"] = command;
  return r;
}

Report input_digest(const Graph &g) {
  Report in;
  in["vertices"] = g.order();
  in["edges"] = g.size();
  in["digest"] = graph_digest(g);
  return in;
}

Report vertex_array(const VertexSet &s) {
  Report a = Report::array();
  for (Vertex v : s) {
    a.push_back(v);
  }
  return a;
}

// Edge scan kept separate from the library's own properness check.
void revalidate(const Graph &g, const std::vector<int> &colors) {
  if (static_cast<int>(colors.size()) != g.order()) {
    throw std::logic_error("colouring has wrong length");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (colors[u] == colors[v]) {
        throw std::logic_error("colouring is not proper at edge " + std::to_string(u) +
                               "-" + std::to_string(v));
      }
    }
  }
}

int narrow(long long v, const std::string &what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw DomainError(what + " out of range");
  }
  return static_cast<int>(v);
}

std::vector<int> expect_params(const BoundArgs &args, std::size_t count,
                               const std::string &usage) {
  if (args.params.size() != count) {
    throw DomainError("bound " + args.name + " expects: " + usage);
  }
  std::vector<int> out;
  for (long long v : args.params) {
    out.push_back(narrow(v, "bound parameter"));
  }
  return out;
}

Report g_table(int max_omega) {
  if (max_omega < 1) {
    throw DomainError("--max-omega must be >= 1");
  }
  Report rows = Report::array();
  for (int d = 0; d <= 5; ++d) {
    for (int n = 2 * d + 2; n <= d + 7; ++n) {
      Report row;
      row["n"] = n;
      row["d"] = d;
      Report values = Report::array();
      for (int w = 1; w <= max_omega; ++w) {
        values.push_back(g_eval(n, d, w).str());
      }
      row["values"] = values;
      rows.push_back(row);
    }
  }
  return rows;
}

} // namespace

std::string graph_digest(const Graph &g) {
  std::ostringstream text;
  write_edge_list(text, g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  return hex.str();
}

std::string render(const Report &report) { return report.dump(2) + "\n"; }

int exit_code_for(const std::exception &e) {
  if (dynamic_cast<const ParseError *>(&e)) {
    return ExitCode::parse;
  }
  if (dynamic_cast<const DomainError *>(&e)) {
    return ExitCode::domain;
  }
  if (dynamic_cast<const CapacityError *>(&e)) {
    return ExitCode::capacity;
  }
  return ExitCode::failure;
}

Report color_graph(const Graph &g, const ColorArgs &args) {
  const bool by_family = args.n.has_value() || args.d.has_value();
  const bool by_betti = args.i.has_value() || args.j.has_value();
  if (by_family == by_betti) {
    throw DomainError("color: give exactly one of (--n, --d) or (--i, --j)");
  }
  Report r = header("color");
  Report a;
  ColoringResult res;
  FamilyIndex fam;
  if (by_family) {
    if (!args.n || !args.d) {
      throw DomainError("color: --n and --d must be given together");
    }
    fam = {*args.n, *args.d};
    a["n"] = fam.n;
    a["d"] = fam.d;
    ColorOptions opts;
    opts.omega = args.omega;
    opts.assume_free = args.assume;
    opts.verify_freeness = args.verify;
    res = color(g, fam, opts);
  } else {
    if (!args.i || !args.j) {
      throw DomainError("color: --i and --j must be given together");
    }
    BettiIndex idx{*args.i, *args.j};
    fam = betti_family(idx);
    a["i"] = idx.i;
    a["j"] = idx.j;
    BettiColorOptions opts;
    opts.omega = args.omega;
    opts.assume_vanishing = args.assume;
    opts.verify_vanishing = args.verify;
    res = color_for_betti(g, idx, opts);
  }
  a["omega"] = args.omega ? Report(*args.omega) : Report(nullptr);
  a["verify"] = args.verify;
  a["assume"] = args.assume;
  r["args"] = a;
  r["input"] = input_digest(g);
  revalidate(g, res.colors);
  Report out;
  out["family"] = {{"n", fam.n}, {"d", fam.d}};
  out["colors_used"] = res.colors_used;
  out["bound"] = res.certified_bound ? Report(res.certified_bound->str()) : Report(nullptr);
  out["bound_certified"] = res.bound_certified;
  out["within_bound"] = res.certified_bound
                            ? Report(BigInt(res.colors_used) <= *res.certified_bound)
                            : Report(nullptr);
  out["clique_trace"] = res.clique_trace;
  out["colors"] = res.colors;
  r["result"] = out;
  return r;
}

Report cmd_color(const ColorArgs &args) {
  return color_graph(read_graph_file(args.input, args.format), args);
}

Report cmd_betti(const BettiArgs &args) {
  Graph g = read_graph_file(args.input, args.format);
  BettiIndex idx{args.i, args.j};
  BettiOptions opts;
  opts.field = HomologyField::parse(args.field);
  opts.jobs = args.jobs;
  Report r = header("betti");
  r["args"] = {{"i", idx.i}, {"j", idx.j}, {"field", opts.field.name()},
               {"vanishes", args.vanishes}};
  r["input"] = input_digest(g);
  Report out;
  if (args.vanishes) {
    auto v = betti_vanishes(g, idx, opts);
    out["vanishes"] = v.vanishes;
    out["witness"] = v.witness ? vertex_array(*v.witness) : Report(nullptr);
  } else {
    out["betti"] = betti(g, idx, opts);
  }
  r["result"] = out;
  return r;
}

Report cmd_bound(const BoundArgs &args) {
  Report r = header("bound");
  Report a;
  a["name"] = args.name;
  a["params"] = args.params;
  a["table"] = args.table;
  Report out;
  if (args.table) {
    if (!args.name.empty() && args.name != "g") {
      throw DomainError("--table is only defined for g");
    }
    a["max_omega"] = args.max_omega;
    out["table"] = g_table(args.max_omega);
  } else if (args.name == "g") {
    auto p = expect_params(args, 3, "n d omega");
    out["value"] = g_eval(p[0], p[1], p[2]).str();
  } else if (args.name == "closed") {
    auto p = expect_params(args, 3, "n d omega");
    out["value"] = closed_form_bound(p[0], p[1], p[2]).str();
  } else if (args.name == "sharp") {
    auto p = expect_params(args, 3, "n d omega");
    out["value"] = sharpness_predicate(p[0], p[1], p[2]);
  } else if (args.name == "wagon") {
    auto p = expect_params(args, 2, "p omega");
    out["value"] = wagon(p[0], p[1]).str();
  } else if (args.name == "pk2") {
    auto p = expect_params(args, 2, "p omega");
    out["value"] = pk2_bound(p[0], p[1]).str();
  } else if (args.name == "const_f") {
    auto p = expect_params(args, 3, "p c omega");
    out["value"] = BoundFn::const_f(p[0], p[1])(p[2]).str();
  } else if (args.name == "perfect_join") {
    auto p = expect_params(args, 2, "p omega");
    out["value"] = BoundFn::perfect_join(p[0])(p[1]).str();
  } else if (args.name == "single_bump") {
    auto p = expect_params(args, 2, "n m");
    out["value"] = single_bump(p[0], p[1]).str();
  } else if (args.name == "double_bump") {
    auto p = expect_params(args, 2, "n m");
    out["value"] = double_bump(p[0], p[1]).str();
  } else if (args.name == "main_cor") {
    auto p = expect_params(args, 3, "i j omega");
    out["value"] = main_cor_bound(p[0], p[1], p[2]).str();
  } else if (args.name == "asym") {
    auto p = expect_params(args, 3, "i j omega");
    out["value"] = asym_bound(p[0], p[1], p[2]).str();
  } else if (args.name == "parabolic") {
    auto p = expect_params(args, 2, "i j");
    out["value"] = is_parabolic(p[0], p[1]);
  } else if (args.name == "betti_family") {
    auto p = expect_params(args, 2, "i j");
    auto fam = betti_family({p[0], p[1]});
    out["value"] = {{"n", fam.n}, {"d", fam.d}};
  } else {
    throw DomainError("unknown bound '" + args.name +
                      "' (g, closed, sharp, wagon, pk2, const_f, perfect_join, "
                      "single_bump, double_bump, main_cor, asym, parabolic, betti_family)");
  }
  r["args"] = a;
  r["result"] = out;
  return r;
}

Report cmd_check_free(const CheckFreeArgs &args) {
  Graph g = read_graph_file(args.input, args.format);
  FamilyIndex idx{args.n, args.d};
  validate(idx);
  auto witness = find_family_member(g, idx);
  Report r = header("check-free");
  r["args"] = {{"n", idx.n}, {"d", idx.d}};
  r["input"] = input_digest(g);
  Report out;
  out["free"] = !witness.has_value();
  if (witness) {
    out["witness"] = vertex_array(*witness);
    Report edges = Report::array();
    for (auto [u, v] : induced(g, *witness).edges()) {
      edges.push_back({(*witness)[u], (*witness)[v]});
    }
    out["witness_edges"] = edges;
  } else {
    out["witness"] = nullptr;
  }
  r["result"] = out;
  return r;
}

Report cmd_spotcheck(const SpotcheckArgs &args) {
  if (args.j - args.i < 3) {
    throw DomainError("spotcheck: need j - i >= 3");
  }
  if (!is_parabolic(args.i, args.j)) {
    throw DomainError("spotcheck: (i,j) is not parabolic: (j-i)^2 < j+i+2");
  }
  validate(BettiIndex{args.i, args.j});
  if (args.count < 0) {
    throw DomainError("spotcheck: count must be >= 0");
  }
  if (!(args.p >= 0.0 && args.p <= 1.0)) {
    throw DomainError("spotcheck: p must lie in [0, 1]");
  }
  if (args.n < 0 || args.n > std::min(kHomologyLimit, kExactChromaticLimit)) {
    throw CapacityError("spotcheck: n=" + std::to_string(args.n) + " exceeds limit " +
                        std::to_string(std::min(kHomologyLimit, kExactChromaticLimit)));
  }
  BettiOptions opts;
  opts.field = HomologyField::parse(args.field);
  opts.jobs = args.jobs;
  std::mt19937_64 rng(args.seed);
  int vanishing = 0;
  int within = 0;
  Report exceed = Report::array();
  for (int s = 0; s < args.count; ++s) {
    Graph g = random_gnp(args.n, args.p, rng);
    if (betti(g, {args.i, args.j}, opts) != 0) {
      continue;
    }
    ++vanishing;
    int omega = exact_clique_number(g);
    if (omega == 0) {
      ++within;
      continue;
    }
    if (BigInt(exact_chromatic_number(g)) <= asym_bound(args.i, args.j, omega)) {
      ++within;
    } else {
      exceed.push_back(s);
    }
  }
  Report r = header("spotcheck");
  r["args"] = {{"i", args.i},       {"j", args.j},         {"count", args.count},
               {"n", args.n},       {"p", args.p},         {"seed", args.seed},
               {"rng", "mt19937_64"}, {"field", opts.field.name()}};
  Report out;
  out["samples"] = args.count;
  out["vanishing"] = vanishing;
  out["within_asym_bound"] = within;
  out["fraction"] = vanishing == 0 ? Report(nullptr)
                                   : Report(static_cast<double>(within) / vanishing);
  out["exceeding_samples"] = exceed;
  r["result"] = out;
  return r;
}

Report cmd_bench(const BenchArgs &args) {
  FamilyIndex idx{args.n, args.d};
  validate(idx);
  if (!(args.density >= 0.0 && args.density <= 1.0)) {
    throw DomainError("bench: density must lie in [0, 1]");
  }
  std::mt19937_64 rng(args.seed);
  Report rows = Report::array();
  for (int size : args.sizes) {
    if (size < 0) {
      throw DomainError("bench: sizes must be >= 0");
    }
    Graph g = random_gnp(size, args.density, rng);
    ColorOptions opts;
    opts.exact_omega_limit = 0;
    auto start = std::chrono::steady_clock::now();
    auto res = color(g, idx, opts);
    auto stop = std::chrono::steady_clock::now();
    revalidate(g, res.colors);
    Report row;
    row["n"] = size;
    row["m"] = g.size();
    row["clique"] = res.clique_trace.empty() ? 0 : res.clique_trace.front();
    row["colors_used"] = res.colors_used;
    row["millis"] = std::chrono::duration<double, std::milli>(stop - start).count();
    rows.push_back(row);
  }
  Report r = header("bench");
  r["args"] = {{"sizes", args.sizes}, {"density", args.density}, {"seed", args.seed},
               {"rng", "mt19937_64"}, {"n", idx.n},            {"d", idx.d}};
  r["result"] = {{"rows", rows}};
  return r;
}

} // namespace syzcolor::cli
