#include "syzcolor/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "syzcolor/errors.hpp"

namespace syzcolor {
namespace {

std::vector<std::string> tokens(const std::string &line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) {
    out.push_back(t);
  }
  return out;
}

long long to_int(const std::string &s, int line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     s + "'");
  }
  return v;
}

Graph build_checked(long long n, const std::vector<std::pair<long long, long long>> &edges,
                    const std::vector<int> &line_of) {
  if (n < 0 || n > (1 << 24)) {
    throw ParseError("vertex count out of supported range: " + std::to_string(n));
  }
  GraphBuilder b(static_cast<int>(n));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_of[k]) + ": vertex out of range");
    }
    if (u == v) {
      throw ParseError("line " + std::to_string(line_of[k]) + ": self-loop");
    }
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return std::move(b).build();
}

} // namespace

Graph read_dimacs(std::istream &in) {
  long long n = -1;
  std::vector<std::pair<long long, long long>> edges;
  std::vector<int> line_of;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto t = tokens(line);
    if (t.empty() || t[0] == "c") {
      continue;
    }
    if (t[0] == "p") {
      if (n >= 0) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      }
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected 'p edge <n> <m>'");
      }
      n = to_int(t[2], line_no);
      to_int(t[3], line_no);
    } else if (t[0] == "e") {
      if (n < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      }
      if (t.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      }
      edges.emplace_back(to_int(t[1], line_no) - 1, to_int(t[2], line_no) - 1);
      line_of.push_back(line_no);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + t[0] +
                       "'");
    }
  }
  if (n < 0) {
    throw ParseError("missing 'p edge' header");
  }
  return build_checked(n, edges, line_of);
}

Graph read_edge_list(std::istream &in) {
  long long n = 0;
  std::vector<std::pair<long long, long long>> edges;
  std::vector<int> line_of;
  std::string line;
  for (int line_no = 1; std::getline(in, line); ++line_no) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      auto c = tokens(line.substr(hash + 1));
      if (c.size() == 2 && c[0] == "vertices:") {
        n = std::max(n, to_int(c[1], line_no));
      }
      line.resize(hash);
    }
    auto t = tokens(line);
    if (t.empty()) {
      continue;
    }
    if (t.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    long long u = to_int(t[0], line_no);
    long long v = to_int(t[1], line_no);
    if (u < 0 || v < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": negative vertex");
    }
    n = std::max({n, u + 1, v + 1});
    edges.emplace_back(u, v);
    line_of.push_back(line_no);
  }
  return build_checked(n, edges, line_of);
}

Graph read_graph(std::istream &in, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::istringstream probe(text);
    format = GraphFormat::edge_list;
    for (std::string line; std::getline(probe, line);) {
      auto t = tokens(line);
      if (!t.empty() && t[0] == "p") {
        format = GraphFormat::dimacs;
        break;
      }
    }
    std::istringstream again(text);
    return format == GraphFormat::dimacs ? read_dimacs(again) : read_edge_list(again);
  }
  return format == GraphFormat::dimacs ? read_dimacs(in) : read_edge_list(in);
}

Graph read_graph_file(const std::filesystem::path &path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  return read_graph(in, format);
}

void write_dimacs(std::ostream &out, const Graph &g) {
  auto edges = g.edges();
  out << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) {
    out << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

void write_edge_list(std::ostream &out, const Graph &g) {
  out << "# vertices: " << g.order() << '\n';
  for (auto [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

GraphFormat parse_graph_format(const std::string &name) {
  if (name == "auto") {
    return GraphFormat::automatic;
  }
  if (name == "dimacs") {
    return GraphFormat::dimacs;
  }
  if (name == "edges") {
    return GraphFormat::edge_list;
  }
  throw DomainError("unknown graph format '" + name + "'");
}

} // namespace syzcolor
