#include "syzcolor/random_graph.hpp"

#include "syzcolor/errors.hpp"

namespace syzcolor {

Graph random_gnp(int n, double p, std::mt19937_64 &rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("random_gnp: p must lie in [0, 1]");
  }
  if (n < 0) {
    throw DomainError("random_gnp: n must be >= 0");
  }
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_gnp(n, p, rng);
}

} // namespace syzcolor
