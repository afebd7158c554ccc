#include "syzcolor/subsets.hpp"

namespace syzcolor {

std::vector<VertexSet> k_subsets(int n, int k) {
  std::vector<VertexSet> out;
  for_each_k_subset(n, k, [&](std::span<const Vertex> s) {
    out.emplace_back(std::vector<Vertex>(s.begin(), s.end()));
    return true;
  });
  return out;
}

} // namespace syzcolor
