#include "syzcolor/homology.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <thread>

#include "syzcolor/errors.hpp"
#include "syzcolor/subsets.hpp"

namespace syzcolor {
namespace {

using Mask = std::uint32_t;

// Induced subgraph small enough for mask arithmetic.
struct SmallGraph {
  int k = 0;
  std::array<Mask, kHomologyHardLimit> adj{};
};

SmallGraph small_from(const Graph &g, std::span<const Vertex> subset) {
  SmallGraph s;
  s.k = static_cast<int>(subset.size());
  for (int a = 0; a < s.k; ++a) {
    for (int b = a + 1; b < s.k; ++b) {
      if (g.adjacent(subset[a], subset[b])) {
        s.adj[a] |= Mask{1} << b;
        s.adj[b] |= Mask{1} << a;
      }
    }
  }
  return s;
}

SmallGraph small_from(const Graph &g) {
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return small_from(g, all);
}

bool has_isolated_vertex(const SmallGraph &s) {
  for (int v = 0; v < s.k; ++v) {
    if (s.adj[v] == 0) {
      return true;
    }
  }
  return false;
}

// faces[q] = independent sets of size q (sorted masks), q = 0..max_size.
std::vector<std::vector<Mask>> faces_by_size(const SmallGraph &s, int max_size) {
  std::vector<std::vector<Mask>> faces(max_size + 1);
  auto dfs = [&](auto &&self, Mask face, Mask allowed, int size) -> void {
    faces[size].push_back(face);
    if (size == max_size) {
      return;
    }
    for (Mask rest = allowed; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      Mask higher = v == 31 ? 0 : ~((Mask{2} << v) - 1);
      self(self, face | (Mask{1} << v), allowed & ~s.adj[v] & higher, size + 1);
    }
  };
  Mask all = s.k == 32 ? ~Mask{0} : (Mask{1} << s.k) - 1;
  dfs(dfs, 0, all, 0);
  for (auto &f : faces) {
    std::sort(f.begin(), f.end());
  }
  return faces;
}

template <class T> struct Entry {
  int col;
  T val;
};
template <class T> using Row = std::vector<Entry<T>>;

struct Overflow {};

struct Int64Ring {
  using T = std::int64_t;
  static T mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Overflow{};
    }
    return r;
  }
  static T sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw Overflow{};
    }
    return r;
  }
  static T gcd(T a, T b) { return std::gcd(a, b); }
};

struct BigRing {
  using T = BigInt;
  static T mul(const T &a, const T &b) { return a * b; }
  static T sub(const T &a, const T &b) { return a - b; }
  static T gcd(const T &a, const T &b) { return boost::multiprecision::gcd(a, b); }
};

// Fraction-free incremental echelon form over the integers: a row whose
// leading column already has a pivot p becomes lead(p) * row - lead(row) * p
// and is divided by the gcd of its entries. Rank equals rank over Q.
template <class Ring>
std::int64_t integer_rank(const std::vector<Row<std::int64_t>> &input, int cols) {
  using T = typename Ring::T;
  std::vector<int> pivot_of(cols, -1);
  std::vector<Row<T>> basis;
  Row<T> merged;
  for (const auto &in : input) {
    Row<T> r;
    r.reserve(in.size());
    for (const auto &e : in) {
      r.push_back({e.col, T(e.val)});
    }
    while (!r.empty()) {
      int lead = r.front().col;
      if (pivot_of[lead] < 0) {
        pivot_of[lead] = static_cast<int>(basis.size());
        basis.push_back(std::move(r));
        break;
      }
      const Row<T> &p = basis[pivot_of[lead]];
      const T a = p.front().val;
      const T b = r.front().val;
      merged.clear();
      std::size_t x = 0;
      std::size_t y = 0;
      while (x < r.size() || y < p.size()) {
        if (y == p.size() || (x < r.size() && r[x].col < p[y].col)) {
          merged.push_back({r[x].col, Ring::mul(a, r[x].val)});
          ++x;
        } else if (x == r.size() || p[y].col < r[x].col) {
          merged.push_back({p[y].col, Ring::sub(T(0), Ring::mul(b, p[y].val))});
          ++y;
        } else {
          T v = Ring::sub(Ring::mul(a, r[x].val), Ring::mul(b, p[y].val));
          if (v != 0) {
            merged.push_back({r[x].col, std::move(v)});
          }
          ++x;
          ++y;
        }
      }
      T content = 0;
      for (const auto &e : merged) {
        content = Ring::gcd(content, e.val);
      }
      if (content > 1) {
        for (auto &e : merged) {
          e.val /= content;
        }
      }
      std::swap(r, merged);
    }
  }
  return static_cast<std::int64_t>(basis.size());
}

std::int64_t mod_p_rank(const std::vector<Row<std::int64_t>> &input, int cols,
                        std::int64_t p) {
  auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) {
        result = result * base % p;
      }
      base = base * base % p;
    }
    return result;
  };
  std::vector<int> pivot_of(cols, -1);
  std::vector<Row<std::int64_t>> basis;
  Row<std::int64_t> merged;
  for (const auto &in : input) {
    Row<std::int64_t> r;
    for (const auto &e : in) {
      if (auto v = norm(e.val); v != 0) {
        r.push_back({e.col, v});
      }
    }
    while (!r.empty()) {
      int lead = r.front().col;
      if (pivot_of[lead] < 0) {
        std::int64_t inv = inverse(r.front().val);
        for (auto &e : r) {
          e.val = e.val * inv % p;
        }
        pivot_of[lead] = static_cast<int>(basis.size());
        basis.push_back(std::move(r));
        break;
      }
      const auto &piv = basis[pivot_of[lead]];
      const std::int64_t b = r.front().val;
      merged.clear();
      std::size_t x = 0;
      std::size_t y = 0;
      while (x < r.size() || y < piv.size()) {
        if (y == piv.size() || (x < r.size() && r[x].col < piv[y].col)) {
          merged.push_back(r[x++]);
        } else if (x == r.size() || piv[y].col < r[x].col) {
          merged.push_back({piv[y].col, norm(-b * piv[y].val)});
          ++y;
        } else {
          if (auto v = norm(r[x].val - b * piv[y].val); v != 0) {
            merged.push_back({r[x].col, v});
          }
          ++x;
          ++y;
        }
      }
      std::swap(r, merged);
    }
  }
  return static_cast<std::int64_t>(basis.size());
}

// Rank of the boundary map from size-q faces to size-(q-1) faces (q >= 1).
// q = 1 is the augmentation onto the empty face.
std::int64_t boundary_rank(const std::vector<std::vector<Mask>> &faces, int q,
                           const HomologyField &field) {
  if (q >= static_cast<int>(faces.size()) || faces[q].empty()) {
    return 0;
  }
  if (q == 1) {
    return 1;
  }
  const auto &lower = faces[q - 1];
  std::vector<Row<std::int64_t>> rows;
  rows.reserve(faces[q].size());
  for (Mask face : faces[q]) {
    Row<std::int64_t> r;
    int t = 0;
    for (Mask rest = face; rest != 0; rest &= rest - 1, ++t) {
      Mask smaller = face & ~(rest & -rest);
      int col = static_cast<int>(std::lower_bound(lower.begin(), lower.end(), smaller) -
                                 lower.begin());
      r.push_back({col, (t % 2 == 0) ? 1 : -1});
    }
    std::sort(r.begin(), r.end(), [](const auto &a, const auto &b) { return a.col < b.col; });
    rows.push_back(std::move(r));
  }
  const int cols = static_cast<int>(lower.size());
  if (field.kind() == HomologyField::Kind::prime) {
    return mod_p_rank(rows, cols, field.characteristic());
  }
  try {
    return integer_rank<Int64Ring>(rows, cols);
  } catch (const Overflow &) {
    return integer_rank<BigRing>(rows, cols);
  }
}

std::int64_t small_homology_dim(const SmallGraph &s, int dim, const HomologyField &field) {
  // An isolated vertex lies in every facet, so the complex is a cone.
  if (s.k == 0 || dim + 1 > s.k || has_isolated_vertex(s)) {
    return 0;
  }
  auto faces = faces_by_size(s, dim + 2);
  const auto chains = static_cast<std::int64_t>(faces[dim + 1].size());
  if (chains == 0) {
    return 0;
  }
  return chains - boundary_rank(faces, dim + 1, field) - boundary_rank(faces, dim + 2, field);
}

std::vector<std::int64_t> small_profile(const SmallGraph &s, const HomologyField &field) {
  std::vector<std::int64_t> dims(std::max(s.k, 1), 0);
  if (s.k == 0 || has_isolated_vertex(s)) {
    return dims;
  }
  auto faces = faces_by_size(s, s.k);
  std::vector<std::int64_t> rank(s.k + 2, 0);
  for (int q = 1; q <= s.k; ++q) {
    rank[q] = boundary_rank(faces, q, field);
  }
  for (int d = 0; d < s.k; ++d) {
    dims[d] = static_cast<std::int64_t>(faces[d + 1].size()) - rank[d + 1] - rank[d + 2];
  }
  return dims;
}

void require_capacity(const Graph &g, int limit, const char *what) {
  if (limit > kHomologyHardLimit) {
    throw CapacityError(std::string(what) + ": limit above hard cap " +
                        std::to_string(kHomologyHardLimit));
  }
  if (g.order() > limit) {
    throw CapacityError(std::string(what) + ": " + std::to_string(g.order()) +
                        " vertices exceeds limit " + std::to_string(limit));
  }
}

std::vector<std::vector<Vertex>> subsets_of_size(int n, int j) {
  std::vector<std::vector<Vertex>> out;
  for_each_k_subset(n, j, [&](std::span<const Vertex> s) {
    out.emplace_back(s.begin(), s.end());
    return true;
  });
  return out;
}

// Runs body(index) for every index in [0, count) across `jobs` threads.
template <class Body> void parallel_for(std::size_t count, int jobs, Body &&body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t t = 0; t < count; ++t) {
      body(t);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const int n_workers = static_cast<int>(std::min<std::size_t>(jobs, count));
  workers.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (std::size_t t = next++; t < count; t = next++) {
        body(t);
      }
    });
  }
  for (auto &w : workers) {
    w.join();
  }
}

} // namespace

HomologyField HomologyField::prime_field(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) {
    throw DomainError("field characteristic must be a prime below 2^31");
  }
  for (std::int64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) {
      throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    }
  }
  return HomologyField(Kind::prime, p);
}

HomologyField HomologyField::parse(const std::string &text) {
  if (text == "q") {
    return rationals();
  }
  if (text == "f2") {
    return prime_field(2);
  }
  if (text.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      long long p = std::stoll(text.substr(3), &used);
      if (used == text.size() - 3) {
        return prime_field(p);
      }
    } catch (const std::logic_error &) {
    }
  }
  throw DomainError("unknown field '" + text + "' (expected q, f2 or fp:<p>)");
}

std::string HomologyField::name() const {
  if (kind_ == Kind::rationals) {
    return "q";
  }
  return p_ == 2 ? "f2" : "fp:" + std::to_string(p_);
}

std::int64_t homology_dim(const Graph &g, int dim, const HomologyField &field, int limit) {
  if (dim < 0) {
    throw DomainError("homology_dim: dimension must be >= 0");
  }
  require_capacity(g, limit, "homology_dim");
  return small_homology_dim(small_from(g), dim, field);
}

std::vector<std::int64_t> reduced_homology(const Graph &g, const HomologyField &field,
                                           int limit) {
  require_capacity(g, limit, "reduced_homology");
  return small_profile(small_from(g), field);
}

std::int64_t betti(const Graph &g, const BettiIndex &idx, const BettiOptions &opts) {
  validate(idx);
  require_capacity(g, opts.limit, "betti");
  if (idx.j > g.order()) {
    return 0;
  }
  const int dim = idx.j - idx.i - 2;
  auto subsets = subsets_of_size(g.order(), idx.j);
  std::vector<std::int64_t> part(subsets.size(), 0);
  parallel_for(subsets.size(), opts.jobs, [&](std::size_t t) {
    part[t] = small_homology_dim(small_from(g, subsets[t]), dim, opts.field);
  });
  return std::accumulate(part.begin(), part.end(), std::int64_t{0});
}

Vanishing betti_vanishes(const Graph &g, const BettiIndex &idx, const BettiOptions &opts) {
  validate(idx);
  require_capacity(g, opts.limit, "betti_vanishes");
  if (idx.j > g.order()) {
    return {};
  }
  const int dim = idx.j - idx.i - 2;
  auto subsets = subsets_of_size(g.order(), idx.j);
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first{none};
  parallel_for(subsets.size(), opts.jobs, [&](std::size_t t) {
    if (t > first.load()) {
      return;
    }
    if (small_homology_dim(small_from(g, subsets[t]), dim, opts.field) != 0) {
      std::size_t cur = first.load();
      while (t < cur && !first.compare_exchange_weak(cur, t)) {
      }
    }
  });
  if (first.load() == none) {
    return {};
  }
  return {false, VertexSet(subsets[first.load()])};
}

BettiTable::BettiTable(int n)
    : n_(n), cells_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

std::int64_t BettiTable::at(int i, int j) const {
  if (i < 0 || j < i + 2 || j > n_) {
    return 0;
  }
  return cells_[static_cast<std::size_t>(i) * (n_ + 1) + j];
}

void BettiTable::add(int i, int j, std::int64_t v) {
  if (i < 0 || j < i + 2 || j > n_) {
    throw DomainError("BettiTable: index outside 0 <= i, i+2 <= j <= n");
  }
  cells_[static_cast<std::size_t>(i) * (n_ + 1) + j] += v;
}

BettiTable betti_table(const Graph &g, const BettiOptions &opts) {
  require_capacity(g, opts.limit, "betti_table");
  const int n = g.order();
  BettiTable table(n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::vector<std::int64_t>> profiles(count);
  parallel_for(count, opts.jobs, [&](std::size_t mask) {
    std::vector<Vertex> subset;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) {
        subset.push_back(v);
      }
    }
    profiles[mask] = small_profile(small_from(g, subset), opts.field);
  });
  for (std::size_t mask = 0; mask < count; ++mask) {
    const int j = std::popcount(mask);
    const auto &dims = profiles[mask];
    for (int d = 0; d < static_cast<int>(dims.size()); ++d) {
      if (dims[d] != 0 && j - d - 2 >= 0) {
        table.add(j - d - 2, j, dims[d]);
      }
    }
  }
  return table;
}

bool has_linear_resolution(const Graph &g, const HomologyField &field, int limit) {
  if (g.order() > limit) {
    throw CapacityError("has_linear_resolution: " + std::to_string(g.order()) +
                        " vertices exceeds limit " + std::to_string(limit));
  }
  auto table = betti_table(g, {field, std::max(limit, g.order()), 1});
  for (int j = 0; j <= g.order(); ++j) {
    for (int i = 0; i + 3 <= j; ++i) {
      if (table.at(i, j) != 0) {
        return false;
      }
    }
  }
  return true;
}

} // namespace syzcolor
