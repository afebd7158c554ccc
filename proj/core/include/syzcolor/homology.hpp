#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzcolor/bounds.hpp"
#include "syzcolor/graph.hpp"

namespace syzcolor {

inline constexpr int kHomologyLimit = 12;
inline constexpr int kLinearResolutionLimit = 8;
// Faces are held as 32-bit vertex masks; no limit may exceed this.
inline constexpr int kHomologyHardLimit = 24;

/// Coefficient field for homology: the rationals or GF(p).
class HomologyField {
public:
  enum class Kind { rationals, prime };

  static HomologyField rationals() { return HomologyField(Kind::rationals, 0); }
  /// Throws DomainError unless p is a prime below 2^31.
  static HomologyField prime_field(std::int64_t p);
  /// "q", "f2" or "fp:<p>".
  static HomologyField parse(const std::string &text);

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const HomologyField &, const HomologyField &) = default;

private:
  HomologyField(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

/// Limits and parallelism shared by the subset-scanning routines.
struct BettiOptions {
  HomologyField field = HomologyField::rationals();
  int limit = kHomologyLimit;
  /// Worker threads for subset scans; results do not depend on this.
  int jobs = 1;
};

/// dim of reduced homology H~_dim of the independence complex of g, via
/// ranks of the augmented boundary maps. Throws DomainError for dim < 0 and
/// CapacityError when g.order() > limit.
std::int64_t homology_dim(const Graph &g, int dim,
                          const HomologyField &field = HomologyField::rationals(),
                          int limit = kHomologyLimit);

/// dims[d] = dim H~_d(Ind(g)) for d = 0..max(order - 1, 0).
std::vector<std::int64_t> reduced_homology(
    const Graph &g, const HomologyField &field = HomologyField::rationals(),
    int limit = kHomologyLimit);

/// Sum over all j-subsets W of dim H~_{j-i-2}(Ind(g[W])). Zero when j > n.
std::int64_t betti(const Graph &g, const BettiIndex &idx, const BettiOptions &opts = {});

struct Vanishing {
  bool vanishes = true;
  /// Lexicographically first j-subset with nonzero homology.
  std::optional<VertexSet> witness;
};

Vanishing betti_vanishes(const Graph &g, const BettiIndex &idx,
                         const BettiOptions &opts = {});

/// All beta_{i,j} with 0 <= i, i + 2 <= j <= n.
class BettiTable {
public:
  explicit BettiTable(int n);
  int order() const { return n_; }
  /// Zero outside the stored range.
  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t v);

private:
  int n_;
  std::vector<std::int64_t> cells_;
};

BettiTable betti_table(const Graph &g, const BettiOptions &opts = {});

/// True iff beta_{i,j} = 0 whenever j > i + 2.
bool has_linear_resolution(const Graph &g,
                           const HomologyField &field = HomologyField::rationals(),
                           int limit = kLinearResolutionLimit);

} // namespace syzcolor
