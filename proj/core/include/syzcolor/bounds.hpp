#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>

#include "syzcolor/bigint.hpp"

namespace syzcolor {

/// Binomial coefficient; zero whenever k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Index (n, d) of a forbidden family and of its bounding function.
/// Valid when d >= 0 and n >= 2(d + 1).
struct FamilyIndex {
  int n = 2;
  int d = 0;
  friend bool operator==(const FamilyIndex &, const FamilyIndex &) = default;
};

/// Bi-graded position (i, j) of a Betti number. Valid when i >= 0, j >= i + 2.
struct BettiIndex {
  int i = 0;
  int j = 2;
  friend bool operator==(const BettiIndex &, const BettiIndex &) = default;
};

void validate(const FamilyIndex &idx);
void validate(const BettiIndex &idx);

// Wagon's recursion: f_1 = 1, f_{p+1}(w) = C(w, 2) f_p(w) + w.
BigInt wagon(int p, int omega);

// Bound for pK2-free graphs: C(w - 1 + 2(p - 1), 2(p - 1)).
BigInt pk2_bound(int p, int omega);

using BoundCallable = std::function<BigInt(int)>;

// Lifts a bound f for H-free graphs to pK2 u H-free graphs:
//   sum_{k=1}^{w} C(w - k + 2p - 1, 2p - 1) f(k).
BigInt pk2_transform(int p, const BoundCallable &f, int omega);

// Recursive bound for B_{n,d}-free graphs (memoised, thread safe).
BigInt g_eval(int n, int d, int omega);
BigInt g_eval(const FamilyIndex &idx, int omega);

// Upper estimate C(w - 1 + 2d, 2d) + C(n - 2, 2d + 1) >= g_eval(n, d, w).
BigInt closed_form_bound(int n, int d, int omega);

// True iff closed_form_bound(n, d, w) > g_eval(n, d, w).
bool sharpness_predicate(int n, int d, int omega);

// Literal left-hand sides of the two summation identities; the closed forms
// C(n + m + 1, m + 1) and C(n + m + 2, m + 2) are left to the callers.
BigInt single_bump(int n, int m);
BigInt double_bump(int n, int m);

// (i, j) -> (j, j - i - 2). Requires i + 2 <= j <= 2i + 2.
FamilyIndex betti_family(const BettiIndex &idx);

// C(w - 1 + 2D, 2D) + C(j - 2, 2D + 1) with D = j - i - 2.
BigInt main_cor_bound(int i, int j, int omega);

bool is_parabolic(int i, int j);

// C(w - 1 + 2D, 2D) with D = j - i - 2. Requires parabolic (i, j), j - i >= 3.
BigInt asym_bound(int i, int j, int omega);

/// A named bounding function omega -> chi-bound. Values are exact.
class BoundFn {
public:
  struct Wagon { int p; };
  struct Pk2 { int p; };
  struct Pk2Transform { int p; std::shared_ptr<const BoundFn> inner; };
  // Closed form for pK2 u H-free graphs when f_H(1) = 1, f_H(k) = c otherwise.
  struct ConstF { int p; int c; };
  struct G { int n; int d; };
  struct ClosedForm { int n; int d; };
  // C(w + 2p, 2p + 1): pK2 u H-free where H-free graphs are perfect.
  struct PerfectJoin { int p; };
  // j - 1 on triangle-free graphs (w <= 2).
  struct TriangleFree { int j; };
  // 1 at w = 1, c afterwards.
  struct Constant { int c; };
  struct Identity {};
  struct Custom { std::string name; BoundCallable fn; };

  using Kind = std::variant<Wagon, Pk2, Pk2Transform, ConstF, G, ClosedForm, PerfectJoin,
                            TriangleFree, Constant, Identity, Custom>;

  explicit BoundFn(Kind kind);

  static BoundFn wagon(int p) { return BoundFn(Wagon{p}); }
  static BoundFn pk2(int p) { return BoundFn(Pk2{p}); }
  static BoundFn pk2_transform(int p, BoundFn inner);
  static BoundFn const_f(int p, int c) { return BoundFn(ConstF{p, c}); }
  static BoundFn g(int n, int d) { return BoundFn(G{n, d}); }
  static BoundFn closed_form(int n, int d) { return BoundFn(ClosedForm{n, d}); }
  static BoundFn perfect_join(int p) { return BoundFn(PerfectJoin{p}); }
  static BoundFn triangle_free(int j) { return BoundFn(TriangleFree{j}); }
  static BoundFn constant(int c) { return BoundFn(Constant{c}); }
  static BoundFn identity() { return BoundFn(Identity{}); }
  static BoundFn custom(std::string name, BoundCallable fn) {
    return BoundFn(Custom{std::move(name), std::move(fn)});
  }

  BigInt operator()(int omega) const;
  const Kind &kind() const { return kind_; }
  std::string describe() const;

private:
  Kind kind_;
};

} // namespace syzcolor
