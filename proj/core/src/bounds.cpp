#include "syzcolor/bounds.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "syzcolor/errors.hpp"

namespace syzcolor {
namespace {

void require(bool ok, const std::string &msg) {
  if (!ok) {
    throw DomainError(msg);
  }
}

void require_p_omega(const char *what, int p, int omega) {
  require(p >= 1, std::string(what) + ": p must be >= 1");
  require(omega >= 1, std::string(what) + ": omega must be >= 1");
}

void require_family(const char *what, int n, int d, int omega) {
  require(d >= 0, std::string(what) + ": d must be >= 0");
  require(n >= 2 * (d + 1), std::string(what) + ": need n >= 2(d+1), got n=" +
                                std::to_string(n) + " d=" + std::to_string(d));
  require(omega >= 1, std::string(what) + ": omega must be >= 1");
}

class GMemo {
public:
  const BigInt *find(int n, int d, int omega) const {
    std::shared_lock lock(mu_);
    auto it = table_.find({n, d, omega});
    return it == table_.end() ? nullptr : &it->second;
  }
  // std::map nodes are stable, so handing out pointers is safe.
  const BigInt &insert(int n, int d, int omega, BigInt v) {
    std::unique_lock lock(mu_);
    return table_.try_emplace({n, d, omega}, std::move(v)).first->second;
  }

private:
  mutable std::shared_mutex mu_;
  std::map<std::tuple<int, int, int>, BigInt> table_;
};

GMemo &g_memo() {
  static GMemo memo;
  return memo;
}

BigInt g_unchecked(int n, int d, int omega) {
  if (omega == 1) {
    return 1;
  }
  if (d == 0) {
    return n - 1;
  }
  if (const BigInt *hit = g_memo().find(n, d, omega)) {
    return *hit;
  }
  BigInt sum = 0;
  for (int k = 1; k <= omega; ++k) {
    sum += (omega - k + 1) * g_unchecked(std::max(n + k - omega - 2, 2 * d), d - 1, k);
  }
  return g_memo().insert(n, d, omega, std::move(sum));
}

} // namespace

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;
  }
  return r;
}

void validate(const FamilyIndex &idx) {
  require(idx.d >= 0, "family index: d must be >= 0");
  require(idx.n >= 2 * (idx.d + 1), "family index: need n >= 2(d+1), got n=" +
                                        std::to_string(idx.n) +
                                        " d=" + std::to_string(idx.d));
}

void validate(const BettiIndex &idx) {
  require(idx.i >= 0, "betti index: i must be >= 0");
  require(idx.j >= idx.i + 2, "betti index: need j >= i+2");
}

BigInt wagon(int p, int omega) {
  require_p_omega("wagon", p, omega);
  BigInt f = 1;
  const BigInt pairs = binomial(omega, 2);
  for (int q = 1; q < p; ++q) {
    f = pairs * f + omega;
  }
  return f;
}

BigInt pk2_bound(int p, int omega) {
  require_p_omega("pk2_bound", p, omega);
  return binomial(omega - 1 + 2 * (p - 1), 2 * (p - 1));
}

BigInt pk2_transform(int p, const BoundCallable &f, int omega) {
  require_p_omega("pk2_transform", p, omega);
  BigInt sum = 0;
  for (int k = 1; k <= omega; ++k) {
    sum += binomial(omega - k + 2 * p - 1, 2 * p - 1) * f(k);
  }
  return sum;
}

BigInt g_eval(int n, int d, int omega) {
  require_family("g_eval", n, d, omega);
  return g_unchecked(n, d, omega);
}

BigInt g_eval(const FamilyIndex &idx, int omega) { return g_eval(idx.n, idx.d, omega); }

BigInt closed_form_bound(int n, int d, int omega) {
  require_family("closed_form_bound", n, d, omega);
  return binomial(omega - 1 + 2 * d, 2 * d) + binomial(n - 2, 2 * d + 1);
}

bool sharpness_predicate(int n, int d, int omega) {
  require_family("sharpness_predicate", n, d, omega);
  if (d == 0) {
    return omega == 1 && n > 2;
  }
  return n > omega + 2 * d + 1;
}

BigInt single_bump(int n, int m) {
  require(n >= 0 && m >= 0, "single_bump: n and m must be >= 0");
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    sum += binomial(m + i, m);
  }
  return sum;
}

BigInt double_bump(int n, int m) {
  require(n >= 0 && m >= 0, "double_bump: n and m must be >= 0");
  BigInt sum = 0;
  for (int i = 0; i <= n; ++i) {
    sum += (n + 1 - i) * binomial(i + m, m);
  }
  return sum;
}

FamilyIndex betti_family(const BettiIndex &idx) {
  require(idx.i >= 0, "betti_family: i must be >= 0");
  require(idx.i + 2 <= idx.j && idx.j <= 2 * idx.i + 2,
          "betti_family: (i,j)=(" + std::to_string(idx.i) + "," + std::to_string(idx.j) +
              ") maps to n=j, d=j-i-2 outside the g domain n >= 2(d+1); need "
              "i+2 <= j <= 2i+2");
  return {idx.j, idx.j - idx.i - 2};
}

BigInt main_cor_bound(int i, int j, int omega) {
  auto fam = betti_family({i, j});
  require(omega >= 1, "main_cor_bound: omega must be >= 1");
  const int d = fam.d;
  return binomial(omega - 1 + 2 * d, 2 * d) + binomial(j - 2, 2 * d + 1);
}

bool is_parabolic(int i, int j) {
  require(i >= 0 && j >= 0, "is_parabolic: i and j must be >= 0");
  const long long diff = j - i;
  return diff * diff >= static_cast<long long>(j) + i + 2;
}

BigInt asym_bound(int i, int j, int omega) {
  require(j - i >= 3, "asym_bound: need j - i >= 3");
  require(is_parabolic(i, j), "asym_bound: (i,j) is not parabolic");
  require(omega >= 1, "asym_bound: omega must be >= 1");
  const int d = j - i - 2;
  return binomial(omega - 1 + 2 * d, 2 * d);
}

BoundFn::BoundFn(Kind kind) : kind_(std::move(kind)) {
  std::visit(
      [](const auto &k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Wagon> || std::is_same_v<T, Pk2> ||
                      std::is_same_v<T, PerfectJoin>) {
          require(k.p >= 1, "BoundFn: p must be >= 1");
        } else if constexpr (std::is_same_v<T, Pk2Transform>) {
          require(k.p >= 1, "BoundFn: p must be >= 1");
          require(k.inner != nullptr, "BoundFn: missing inner bound");
        } else if constexpr (std::is_same_v<T, ConstF>) {
          require(k.p >= 1, "BoundFn: p must be >= 1");
          require(k.c >= 1, "BoundFn: c must be >= 1");
        } else if constexpr (std::is_same_v<T, G> || std::is_same_v<T, ClosedForm>) {
          validate(FamilyIndex{k.n, k.d});
        } else if constexpr (std::is_same_v<T, TriangleFree>) {
          require(k.j >= 2, "BoundFn: j must be >= 2");
        } else if constexpr (std::is_same_v<T, Constant>) {
          require(k.c >= 1, "BoundFn: c must be >= 1");
        }
      },
      kind_);
}

BoundFn BoundFn::pk2_transform(int p, BoundFn inner) {
  return BoundFn(Pk2Transform{p, std::make_shared<const BoundFn>(std::move(inner))});
}

BigInt BoundFn::operator()(int omega) const {
  require(omega >= 1, "BoundFn: omega must be >= 1");
  return std::visit(
      [omega](const auto &k) -> BigInt {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Wagon>) {
          return syzcolor::wagon(k.p, omega);
        } else if constexpr (std::is_same_v<T, Pk2>) {
          return pk2_bound(k.p, omega);
        } else if constexpr (std::is_same_v<T, Pk2Transform>) {
          const BoundFn &inner = *k.inner;
          return syzcolor::pk2_transform(k.p, [&](int w) { return inner(w); }, omega);
        } else if constexpr (std::is_same_v<T, ConstF>) {
          return binomial(omega + 2 * k.p - 2, 2 * k.p - 1) +
                 k.c * binomial(omega + 2 * k.p - 2, 2 * k.p);
        } else if constexpr (std::is_same_v<T, G>) {
          return g_eval(k.n, k.d, omega);
        } else if constexpr (std::is_same_v<T, ClosedForm>) {
          return closed_form_bound(k.n, k.d, omega);
        } else if constexpr (std::is_same_v<T, PerfectJoin>) {
          return binomial(omega + 2 * k.p, 2 * k.p + 1);
        } else if constexpr (std::is_same_v<T, TriangleFree>) {
          require(omega <= 2, "triangle_free bound only applies for omega <= 2");
          return omega == 1 ? BigInt(1) : BigInt(k.j - 1);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return omega == 1 ? BigInt(1) : BigInt(k.c);
        } else if constexpr (std::is_same_v<T, Identity>) {
          return omega;
        } else {
          return k.fn(omega);
        }
      },
      kind_);
}

std::string BoundFn::describe() const {
  return std::visit(
      [](const auto &k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        auto s = [](int v) { return std::to_string(v); };
        if constexpr (std::is_same_v<T, Wagon>) {
          return "wagon(" + s(k.p) + ")";
        } else if constexpr (std::is_same_v<T, Pk2>) {
          return "pk2(" + s(k.p) + ")";
        } else if constexpr (std::is_same_v<T, Pk2Transform>) {
          return "pk2_transform(" + s(k.p) + ", " + k.inner->describe() + ")";
        } else if constexpr (std::is_same_v<T, ConstF>) {
          return "const_f(" + s(k.p) + ", " + s(k.c) + ")";
        } else if constexpr (std::is_same_v<T, G>) {
          return "g(" + s(k.n) + ", " + s(k.d) + ")";
        } else if constexpr (std::is_same_v<T, ClosedForm>) {
          return "closed_form(" + s(k.n) + ", " + s(k.d) + ")";
        } else if constexpr (std::is_same_v<T, PerfectJoin>) {
          return "perfect_join(" + s(k.p) + ")";
        } else if constexpr (std::is_same_v<T, TriangleFree>) {
          return "triangle_free(" + s(k.j) + ")";
        } else if constexpr (std::is_same_v<T, Constant>) {
          return "constant(" + s(k.c) + ")";
        } else if constexpr (std::is_same_v<T, Identity>) {
          return "identity";
        } else {
          return k.name;
        }
      },
      kind_);
}

} // namespace syzcolor
