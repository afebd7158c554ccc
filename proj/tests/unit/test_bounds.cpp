#include <gtest/gtest.h>

#include <algorithm>
#include <thread>

#include "syzcolor/bounds.hpp"
#include "syzcolor/errors.hpp"

using namespace syzcolor;

namespace {

// Pascal's triangle, independent of syzcolor::binomial.
BigInt choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  std::vector<BigInt> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> next(r + 1, 1);
    for (int c = 1; c < r; ++c) {
      next[c] = row[c - 1] + row[c];
    }
    row = std::move(next);
  }
  return row[k];
}

// Unmemoised recursion straight from the definition.
BigInt naive_g(int n, int d, int w) {
  if (w == 1) {
    return 1;
  }
  if (d == 0) {
    return n - 1;
  }
  BigInt s = 0;
  for (int k = 1; k <= w; ++k) {
    s += (w - k + 1) * naive_g(std::max(n + k - w - 2, 2 * d), d - 1, k);
  }
  return s;
}

} // namespace

TEST(Binomial, MatchesPascal) {
  for (int n = -2; n <= 40; ++n) {
    for (int k = -2; k <= 42; ++k) {
      ASSERT_EQ(binomial(n, k), choose(n, k)) << n << " " << k;
    }
  }
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(Wagon, Values) {
  EXPECT_EQ(wagon(2, 3), 6);
  EXPECT_EQ(wagon(1, 7), 1);
  EXPECT_EQ(wagon(3, 3), 21);
  for (int w = 1; w <= 12; ++w) {
    EXPECT_EQ(wagon(2, w), choose(w + 1, 2));
  }
  EXPECT_THROW(wagon(0, 3), DomainError);
  EXPECT_THROW(wagon(2, 0), DomainError);
}

TEST(Pk2, Values) {
  EXPECT_EQ(pk2_bound(3, 3), 15);
  for (int w = 1; w <= 12; ++w) {
    EXPECT_EQ(pk2_bound(1, w), 1);
    EXPECT_EQ(pk2_bound(2, w), choose(w + 1, 2));
  }
  EXPECT_THROW(pk2_bound(0, 1), DomainError);
}

TEST(Pk2Transform, Examples) {
  auto id = [](int k) { return BigInt(k); };
  EXPECT_EQ(pk2_transform(1, id, 2), 4);
  auto one = [](int) { return BigInt(1); };
  for (int p = 1; p <= 5; ++p) {
    EXPECT_EQ(pk2_transform(p, one, 1), 1);
  }
  for (int p = 1; p <= 4; ++p) {
    for (int c = 1; c <= 5; ++c) {
      auto f = [c](int k) { return BigInt(k == 1 ? 1 : c); };
      for (int w = 1; w <= 10; ++w) {
        BigInt closed = choose(w + 2 * p - 2, 2 * p - 1) + c * choose(w + 2 * p - 2, 2 * p);
        ASSERT_EQ(pk2_transform(p, f, w), closed) << p << " " << c << " " << w;
        ASSERT_EQ(BoundFn::const_f(p, c)(w), closed);
      }
    }
  }
  for (int p = 1; p <= 4; ++p) {
    for (int w = 1; w <= 10; ++w) {
      EXPECT_EQ(pk2_transform(p, id, w), choose(w + 2 * p, 2 * p + 1));
      EXPECT_EQ(BoundFn::perfect_join(p)(w), choose(w + 2 * p, 2 * p + 1));
    }
  }
}

TEST(GEval, GoldenValues) {
  EXPECT_EQ(g_eval(7, 1, 3), 13);
  EXPECT_EQ(g_eval(8, 1, 3), 16);
  EXPECT_EQ(g_eval(8, 1, 4), 26);
  EXPECT_EQ(g_eval(9, 2, 3), 26);
  EXPECT_EQ(g_eval(4, 1, 5), 15);
  for (int w = 1; w <= 10; ++w) {
    EXPECT_EQ(g_eval(5, 1, w), choose(w + 1, 2) + (w > 1 ? 1 : 0));
    EXPECT_EQ(g_eval(6, 1, w), w == 1 ? 1 : w == 2 ? 5 : choose(w + 1, 2) + 4);
    EXPECT_EQ(g_eval(6, 2, w), choose(w + 3, 4));
    EXPECT_EQ(g_eval(12, 5, w), choose(w + 9, 10));
    EXPECT_EQ(g_eval(8, 3, w), choose(w + 5, 6));
  }
}

TEST(GEval, MatchesNaiveRecursion) {
  for (int d = 0; d <= 3; ++d) {
    for (int n = 2 * d + 2; n <= 2 * d + 7; ++n) {
      for (int w = 1; w <= 6; ++w) {
        ASSERT_EQ(g_eval(n, d, w), naive_g(n, d, w)) << n << " " << d << " " << w;
      }
    }
  }
}

TEST(GEval, Domain) {
  EXPECT_THROW(g_eval(3, 1, 2), DomainError);
  EXPECT_THROW(g_eval(4, -1, 2), DomainError);
  EXPECT_THROW(g_eval(4, 1, 0), DomainError);
  EXPECT_EQ(g_eval(5, 0, 7), 4);
}

TEST(GEval, ConcurrentCallsAgree) {
  std::vector<std::thread> pool;
  std::vector<BigInt> out(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&out, t] { out[t] = g_eval(20 + t % 2, 4, 12); });
  }
  for (auto &th : pool) {
    th.join();
  }
  for (int t = 0; t < 8; ++t) {
    EXPECT_EQ(out[t], naive_g(20 + t % 2, 4, 12));
  }
}

TEST(ClosedForm, ValuesAndSharpness) {
  EXPECT_EQ(closed_form_bound(7, 1, 3), 16);
  EXPECT_EQ(closed_form_bound(2, 0, 5), 1);
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(closed_form_bound(n, 0, 4), n - 1);
  }
  EXPECT_TRUE(sharpness_predicate(7, 1, 3));
  EXPECT_FALSE(sharpness_predicate(5, 1, 3));
  EXPECT_TRUE(sharpness_predicate(3, 0, 1));
  for (int d = 0; d <= 3; ++d) {
    for (int n = 2 * d + 2; n <= 12; ++n) {
      for (int w = 1; w <= 8; ++w) {
        BigInt g = g_eval(n, d, w);
        BigInt c = closed_form_bound(n, d, w);
        ASSERT_LE(g, c);
        ASSERT_EQ(c > g, sharpness_predicate(n, d, w)) << n << " " << d << " " << w;
      }
    }
  }
}

TEST(Bumps, Values) {
  EXPECT_EQ(single_bump(2, 1), 6);
  EXPECT_EQ(double_bump(1, 0), 3);
  for (int m = 0; m <= 10; ++m) {
    EXPECT_EQ(single_bump(0, m), 1);
  }
  EXPECT_THROW(single_bump(-1, 0), DomainError);
  EXPECT_THROW(double_bump(0, -1), DomainError);
}

TEST(BettiFamily, Mapping) {
  EXPECT_EQ(betti_family({1, 4}), (FamilyIndex{4, 1}));
  EXPECT_EQ(betti_family({2, 5}), (FamilyIndex{5, 1}));
  EXPECT_EQ(betti_family({3, 5}), (FamilyIndex{5, 0}));
  EXPECT_THROW(betti_family({0, 3}), DomainError);
  EXPECT_THROW(betti_family({1, 2}), DomainError);
}

TEST(MainCor, Values) {
  EXPECT_EQ(main_cor_bound(1, 4, 3), 6);
  EXPECT_EQ(main_cor_bound(2, 5, 2), 4);
  EXPECT_EQ(g_eval(5, 1, 2), 4);
  for (int i = 0; i <= 6; ++i) {
    EXPECT_EQ(main_cor_bound(i, i + 2, 5), i + 1);
  }
  for (int i = 0; i <= 5; ++i) {
    for (int j = i + 2; j <= 2 * i + 2; ++j) {
      for (int w = 1; w <= 7; ++w) {
        auto fam = betti_family({i, j});
        EXPECT_LE(g_eval(fam, w), main_cor_bound(i, j, w));
      }
    }
  }
}

TEST(Asymptotic, ParabolicAndBound) {
  EXPECT_TRUE(is_parabolic(0, 3));
  EXPECT_FALSE(is_parabolic(5, 7));
  EXPECT_TRUE(is_parabolic(1, 4));
  EXPECT_EQ(asym_bound(0, 3, 2), 3);
  EXPECT_EQ(asym_bound(1, 4, 3), 6);
  EXPECT_THROW(asym_bound(5, 7, 2), DomainError);
  EXPECT_THROW(asym_bound(0, 2, 2), DomainError);
}

TEST(BoundFn, DescribeAndEvaluate) {
  EXPECT_EQ(BoundFn::g(7, 1)(3), 13);
  EXPECT_EQ(BoundFn::closed_form(7, 1)(3), 16);
  EXPECT_EQ(BoundFn::wagon(3)(3), 21);
  EXPECT_EQ(BoundFn::pk2(3)(3), 15);
  EXPECT_EQ(BoundFn::identity()(9), 9);
  EXPECT_EQ(BoundFn::constant(4)(1), 1);
  EXPECT_EQ(BoundFn::constant(4)(3), 4);
  EXPECT_EQ(BoundFn::triangle_free(5)(2), 4);
  EXPECT_THROW(BoundFn::triangle_free(5)(3), DomainError);
  auto lifted = BoundFn::pk2_transform(1, BoundFn::identity());
  EXPECT_EQ(lifted(2), 4);
  EXPECT_FALSE(lifted.describe().empty());
  auto sq = BoundFn::custom("square", [](int w) { return BigInt(w) * w; });
  EXPECT_EQ(sq(5), 25);
  EXPECT_NE(sq.describe().find("square"), std::string::npos);
}
