#include <gtest/gtest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "twistchar/lattice.hpp"
#include "twistchar/quadform.hpp"

namespace twistchar {
namespace {

TEST(Quadform, MatrixInverse) {
  RationalMatrix m = {{rat(2), rat(1)}, {rat(1), rat(1)}};
  RationalMatrix inv = matrix_inverse(m);
  EXPECT_EQ(inv[0][0], rat(1));
  EXPECT_EQ(inv[0][1], rat(-1));
  EXPECT_EQ(inv[1][0], rat(-1));
  EXPECT_EQ(inv[1][1], rat(2));
  RationalMatrix sing = {{rat(1), rat(2)}, {rat(2), rat(4)}};
  EXPECT_THROW(matrix_inverse(sing), std::domain_error);
}

TEST(Quadform, LdltReconstructsTheMatrix) {
  for (int l = 1; l <= 4; ++l) {
    RationalMatrix m = folded_gram(l);
    LdltResult f = ldlt(m);
    for (int i = 0; i < l; ++i) {
      EXPECT_EQ(f.lower[i][i], rat(1));
      EXPECT_GT(f.diag[i], 0);
      for (int j = 0; j < l; ++j) {
        Rational acc = 0;
        for (int t = 0; t < l; ++t) acc += f.lower[i][t] * f.diag[t] * f.lower[j][t];
        EXPECT_EQ(acc, m[i][j]);
      }
    }
  }
}

TEST(Quadform, LdltRejectsIndefinite) {
  RationalMatrix m = {{rat(1), rat(2)}, {rat(2), rat(1)}};
  EXPECT_THROW(ldlt(m), std::domain_error);
  EXPECT_FALSE(is_positive_definite(m));
  EXPECT_TRUE(is_positive_definite(folded_gram(3)));
}

TEST(Quadform, FloorSqrtShiftSpotValues) {
  EXPECT_EQ(floor_sqrt_shift(rat(2), rat(0)), 1);
  EXPECT_EQ(floor_sqrt_shift(rat(4), rat(0)), 2);
  EXPECT_EQ(floor_sqrt_shift(rat(0), rat(7, 2)), 3);
  EXPECT_EQ(floor_sqrt_shift(rat(1, 4), rat(1, 2)), 1);
  EXPECT_EQ(floor_sqrt_shift(rat(2), rat(-3)), -2);  // -3 + 1.414... = -1.58...
  EXPECT_THROW(floor_sqrt_shift(rat(-1), rat(0)), std::domain_error);
}

TEST(Quadform, FloorSqrtShiftDefinition) {
  // r = floor(a + sqrt(t)): r - a <= sqrt(t) < r + 1 - a, verified without
  // taking any square roots.
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  for (int rep = 0; rep < 500; ++rep) {
    Rational t = rat(std::abs(num(rng)), den(rng));
    Rational a = rat(num(rng), den(rng));
    Rational r(floor_sqrt_shift(t, a));
    Rational d = r - a;
    EXPECT_TRUE(d <= 0 || d * d <= t) << "t=" << t << " a=" << a;
    Rational d1 = d + 1;
    EXPECT_TRUE(d1 > 0 && d1 * d1 > t) << "t=" << t << " a=" << a;
  }
}

TEST(Quadform, AffineValue) {
  AffineQuadratic q{{{rat(1), rat(0)}, {rat(0), rat(2)}}, {rat(1), rat(-1)}, rat(3, 2)};
  // 1*4 + 2*1 + (2 - (-1)) + 3/2
  EXPECT_EQ(q.value({2, -1}), rat(4 + 2 + 3) + rat(3, 2));
}

// Generates a random positive definite matrix as L D L^T with unit lower
// triangular L, so positive definiteness holds by construction.
AffineQuadratic random_form(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> small(-1, 1), dpick(1, 3), bpick(-2, 2);
  RationalMatrix lower(n, std::vector<Rational>(n, 0));
  std::vector<Rational> diag(n);
  for (int i = 0; i < n; ++i) {
    lower[i][i] = 1;
    for (int j = 0; j < i; ++j) lower[i][j] = rat(small(rng));
    diag[i] = rat(dpick(rng), 2);
  }
  RationalMatrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < n; ++t) m[i][j] += lower[i][t] * diag[t] * lower[j][t];
  std::vector<Rational> b(n);
  for (auto& x : b) x = rat(bpick(rng), 2);
  return AffineQuadratic{m, b, 0};
}

// Every integer point of the box [-box, box]^n with q.value <= bound.
std::set<std::vector<long>> brute_box(const AffineQuadratic& q, const Rational& bound, long box) {
  std::set<std::vector<long>> brute;
  int n = q.dim();
  std::vector<long> x(n, -box);
  while (true) {
    if (q.value(x) <= bound) brute.insert(x);
    int i = 0;
    while (i < n && x[i] == box) x[i++] = -box;
    if (i == n) break;
    ++x[i];
  }
  return brute;
}

TEST(Quadform, WindowedEnumerationMatchesBruteForceBox) {
  // Clamp the enumeration to the same box the brute-force scan covers, so
  // the two solution sets coincide no matter how far the unclamped
  // sublevel set extends.  Random linear parts shift the ellipsoid center.
  std::mt19937 rng(271828);
  const long box = 7;
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 12; ++rep) {
      AffineQuadratic q = random_form(rng, n);
      Rational bound = rat(3);

      std::vector<std::optional<long>> lo(n, std::optional<long>(-box));
      std::vector<std::optional<long>> hi(n, std::optional<long>(box));
      std::set<std::vector<long>> found;
      enumerate_quadratic_points(q, bound, lo, hi, [&](const std::vector<long>& x) {
        EXPECT_TRUE(found.insert(x).second) << "duplicate point";
        EXPECT_LE(q.value(x), bound);
      });

      EXPECT_EQ(found, brute_box(q, bound, box)) << "n=" << n << " rep=" << rep;
    }
  }
}

TEST(Quadform, UnboundedEnumerationMatchesBruteForceBox) {
  // With no linear part the sublevel set x^T (L D L^T) x <= 3 is centered at
  // the origin, and each back-substitution level satisfies
  // |x_d + sum_{j>d} L_jd x_j| <= sqrt(3 / D_d) <= sqrt(6) < 2.5,
  // so for n <= 3 every solution has |x_i| <= 2 + 4 + 2 < box.  The box scan
  // is therefore a complete reference for the unbounded enumeration.
  std::mt19937 rng(161803);
  const long box = 10;
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 12; ++rep) {
      AffineQuadratic q = random_form(rng, n);
      q.b.assign(n, Rational(0));
      Rational bound = rat(3);

      std::set<std::vector<long>> found;
      enumerate_integer_points(q, bound, [&](const std::vector<long>& x) {
        for (long xi : x) EXPECT_LE(std::abs(xi), 8) << "solution radius bound violated";
        EXPECT_TRUE(found.insert(x).second) << "duplicate point";
        EXPECT_LE(q.value(x), bound);
      });

      EXPECT_EQ(found, brute_box(q, bound, box)) << "n=" << n << " rep=" << rep;
    }
  }
}

TEST(Quadform, NonnegativeEnumerationRespectsBounds) {
  AffineQuadratic q{folded_gram(2), {}, 0};
  std::set<std::vector<long>> pts;
  enumerate_nonneg_points(q, rat(2), [&](const std::vector<long>& x) {
    for (long xi : x) EXPECT_GE(xi, 0);
    pts.insert(x);
  });
  // u^T A u = u1^2 - u1 u2 + u2^2/2 <= 2 over nonnegative integers.
  std::set<std::vector<long>> expected;
  for (long u1 = 0; u1 <= 3; ++u1)
    for (long u2 = 0; u2 <= 3; ++u2)
      if (q.value({u1, u2}) <= 2) expected.insert({u1, u2});
  EXPECT_EQ(pts, expected);
  EXPECT_TRUE(pts.count({1, 2}));  // value 1*1 - 2 + 2 = 1
}

TEST(Quadform, PerCoordinateWindowsAreHonored) {
  AffineQuadratic q{{{rat(1, 2)}}, {}, 0};
  std::vector<long> seen;
  enumerate_quadratic_points(q, rat(8), {std::optional<long>(-1)}, {std::optional<long>(2)},
                             [&](const std::vector<long>& x) { seen.push_back(x[0]); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<long>{-1, 0, 1, 2}));
}

TEST(Quadform, NodeBudgetGuard) {
  AffineQuadratic q{{{rat(1, 4), 0}, {0, rat(1, 4)}}, {}, 0};
  EXPECT_THROW(enumerate_quadratic_points(q, rat(400), {}, {},
                                          [](const std::vector<long>&) {}, 10),
               std::runtime_error);
  // Same search succeeds with a sufficient budget.
  long count = 0;
  enumerate_quadratic_points(q, rat(400), {}, {}, [&](const std::vector<long>&) { ++count; },
                             50'000'000);
  EXPECT_GT(count, 0);
}

TEST(Quadform, RejectsIndefiniteForms) {
  AffineQuadratic q{{{rat(1), rat(2)}, {rat(2), rat(1)}}, {}, 0};
  EXPECT_THROW(enumerate_integer_points(q, rat(1), [](const std::vector<long>&) {}),
               std::domain_error);
}

}  // namespace
}  // namespace twistchar
