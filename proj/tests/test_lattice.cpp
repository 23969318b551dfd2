#include <gtest/gtest.h>

#include <random>

#include "twistchar/lattice.hpp"
#include "twistchar/quadform.hpp"

namespace twistchar {
namespace {

LatticeVector simple(int i, int l) {
  LatticeVector a(2 * l, 0);
  a[i - 1] = 1;
  return a;
}

LatticeVector random_vector(std::mt19937& rng, int l, long lo = -4, long hi = 4) {
  std::uniform_int_distribution<long> dist(lo, hi);
  LatticeVector a(2 * l);
  for (auto& x : a) x = dist(rng);
  return a;
}

TEST(Lattice, GramOnSimpleRoots) {
  for (int l = 1; l <= 3; ++l) {
    for (int i = 1; i <= 2 * l; ++i) {
      for (int j = 1; j <= 2 * l; ++j) {
        long expected = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
        EXPECT_EQ(gram(simple(i, l), simple(j, l), l), expected);
      }
    }
  }
}

TEST(Lattice, GramValidatesDimensions) {
  EXPECT_THROW(gram(LatticeVector{1}, LatticeVector{1, 0}, 1), std::domain_error);
}

TEST(Lattice, NuIsAnIsometricInvolution) {
  std::mt19937 rng(12345);
  for (int l = 1; l <= 3; ++l) {
    for (int rep = 0; rep < 50; ++rep) {
      LatticeVector a = random_vector(rng, l), b = random_vector(rng, l);
      EXPECT_EQ(nu(nu(a, l), l), a);
      EXPECT_EQ(gram(nu(a, l), nu(b, l), l), gram(a, b, l));
    }
  }
}

TEST(Lattice, RootEnumerationCountAndSigns) {
  for (int l = 1; l <= 3; ++l) {
    auto roots = enumerate_roots(l);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(2 * l * (2 * l + 1)));
    std::size_t half = roots.size() / 2;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_EQ(roots[i].sign, i < half ? 1 : -1);
      // Every root has squared length 2.
      LatticeVector v = root_vector(roots[i], l);
      EXPECT_EQ(gram(v, v, l), 2);
    }
  }
}

TEST(Lattice, NuRootMatchesNuOnCoordinates) {
  for (int l = 1; l <= 3; ++l) {
    for (const auto& r : enumerate_roots(l)) {
      RootInterval s = nu_root(r, l);
      EXPECT_EQ(root_vector(s, l), nu(root_vector(r, l), l));
      EXPECT_EQ(s.len, r.len);
      EXPECT_EQ(s.sign, r.sign);
    }
  }
}

TEST(Lattice, ProjectionsDecomposeExactly) {
  std::mt19937 rng(777);
  for (int l = 1; l <= 3; ++l) {
    for (int rep = 0; rep < 50; ++rep) {
      LatticeVector a = random_vector(rng, l);
      FoldedVector f = project0(a, l);
      std::vector<long> g = project2(a, l);
      ASSERT_EQ(f.f.size(), static_cast<std::size_t>(l));
      ASSERT_EQ(g.size(), static_cast<std::size_t>(l));
      for (int i = 0; i < l; ++i) {
        EXPECT_EQ(f.f[i], a[i] + a[2 * l - 1 - i]);
        EXPECT_EQ(g[i], a[i] - a[2 * l - 1 - i]);
        // Recover both coordinates: the decomposition is exact.
        EXPECT_EQ(f.f[i] + g[i], 2 * a[i]);
        EXPECT_EQ(f.f[i] - g[i], 2 * a[2 * l - 1 - i]);
      }
    }
  }
}

TEST(Lattice, FoldedGramValues) {
  auto a1 = folded_gram(1);
  ASSERT_EQ(a1.size(), 1u);
  EXPECT_EQ(a1[0][0], rat(1, 2));

  auto a2 = folded_gram(2);
  ASSERT_EQ(a2.size(), 2u);
  EXPECT_EQ(a2[0][0], rat(1));
  EXPECT_EQ(a2[0][1], rat(-1, 2));
  EXPECT_EQ(a2[1][0], rat(-1, 2));
  EXPECT_EQ(a2[1][1], rat(1, 2));
}

TEST(Lattice, FoldedGramMatchesProjectedPairing) {
  // 2 <P0 a, P0 b> = <a, b> + <a, nu b> for all lattice vectors.
  std::mt19937 rng(999);
  for (int l = 1; l <= 3; ++l) {
    for (int rep = 0; rep < 50; ++rep) {
      LatticeVector a = random_vector(rng, l), b = random_vector(rng, l);
      Rational lhs = 2 * folded_pair(project0(a, l), project0(b, l), l);
      Rational rhs = rat(gram(a, b, l) + gram(a, nu(b, l), l));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Lattice, FoldedGramPositiveDefiniteUpToRankEight) {
  for (int l = 1; l <= 8; ++l) EXPECT_TRUE(is_positive_definite(folded_gram(l)));
}

TEST(Lattice, FoldedNormTelescopes) {
  // u^T A u = 1/2 [ u_1^2 + sum_{i<l} (u_i - u_{i+1})^2 ]  (1-based u_i).
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int l = 1; l <= 5; ++l) {
    for (int rep = 0; rep < 40; ++rep) {
      FoldedVector u;
      u.f.resize(l);
      for (auto& x : u.f) x = dist(rng);
      Rational expected = rat(u.f[0] * u.f[0]);
      for (int i = 0; i + 1 < l; ++i) {
        long d = u.f[i] - u.f[i + 1];
        expected += rat(d * d);
      }
      expected /= 2;
      EXPECT_EQ(folded_pair(u, u, l), expected);
    }
  }
}

TEST(Lattice, RhoNormValues) {
  EXPECT_EQ(rho_norm(1, 1), rat(1, 4));
  EXPECT_EQ(rho_norm(1, 2), rat(1, 2));
  EXPECT_EQ(rho_norm(2, 2), rat(1, 4));
  EXPECT_EQ(rho_norm(1, 3), rat(1, 2));
  EXPECT_EQ(rho_norm(2, 3), rat(1, 2));
  EXPECT_EQ(rho_norm(3, 3), rat(1, 4));
  EXPECT_THROW(rho_norm(0, 2), std::domain_error);
  EXPECT_THROW(rho_norm(3, 2), std::domain_error);
}

TEST(Lattice, ContainsMiddleCountsCoveredMiddleNodes) {
  // l = 1: middle nodes are alpha_1 and alpha_2.
  EXPECT_EQ(contains_middle({1, 1, 1}, 1), 1);
  EXPECT_EQ(contains_middle({2, 1, 1}, 1), 1);
  EXPECT_EQ(contains_middle({1, 2, 1}, 1), 2);
  // l = 2: middle nodes are alpha_2 and alpha_3.
  EXPECT_EQ(contains_middle({1, 1, 1}, 2), 0);
  EXPECT_EQ(contains_middle({2, 1, -1}, 2), 1);
  EXPECT_EQ(contains_middle({2, 2, 1}, 2), 2);
  EXPECT_EQ(contains_middle({1, 4, 1}, 2), 2);
  EXPECT_EQ(contains_middle({4, 1, 1}, 2), 0);
}

TEST(Lattice, CosetClassReducesModK) {
  FoldedVector u{{-1, 3}};
  EXPECT_EQ(coset_class(u, 2), (std::vector<long>{1, 1}));
  EXPECT_EQ(coset_class(u, 1), (std::vector<long>{0, 0}));
  EXPECT_EQ(coset_class(u, 3), (std::vector<long>{2, 0}));
}

TEST(Lattice, ParamsValidate) {
  ModelParams p;
  p.l = 1;
  p.k = 1;
  p.trunc = rat(4);
  EXPECT_NO_THROW(p.validate());
  p.l = 0;
  EXPECT_THROW(p.validate(), std::domain_error);
  p.l = 1;
  p.k = 0;
  EXPECT_THROW(p.validate(), std::domain_error);
  p.k = 1;
  p.trunc = rat(-1);
  EXPECT_THROW(p.validate(), std::domain_error);
}

}  // namespace
}  // namespace twistchar
