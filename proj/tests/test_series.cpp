#include <gtest/gtest.h>

#include "twistchar/series.hpp"

namespace twistchar {
namespace {

TEST(Series, CheckedArithmeticDetectsOverflow) {
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_EQ(checked_mul(-4, 5), -20);
  long long big = std::numeric_limits<long long>::max();
  EXPECT_THROW(checked_add(big, 1), std::overflow_error);
  EXPECT_THROW(checked_mul(big, 2), std::overflow_error);
}

TEST(Series, AddTermAndCoeff) {
  MultiSeries s(rat(2), 1);
  s.add_term(rat(1, 2), {3}, 4);
  s.add_term(rat(1, 2), {3}, 1);
  EXPECT_EQ(s.coeff(rat(1, 2), {3}), 5);
  EXPECT_EQ(s.coeff(rat(1, 2), {2}), 0);
  EXPECT_EQ(s.size(), 1u);
}

TEST(Series, TruncationDropsHighTerms) {
  MultiSeries s(rat(2), 1);
  s.add_term(rat(5, 2), {0}, 1);  // beyond trunc: dropped
  EXPECT_EQ(s.size(), 0u);
  s.add_term(rat(2), {0}, 1);  // exactly at trunc: kept
  EXPECT_EQ(s.size(), 1u);
}

TEST(Series, NegativeDegreeThrows) {
  MultiSeries s(rat(2), 1);
  EXPECT_THROW(s.add_term(rat(-1, 4), {0}, 1), std::domain_error);
}

TEST(Series, CancellationErasesTerms) {
  MultiSeries s(rat(2), 1);
  s.add_term(rat(1), {1}, 7);
  s.add_term(rat(1), {1}, -7);
  EXPECT_EQ(s.size(), 0u);
}

TEST(Series, RankMismatchThrows) {
  MultiSeries s(rat(2), 2);
  EXPECT_THROW(s.add_term(rat(1), {1}, 1), std::domain_error);
}

TEST(Series, ProductRespectsTruncationWindow) {
  // (1 + q) * (1 + q) truncated at 1 is 1 + 2q.
  MultiSeries a(rat(1), 0);
  a.add_term(rat(0), {}, 1);
  a.add_term(rat(1), {}, 1);
  MultiSeries p = a * a;
  EXPECT_EQ(p.coeff(rat(0), {}), 1);
  EXPECT_EQ(p.coeff(rat(1), {}), 2);
  EXPECT_EQ(p.size(), 2u);
}

TEST(Series, ProductTracksLaurentExponents) {
  MultiSeries a(rat(4), 1), b(rat(4), 1);
  a.add_term(rat(1, 2), {1}, 2);
  a.add_term(rat(1), {-1}, 1);
  b.add_term(rat(3, 2), {2}, 3);
  MultiSeries p = a * b;
  EXPECT_EQ(p.coeff(rat(2), {3}), 6);
  EXPECT_EQ(p.coeff(rat(5, 2), {1}), 3);
  EXPECT_EQ(p.size(), 2u);
}

TEST(Series, DistributesOverAddition) {
  MultiSeries a(rat(3), 1), b(rat(3), 1), c(rat(3), 1);
  a.add_term(rat(1, 2), {1}, 1);
  a.add_term(rat(1), {0}, 2);
  b.add_term(rat(0), {0}, 1);
  b.add_term(rat(3, 2), {-2}, 5);
  c.add_term(rat(1), {1}, -3);
  EXPECT_EQ(a * (b + c), a * b + a * c);
}

TEST(Series, FirstMismatchFindsLowestDifference) {
  MultiSeries a(rat(2), 1), b(rat(2), 1);
  a.add_term(rat(1, 2), {0}, 1);
  a.add_term(rat(1), {1}, 2);
  b.add_term(rat(1, 2), {0}, 1);
  b.add_term(rat(1), {1}, 3);
  b.add_term(rat(3, 2), {0}, 9);
  auto mm = a.first_mismatch(b);
  ASSERT_TRUE(mm.has_value());
  EXPECT_EQ(std::get<0>(*mm).first, rat(1));
  EXPECT_EQ(std::get<1>(*mm), 2);
  EXPECT_EQ(std::get<2>(*mm), 3);
  EXPECT_FALSE(a.first_mismatch(a).has_value());
}

TEST(Series, DeterministicRendering) {
  MultiSeries s(rat(2), 2);
  s.add_term(rat(1), {0, 1}, 1);
  s.add_term(rat(1, 2), {5, -1}, 2);
  s.add_term(rat(1), {-1, 3}, 4);
  EXPECT_EQ(s.str(),
            "q=1/2 y=(5,-1) c=2\n"
            "q=1/1 y=(-1,3) c=4\n"
            "q=1/1 y=(0,1) c=1\n");
}

TEST(Series, TruncatedCopy) {
  MultiSeries s(rat(3), 0);
  s.add_term(rat(1), {}, 1);
  s.add_term(rat(5, 2), {}, 2);
  MultiSeries t = s.truncated(rat(2));
  EXPECT_EQ(t.trunc(), rat(2));
  EXPECT_EQ(t.coeff(rat(1), {}), 1);
  EXPECT_EQ(t.coeff(rat(5, 2), {}), 0);
  EXPECT_THROW(s.truncated(rat(4)), std::domain_error);
}

TEST(Series, PartitionCountSpotValues) {
  // Partitions of 5 into at most 3 parts: 5, 4+1, 3+2, 3+1+1, 2+2+1.
  EXPECT_EQ(partition_count(3, 5), 5);
  EXPECT_EQ(partition_count(1, 7), 1);
  EXPECT_EQ(partition_count(0, 0), 1);
  EXPECT_EQ(partition_count(0, 3), 0);
  // Unrestricted partition numbers p(0..12).
  const long long p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (long j = 0; j <= 12; ++j) EXPECT_EQ(partition_count(j, j), p[j]);
}

TEST(Series, PochhammerInverseCountsBoundedPartitions) {
  // Coefficient of q^{j/2} in 1/(q^{1/2})_n is the number of partitions of
  // j into at most n parts.
  Rational trunc = rat(10);
  for (long n = 0; n <= 6; ++n) {
    MultiSeries s = pochhammer_inv(n, trunc, 0);
    for (long j = 0; j <= 20; ++j)
      EXPECT_EQ(s.coeff(rat(j, 2), {}), partition_count(n, j)) << "n=" << n << " j=" << j;
  }
}

TEST(Series, PochhammerInfiniteInverseCountsAllPartitions) {
  MultiSeries s = pochhammer_inf_inv(rat(6), 0);
  for (long j = 0; j <= 12; ++j) EXPECT_EQ(s.coeff(rat(j, 2), {}), partition_count(j, j));
}

TEST(Series, ThetaSumLevelOne) {
  // l = 1, k = 1: sum_eta q^{eta^2/4} y^eta.
  ModelParams p;
  p.l = 1;
  p.k = 1;
  p.trunc = rat(4);
  MultiSeries s = theta_sum(p);
  EXPECT_EQ(s.coeff(rat(0), {0}), 1);
  EXPECT_EQ(s.coeff(rat(1, 4), {1}), 1);
  EXPECT_EQ(s.coeff(rat(1, 4), {-1}), 1);
  EXPECT_EQ(s.coeff(rat(1), {2}), 1);
  EXPECT_EQ(s.coeff(rat(1), {-2}), 1);
  EXPECT_EQ(s.coeff(rat(9, 4), {3}), 1);
  EXPECT_EQ(s.coeff(rat(4), {4}), 1);
  EXPECT_EQ(s.coeff(rat(1, 2), {1}), 0);
  // 2 * floor(sqrt(4 * 4)) + 1 = 9 lattice points within the window.
  EXPECT_EQ(s.size(), 9u);
}

TEST(Series, ThetaSumLevelTwoHalvesTheExponent) {
  ModelParams p;
  p.l = 1;
  p.k = 2;
  p.trunc = rat(2);
  MultiSeries s = theta_sum(p);
  EXPECT_EQ(s.coeff(rat(1, 8), {1}), 1);
  EXPECT_EQ(s.coeff(rat(1, 2), {2}), 1);
  EXPECT_EQ(s.coeff(rat(9, 8), {3}), 1);
  EXPECT_EQ(s.coeff(rat(2), {4}), 1);
}

}  // namespace
}  // namespace twistchar
