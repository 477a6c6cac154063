#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nikodym/errors.hpp"
#include "nikodym/measure.hpp"
#include "nikodym/stochastic.hpp"
#include "support/oracles.hpp"

using namespace nikodym;

TEST(SplitMix64, ReferenceVectors) {
  // Published reference outputs for seeds 0 and 42.
  const std::uint64_t seed0[] = {0xe220a8397b1dcdafULL, 0x6e789e6aa1b965f4ULL, 0x06c45d188009454fULL,
                                 0xf88bb8a8724c81ecULL, 0x1b39896a51a8749bULL};
  const std::uint64_t seed42[] = {0xbdd732262feb6e95ULL, 0x28efe333b266f103ULL, 0x47526757130f9f52ULL,
                                  0x581ce1ff0e4ae394ULL, 0x09bc585a244823f2ULL};
  SplitMix64 a(0), b(42);
  for (std::uint64_t k = 0; k < 5; ++k) {
    EXPECT_EQ(a.next(), seed0[k]);
    EXPECT_EQ(b.next(), seed42[k]);
    EXPECT_EQ(SplitMix64::at(0, k), seed0[k]);
    EXPECT_EQ(SplitMix64::at(42, k), seed42[k]);
  }
}

TEST(SplitMix64, CounterFormMatchesSequentialStream) {
  SplitMix64 g(0xDEADBEEF);
  for (std::uint64_t k = 0; k < 1000; ++k) ASSERT_EQ(g.next(), SplitMix64::at(0xDEADBEEF, k));
}

TEST(PointInUnion, CrossingCentre) {
  EXPECT_TRUE(point_in_family_union(build_family(3), {Rational(1, 2), Rational(2, 9)}));
}

TEST(PointInUnion, TopEdgeMidpointIsUncovered) {
  for (int n : {3, 5, 9, 15}) {
    EXPECT_FALSE(point_in_family_union(build_family(n), {Rational(1, 2), Rational(1)})) << "n=" << n;
  }
}

TEST(PointInUnion, OutsideTheSquareIsUncovered) {
  const Family f = build_family(5);
  EXPECT_FALSE(point_in_family_union(f, {Rational(-1, 10), Rational(1, 2)}));
  EXPECT_FALSE(point_in_family_union(f, {Rational(11, 10), Rational(1, 2)}));
  EXPECT_FALSE(point_in_family_union(f, {Rational(1, 2), Rational(-1, 100)}));
}

TEST(PointInUnion, BoundaryIsClosed) {
  // (0, 0) is a vertex of the lowest Q member.
  EXPECT_TRUE(point_in_family_union(build_family(3), {Rational(0), Rational(0)}));
}

TEST(UnionIndex, AgreesWithLinearScan) {
  std::mt19937_64 rng(17);
  for (int n : {3, 7, 13}) {
    const Family f = build_family(n);
    std::vector<ConvexPolygon> polys = f.q_polygons();
    polys.insert(polys.end(), f.r_polygons().begin(), f.r_polygons().end());
    const UnionIndex index(polys);
    for (int t = 0; t < 3000; ++t) {
      const Point p{oracle::random_rational(rng, 0, 1, 4 * n * n), oracle::random_rational(rng, 0, 1, 4 * n * n)};
      ASSERT_EQ(index.contains(p), point_in_family_union(f, p)) << p.x << "," << p.y;
    }
    // Scaled dyadic samples against the exact rational coordinates.
    const Rational sx(2, 3), sy(1);
    const Rational unit(mpq_class(mpz_class(1) << kSampleBits));
    for (std::uint64_t k = 0; k < 3000; ++k) {
      const std::uint64_t X = SplitMix64::at(99, 2 * k) >> (64 - kSampleBits);
      const std::uint64_t Y = SplitMix64::at(99, 2 * k + 1) >> (64 - kSampleBits);
      const Point p{sx * Rational(mpq_class(mpz_class(static_cast<unsigned long>(X)))) / unit,
                    sy * Rational(mpq_class(mpz_class(static_cast<unsigned long>(Y)))) / unit};
      ASSERT_EQ(index.contains_scaled(sx, sy, X, Y), point_in_family_union(f, p)) << "k=" << k;
    }
  }
}

TEST(MonteCarlo, ZeroExtentGivesZero) {
  const MCEstimate e = mc_union_area(build_family(3), {Axis::vertical, Rational(0)}, 1000, 1);
  EXPECT_EQ(e.estimate, 0.0);
  EXPECT_EQ(e.std_error, 0.0);
  EXPECT_EQ(e.samples, 1000u);
}

TEST(MonteCarlo, RejectsZeroSamples) {
  EXPECT_THROW(mc_union_area(build_family(3), {Axis::vertical, Rational(1)}, 0, 1), InvalidParameter);
}

TEST(MonteCarlo, DeterministicForFixedSeed) {
  const Family f = build_family(5);
  const StripQuery q{Axis::horizontal, Rational(2, 3)};
  EXPECT_EQ(mc_union_area(f, q, 20000, 7), mc_union_area(f, q, 20000, 7));
  EXPECT_NE(mc_union_area(f, q, 20000, 7).hits, mc_union_area(f, q, 20000, 8).hits);
}

TEST(MonteCarlo, WorkerCountDoesNotChangeTheEstimate) {
  const Family f = build_family(7);
  const StripQuery q{Axis::vertical, Rational(1)};
  const MCEstimate one = mc_union_area(f, q, 50001, 3, 1);
  for (std::size_t w : {2u, 3u, 8u}) EXPECT_EQ(mc_union_area(f, q, 50001, 3, w), one) << w << " workers";
}

TEST(MonteCarlo, StandardErrorFollowsTheBinomialFormula) {
  const StripQuery q{Axis::horizontal, Rational(1, 2)};
  const MCEstimate e = mc_union_area(build_family(3), q, 10000, 5);
  const double p = static_cast<double>(e.hits) / 10000.0;
  EXPECT_DOUBLE_EQ(e.estimate, 0.5 * p);
  EXPECT_DOUBLE_EQ(e.std_error, 0.5 * std::sqrt(p * (1 - p) / 10000.0));
}

TEST(MonteCarlo, ThreeFamilyFullSquareWithinFourStandardErrors) {
  const Family f = build_family(3);
  const MCEstimate e = mc_union_area(f, {Axis::vertical, Rational(1)}, 1000000, 2024);
  const double exact = oracle::slab_union_area(f, {Axis::vertical, Rational(1)}).to_double();
  EXPECT_LE(std::abs(e.estimate - exact), 4 * e.std_error);
}

TEST(MonteCarlo, StripEstimatesTrackTheExactUnion) {
  const Family f = build_family(5);
  for (const StripQuery q : {StripQuery{Axis::vertical, Rational(1, 3)}, StripQuery{Axis::horizontal, Rational(3, 4)}}) {
    const MCEstimate e = mc_union_area(f, q, 200000, 11);
    const double exact = oracle::slab_union_area(f, q).to_double();
    EXPECT_LE(std::abs(e.estimate - exact), 4 * e.std_error) << to_string(q.axis);
  }
}
