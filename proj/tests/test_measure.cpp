#include <gtest/gtest.h>

#include <random>

#include "nikodym/errors.hpp"
#include "nikodym/measure.hpp"
#include "nikodym/profile.hpp"
#include "support/oracles.hpp"

using namespace nikodym;

namespace {

const StripQuery kFull{Axis::vertical, Rational(1)};

StripQuery vertical(const Rational& x0) { return {Axis::vertical, x0}; }
StripQuery horizontal(const Rational& y0) { return {Axis::horizontal, y0}; }

// Every (i, j) pair clipped with no pruning at all.
Rational brute_pair_sum(const Family& f, const StripQuery& q) {
  Rational total;
  for (const auto& qi : f.q()) {
    for (const auto& rj : f.r()) total += pair_intersection_area(qi, rj, q);
  }
  return total;
}

Rational brute_sum(const Family& f, const StripQuery& q) {
  Rational total;
  for (const auto& p : f.q()) total += area_in_strip(p, q);
  for (const auto& p : f.r()) total += area_in_strip(p, q);
  return total;
}

}  // namespace

TEST(StripPolygon, Shapes) {
  EXPECT_EQ(strip_polygon(vertical(Rational(1, 2))), ConvexPolygon::rectangle(0, 0, Rational(1, 2), 1));
  EXPECT_TRUE(strip_polygon(horizontal(0)).empty());
  EXPECT_EQ(strip_polygon(vertical(1)), ConvexPolygon::unit_square());
  EXPECT_EQ(strip_polygon(horizontal(Rational(1, 3))), ConvexPolygon::rectangle(0, 0, 1, Rational(1, 3)));
}

TEST(StripPolygon, RejectsExtentOutsideUnitInterval) {
  EXPECT_THROW(strip_polygon(vertical(Rational(-1, 2))), InvalidParameter);
  EXPECT_THROW(strip_polygon(horizontal(Rational(3, 2))), InvalidParameter);
}

TEST(AreaInStrip, FirstMemberOfTheThreeFamily) {
  const Parallelogram q0 = build_family(3).q()[0];
  EXPECT_EQ(area_in_strip(q0, vertical(Rational(1, 2))), Rational(1, 18));
  EXPECT_EQ(area_in_strip(q0, vertical(1)), Rational(1, 9));
  EXPECT_EQ(area_in_strip(q0, horizontal(1)), Rational(1, 9));
  EXPECT_EQ(area_in_strip(q0, horizontal(0)), Rational(0));
}

TEST(AreaInStrip, VerticalStripTakesProportionalShare) {
  std::mt19937_64 rng(3);
  for (int n : {3, 7, 11}) {
    const Family f = build_family(n);
    const Rational nn(n * n);
    for (int t = 0; t < 5; ++t) {
      const Rational x0 = oracle::random_rational(rng, 0, 1);
      for (const auto& p : f.q()) ASSERT_EQ(area_in_strip(p, vertical(x0)), x0 / nn);
      for (const auto& p : f.r()) ASSERT_EQ(area_in_strip(p, vertical(x0)), x0 / nn);
    }
  }
}

TEST(PairIntersection, FirstCrossing) {
  const Family f = build_family(3);
  EXPECT_EQ(pair_intersection_area(f.q()[0], f.r()[0], kFull), Rational(1, 54));
  EXPECT_EQ(pair_intersection_area(f.q()[0], f.r()[0], vertical(Rational(1, 4))), Rational(0));
}

TEST(PairIntersection, CrossingOutsideTheSquareIsBelowTheClosedForm) {
  // i = 4, j = 0: crossing abscissa (0 + 3 - 4) / 6 < 0.
  const Family f = build_family(3);
  const Rational a = pair_intersection_area(f.q()[2], f.r()[0], kFull);
  EXPECT_LT(a, Rational(1, 54));
  EXPECT_EQ(a, Rational(0));
}

TEST(OverlappingBoxes, MatchesExhaustiveBoxTest) {
  for (int n : {3, 5, 9}) {
    const Family f = build_family(n);
    const auto& qs = f.q_polygons();
    const auto& rs = f.r_polygons();
    std::set<std::pair<std::size_t, std::size_t>> cross, same;
    for (std::size_t a = 0; a < qs.size(); ++a) {
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (qs[a].bounds().overlaps_interior(rs[b].bounds())) cross.emplace(a, b);
      }
      for (std::size_t b = a + 1; b < qs.size(); ++b) {
        if (qs[a].bounds().overlaps_interior(qs[b].bounds())) same.emplace(a, b);
      }
    }
    const auto got_cross = overlapping_boxes(qs, rs);
    const auto got_same = overlapping_boxes(qs, qs, true);
    EXPECT_EQ(std::set(got_cross.begin(), got_cross.end()), cross);
    EXPECT_EQ(std::set(got_same.begin(), got_same.end()), same);
  }
}

TEST(FamilyDeviations, ThreeFamilyFullSquare) {
  const Family f = build_family(3);
  const DeviationResult d = family_deviations(f, kFull);
  EXPECT_EQ(d.sum_area, Rational(2, 3));
  EXPECT_EQ(d.dev_iii, Rational(1, 3));
  EXPECT_EQ(d.pair_sum, brute_pair_sum(f, kFull));
  EXPECT_EQ(d.pair_sum, Rational(7, 54));
  EXPECT_EQ(d.union_area, Rational(2, 3) - Rational(7, 54));
  EXPECT_EQ(d.union_area, oracle::slab_union_area(f, kFull));
  EXPECT_EQ(d.dev_ii, abs(d.union_area - Rational(3, 4)));
}

TEST(FamilyDeviations, PrunedPairSumEqualsUnprunedLoop) {
  std::mt19937_64 rng(8);
  for (int n : {3, 5, 7, 9}) {
    const FamilyMeasure m(build_family(n));
    for (int t = 0; t < 4; ++t) {
      const Rational e = oracle::random_rational(rng, 0, 1, 23);
      for (const StripQuery& q : {vertical(e), horizontal(e)}) {
        const DeviationResult d = m.deviations(q);
        ASSERT_EQ(d.pair_sum, brute_pair_sum(m.family(), q)) << "n=" << n << " extent=" << e;
        ASSERT_EQ(d.sum_area, brute_sum(m.family(), q));
      }
    }
  }
}

TEST(FamilyDeviations, UnionMatchesSlabSweepOracle) {
  for (int n : {3, 5, 7, 11, 15}) {
    const Family f = build_family(n);
    const FamilyMeasure m(f);
    const auto bs = oracle::bands(f);
    const auto crossings = oracle::band_crossings(bs);
    for (const Rational e : {Rational(0), Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(5, 8), Rational(1)}) {
      for (const StripQuery& q : {vertical(e), horizontal(e)}) {
        ASSERT_EQ(m.deviations(q).union_area, oracle::slab_union_area(bs, crossings, q))
            << "n=" << n << " " << to_string(q.axis) << " " << e;
      }
    }
  }
}

TEST(FamilyDeviations, SweepProfilesAgreeWithClipping) {
  for (int n : {3, 5, 9}) {
    const FamilyMeasure m(build_family(n));
    const auto grid = extent_grid(Rational(1, 2 * n * n));
    for (Axis axis : {Axis::vertical, Axis::horizontal}) {
      const auto swept = m.deviations_at(axis, grid);
      ASSERT_EQ(swept.size(), grid.size());
      for (std::size_t k = 0; k < grid.size(); k += 3) {
        const DeviationResult d = m.deviations({axis, grid[k]});
        ASSERT_EQ(swept[k].union_area, d.union_area) << "n=" << n << " extent=" << grid[k];
        ASSERT_EQ(swept[k].sum_area, d.sum_area);
        ASSERT_EQ(swept[k].pair_sum, d.pair_sum);
      }
    }
  }
}

TEST(FamilyDeviations, VerticalSumDeviationIsLinear) {
  std::mt19937_64 rng(31);
  for (int n = 3; n <= 15; n += 2) {
    const FamilyMeasure m(build_family(n));
    for (int t = 0; t < 6; ++t) {
      const Rational x0 = oracle::random_rational(rng, 0, 1, 101);
      ASSERT_EQ(m.deviations(vertical(x0)).dev_iii, x0 / Rational(n));
    }
  }
}

TEST(FamilyDeviations, MonotoneAndBounded) {
  for (int n : {3, 7}) {
    const FamilyMeasure m(build_family(n));
    const auto grid = extent_grid(Rational(1, 40));
    for (Axis axis : {Axis::vertical, Axis::horizontal}) {
      const auto rows = m.deviations_at(axis, grid);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        ASSERT_GE(rows[k].pair_sum.sign(), 0);
        ASSERT_GE(rows[k].union_area.sign(), 0);
        ASSERT_LE(rows[k].union_area, min(rows[k].sum_area, grid[k]));
        if (k > 0) {
          ASSERT_GE(rows[k].union_area, rows[k - 1].union_area);
          ASSERT_GE(rows[k].sum_area, rows[k - 1].sum_area);
        }
      }
    }
  }
}

TEST(FamilyDeviations, MirrorImageSwapsTheFamilies) {
  // x -> 1 - x maps each Q member onto an R member, so the crossing sum over
  // [0, x0] equals the crossing sum of the mirrored polygons over [1 - x0, 1].
  for (int n : {3, 5, 7}) {
    const Family f = build_family(n);
    const FamilyMeasure m(f);
    for (const Rational x0 : {Rational(1, 5), Rational(1, 2), Rational(4, 7), Rational(1)}) {
      const ConvexPolygon right = ConvexPolygon::rectangle(Rational(1) - x0, 0, 1, 1);
      Rational mirrored;
      for (const auto& q : f.q_polygons()) {
        for (const auto& r : f.r_polygons()) {
          mirrored += area(intersect_convex(intersect_convex(reflect_x(q), reflect_x(r)), right));
        }
      }
      ASSERT_EQ(m.deviations(vertical(x0)).pair_sum, mirrored) << "n=" << n << " x0=" << x0;
    }
  }
}

TEST(FamilyMeasureConsistency, UnionNeverExceedsSum) {
  const FamilyMeasure m(build_family(9));
  for (const auto& c : m.crossings()) {
    ASSERT_LE(c.area, Rational(1, 2 * 9 * 9 * 9));
    ASSERT_EQ(c.area, area(c.polygon));
  }
}

TEST(VerticalSection, MatchesIntervalLength) {
  const Parallelogram p(0, Rational(1, 3), Rational(1, 9));
  EXPECT_EQ(vertical_section(p.polygon(), Rational(1, 2)), Rational(1, 9));
  EXPECT_EQ(vertical_section(p.polygon(), Rational(2)), Rational(0));
  const auto tri = ConvexPolygon::normalize({{0, 0}, {2, 0}, {0, 2}});
  EXPECT_EQ(vertical_section(tri, Rational(1, 2)), Rational(3, 2));
}

TEST(SweepProfile, CumulativeMatchesClippedArea) {
  std::mt19937_64 rng(12);
  const Family f = build_family(5);
  std::vector<ConvexPolygon> polys = f.q_polygons();
  polys.push_back(ConvexPolygon::normalize({{0, 0}, {1, Rational(1, 2)}, {Rational(1, 3), 1}}));
  const SweepProfile profile(polys);
  for (int t = 0; t < 20; ++t) {
    const Rational x = oracle::random_rational(rng, 0, 1, 37);
    Rational expected;
    for (const auto& p : polys) expected += area(clip_halfplane(p, 1, 0, x));
    ASSERT_EQ(profile.at(x), expected) << "x=" << x;
  }
}

TEST(Brackets, FBracketEndpoints) {
  const DiagnosticBounds b = f_bracket(build_family(5), Rational(1, 2));
  EXPECT_EQ(b.lower, Rational(1, 2) - Rational(1, 5) - Rational(1, 25));
  EXPECT_EQ(b.upper, Rational(1, 2) - Rational(2, 25));
  EXPECT_EQ(b.quantity, family_deviations(build_family(5), horizontal(Rational(1, 2))).sum_area);
  EXPECT_EQ(b.within, b.lower <= b.quantity && b.quantity <= b.upper);
}

TEST(Brackets, FBracketAtTheTopEdge) {
  const DiagnosticBounds b = f_bracket(build_family(3), Rational(1));
  EXPECT_EQ(b.lower, Rational(1) - Rational(1, 3) - Rational(1, 9));
  EXPECT_EQ(b.upper, Rational(1) - Rational(2, 9));
  EXPECT_EQ(b.quantity, Rational(2, 3));
  EXPECT_TRUE(b.within);
}

TEST(Brackets, FBracketBelowEveryMember) {
  const DiagnosticBounds b = f_bracket(build_family(7), Rational(1, 49));
  EXPECT_LT(b.quantity, Rational(1, 49));
  EXPECT_FALSE(b.within);
}

TEST(Brackets, FBracketRejectsOutOfRangeHeight) {
  EXPECT_THROW(f_bracket(build_family(3), Rational(0)), InvalidParameter);
  EXPECT_THROW(f_bracket(build_family(3), Rational(3, 2)), InvalidParameter);
}

TEST(Brackets, PairSumBracketEndpoints) {
  const Rational n(31);
  const DiagnosticBounds v = pair_sum_bracket(build_family(31), kFull);
  EXPECT_EQ(v.lower, Rational(1, 4) * (Rational(1) - Rational(3) / n + Rational(1) / (n * n)));
  EXPECT_EQ(v.upper, Rational(1, 4) * (Rational(1) - Rational(3) / (Rational(2) * n) + Rational(3) / (Rational(4) * n * n)));

  const DiagnosticBounds h = pair_sum_bracket(build_family(31), horizontal(Rational(1, 2)));
  EXPECT_EQ(h.lower, Rational(1, 8) - Rational(1) / (Rational(4) * n));
  EXPECT_EQ(h.upper, Rational(1, 8) - Rational(3) / (Rational(4) * n) - Rational(1) / (Rational(4) * n * n));
  // The simplified horizontal upper end sits below its lower end.
  EXPECT_LT(h.upper, h.lower);
  EXPECT_FALSE(h.within);

  const DiagnosticBounds small = pair_sum_bracket(build_family(3), kFull);
  EXPECT_EQ(small.quantity, brute_pair_sum(build_family(3), kFull));
}

TEST(ExtentGrid, AppendsOneWhenStepDoesNotDivide) {
  EXPECT_EQ(extent_grid(Rational(1, 2)), (std::vector<Rational>{0, Rational(1, 2), 1}));
  EXPECT_EQ(extent_grid(Rational(2, 5)), (std::vector<Rational>{0, Rational(2, 5), Rational(4, 5), 1}));
  EXPECT_EQ(extent_grid(Rational(1)), (std::vector<Rational>{0, 1}));
  EXPECT_THROW(extent_grid(Rational(0)), InvalidParameter);
  EXPECT_THROW(extent_grid(Rational(2)), InvalidParameter);
}

TEST(SupDeviation, LinearSumDeviationPeaksAtTheFullStrip) {
  const FamilyMeasure m(build_family(3));
  const Rational h = default_grid_step(3);
  EXPECT_EQ(h, Rational(1, 36));
  EXPECT_EQ(sup_deviation(m, Axis::vertical, Property::iii), Rational(1, 3) + Rational(2) * h);
  EXPECT_GE(sup_deviation(m, Axis::vertical, Property::iii), Rational(1, 3));
}

TEST(SupDeviation, TwoPointGrid) {
  const FamilyMeasure m(build_family(5));
  for (Axis axis : {Axis::vertical, Axis::horizontal}) {
    const DeviationResult at0 = m.deviations({axis, Rational(0)});
    const DeviationResult at1 = m.deviations({axis, Rational(1)});
    EXPECT_EQ(sup_deviation(m, axis, Property::ii, Rational(1)), max(at0.dev_ii, at1.dev_ii) + Rational(7, 4));
    EXPECT_EQ(sup_deviation(m, axis, Property::iii, Rational(1)), max(at0.dev_iii, at1.dev_iii) + Rational(2));
  }
}

TEST(SupDeviation, BoundDominatesEveryProbedExtent) {
  std::mt19937_64 rng(101);
  for (int n : {5, 9}) {
    const FamilyMeasure m(build_family(n));
    const SupDeviations sup = sup_deviations(m);
    for (int t = 0; t < 25; ++t) {
      const Rational e = oracle::random_rational(rng, 0, 1, 997);
      for (Axis axis : {Axis::vertical, Axis::horizontal}) {
        const DeviationResult d = m.deviations({axis, e});
        ASSERT_LE(d.dev_ii, sup.get(axis, Property::ii));
        ASSERT_LE(d.dev_iii, sup.get(axis, Property::iii));
      }
    }
  }
}

TEST(SupDeviation, ShrinksAlongTheSweep) {
  Rational prev_ii(1), prev_iii(1);
  for (int n : {5, 11, 21}) {
    const SupDeviations s = sup_deviations(FamilyMeasure(build_family(n)));
    const Rational ii = max(s.ii_vertical, s.ii_horizontal);
    const Rational iii = max(s.iii_vertical, s.iii_horizontal);
    EXPECT_LT(ii, prev_ii) << "n=" << n;
    EXPECT_LT(iii, prev_iii) << "n=" << n;
    prev_ii = ii;
    prev_iii = iii;
  }
  EXPECT_TRUE(sup_deviations(FamilyMeasure(build_family(21))).all_below(Rational(1, 4)));
}

TEST(MinOddN, CapTooSmallIsNotFound) { EXPECT_FALSE(min_odd_n(Rational(1, 10), 3).has_value()); }

TEST(MinOddN, WeakToleranceIsMetEarly) {
  const auto r = min_odd_n(Rational(49, 100), 41);
  ASSERT_TRUE(r.has_value());
  EXPECT_LE(r->n, 7);
  EXPECT_TRUE(r->sup.all_below(Rational(49, 100)));
}

TEST(MinOddN, QuarterToleranceWithinSeventeen) {
  const auto r = min_odd_n(Rational(1, 4), 41);
  ASSERT_TRUE(r.has_value());
  EXPECT_LE(r->n, 17);
  if (r->n > 3) {
    const FamilyMeasure prev(build_family(r->n - 2));
    EXPECT_FALSE(covers_epsilon_band(prev.family(), Rational(1, 4)) && sup_deviations(prev).all_below(Rational(1, 4)));
  }
}

TEST(MinOddN, RejectsBadParameters) {
  EXPECT_THROW(min_odd_n(Rational(0), 41), InvalidParameter);
  EXPECT_THROW(min_odd_n(Rational(1, 2), 41), InvalidParameter);
  EXPECT_THROW(min_odd_n(Rational(1, 10), 1), InvalidParameter);
}
