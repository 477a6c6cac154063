#pragma once

#include <vector>

#include "nikodym/geometry.hpp"
#include "nikodym/rational.hpp"

namespace nikodym {

/// Largest n accepted by build_family unless the caller raises the cap.
inline constexpr int kDefaultNCap = 101;

/// The segment {0} x [b, b + delta] on the left edge of the unit square.
struct LeftInterval {
  Rational b;
  Rational delta;

  Rational lo() const { return b; }
  Rational hi() const { return b + delta; }
  friend bool operator==(const LeftInterval&, const LeftInterval&) = default;
};

/// conv{(0,b1), (0,b1+delta), (1,b2), (1,b2+delta)}: a slanted strip of
/// vertical thickness delta crossing the unit square from left to right.
class Parallelogram {
 public:
  /// Throws InvalidParameter unless delta > 0 and 0 <= b1, b2 <= 1 - delta.
  Parallelogram(Rational b1, Rational b2, Rational delta);

  const Rational& b1() const { return b1_; }
  const Rational& b2() const { return b2_; }
  const Rational& delta() const { return delta_; }

  ConvexPolygon polygon() const;

  friend bool operator==(const Parallelogram&, const Parallelogram&) = default;

 private:
  Rational b1_, b2_, delta_;
};

LeftInterval left_side(const Parallelogram& p);

/// The two slope families for one odd n: Q_i rises with slope 1/n, R_j falls
/// with slope -1/n, both indexed by the even integers 0..n^2-n-2 and both of
/// thickness 1/n^2. Immutable once built; polygons are realized at build time.
class Family {
 public:
  int n() const { return n_; }
  const std::vector<int>& indices() const { return indices_; }
  const std::vector<Parallelogram>& q() const { return q_; }
  const std::vector<Parallelogram>& r() const { return r_; }
  const std::vector<ConvexPolygon>& q_polygons() const { return q_polys_; }
  const std::vector<ConvexPolygon>& r_polygons() const { return r_polys_; }

  std::size_t member_count() const { return q_.size() + r_.size(); }

 private:
  friend Family build_family(int n, int n_cap);

  int n_ = 0;
  std::vector<int> indices_;
  std::vector<Parallelogram> q_, r_;
  std::vector<ConvexPolygon> q_polys_, r_polys_;
};

/// Even integers 0, 2, ..., n^2 - n - 2. Throws InvalidParameter for even n or n < 3.
std::vector<int> index_set(int n);

/// Throws InvalidParameter as index_set, or when n exceeds n_cap.
Family build_family(int n, int n_cap = kDefaultNCap);

/// Endpoints of a closed interval on the left edge.
struct CoverInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const CoverInterval&, const CoverInterval&) = default;
};

/// Maximal {0} x [lo, hi] inside the union of all left sides that contains
/// the height 1/2, found by sweeping the sorted left sides.
CoverInterval left_cover_interval(const Family& f);

/// [1/n, 1 - 1/n - 1/n^2], the covered band claimed for the construction.
/// Compare against left_cover_interval rather than using it in its place.
CoverInterval claimed_cover_interval(int n);

/// Whether the swept cover reaches [epsilon, 1 - epsilon].
/// Throws InvalidParameter unless 0 < epsilon < 1/2.
bool covers_epsilon_band(const Family& f, const Rational& epsilon);

/// Applies (x, y) -> (x, b + (y - b) / i) to every vertex. Area scales by 1/i.
/// Throws InvalidParameter for i < 1.
ConvexPolygon affine_contract(const ConvexPolygon& p, const Rational& b, long i);

}  // namespace nikodym
