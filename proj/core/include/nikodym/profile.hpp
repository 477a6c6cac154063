#pragma once

#include <span>
#include <vector>

#include "nikodym/geometry.hpp"
#include "nikodym/rational.hpp"

namespace nikodym {

/// Length of the intersection of p with the vertical line x = t (0 off the polygon).
Rational vertical_section(const ConvexPolygon& p, const Rational& t);

/// Total area of a set of convex polygons to the left of a moving vertical line.
///
/// The summed section length is piecewise linear in x with breakpoints at
/// vertex abscissae, so A(t) = sum area(p ∩ {x <= t}) is piecewise quadratic
/// and is integrated exactly. Evaluating many thresholds costs one sort of
/// the breakpoints plus a linear sweep.
class SweepProfile {
 public:
  SweepProfile() = default;
  explicit SweepProfile(std::span<const ConvexPolygon> polygons);

  /// A(t) for each threshold; thresholds must be sorted ascending.
  std::vector<Rational> cumulative(std::span<const Rational> thresholds) const;

  /// A(t) for a single threshold.
  Rational at(const Rational& t) const;

  std::size_t breakpoints() const { return events_.size(); }

 private:
  // On [t, next event) the summed section grows by alpha + beta * x.
  struct Event {
    Rational t;
    Rational alpha;
    Rational beta;
  };
  std::vector<Event> events_;
};

}  // namespace nikodym
