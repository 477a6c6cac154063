#pragma once

#include <span>
#include <vector>

#include "nikodym/rational.hpp"

namespace nikodym {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Axis-aligned closed box, used for quick overlap rejection.
struct Box {
  Rational xmin, ymin, xmax, ymax;

  /// True when the two boxes share a region of positive area.
  bool overlaps_interior(const Box& o) const {
    return xmin < o.xmax && o.xmin < xmax && ymin < o.ymax && o.ymin < ymax;
  }
  bool contains(const Box& o) const {
    return xmin <= o.xmin && o.xmax <= xmax && ymin <= o.ymin && o.ymax <= ymax;
  }
};

/// Convex polygon over exact rationals in normalized form.
///
/// Normalized form: strictly counterclockwise, no duplicate vertices, no
/// three consecutive collinear vertices, positive area. The empty vertex
/// list stands for the empty region; segments and points normalize to it.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  /// Cleans a convex chain into normalized form, starting at the lowest
  /// (then leftmost) vertex. Throws InvalidInput when the chain turns
  /// clockwise anywhere or winds more than once.
  static ConvexPolygon normalize(std::vector<Point> chain);

  /// Closed rectangle [x0,x1] x [y0,y1]; empty when either side has zero length.
  static ConvexPolygon rectangle(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);

  static ConvexPolygon unit_square();

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  /// Bounding box; undefined for the empty polygon.
  const Box& bounds() const { return bounds_; }

  friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) { return a.vertices_ == b.vertices_; }

 private:
  friend ConvexPolygon clip_halfplane(const ConvexPolygon&, const Rational&, const Rational&, const Rational&);
  static ConvexPolygon trusted(std::vector<Point> ccw);
  void compute_bounds();

  std::vector<Point> vertices_;
  Box bounds_;
};

/// Exact shoelace area; 0 for the empty polygon.
Rational area(const ConvexPolygon& p);

/// p ∩ { (x, y) : a*x + b*y <= c }. Throws InvalidInput when a = b = 0.
ConvexPolygon clip_halfplane(const ConvexPolygon& p, const Rational& a, const Rational& b, const Rational& c);

/// p ∩ q by clipping p against every edge halfplane of q.
ConvexPolygon intersect_convex(const ConvexPolygon& p, const ConvexPolygon& q);

/// Closed point-in-polygon test.
bool contains(const ConvexPolygon& p, const Point& pt);

/// Cross product of (b - a) and (c - a); positive for a left turn.
Rational orient(const Point& a, const Point& b, const Point& c);

/// Image of p under (x, y) -> (1 - x, y), renormalized.
ConvexPolygon reflect_x(const ConvexPolygon& p);

/// Swaps the coordinates of every vertex, (x, y) -> (y, x).
ConvexPolygon transpose(const ConvexPolygon& p);

}  // namespace nikodym
