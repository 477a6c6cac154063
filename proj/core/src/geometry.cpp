#include "nikodym/geometry.hpp"

#include <algorithm>

#include "nikodym/errors.hpp"

namespace nikodym {

namespace {

// Removes repeated vertices and vertices lying on the segment through their
// neighbours. Leaves fewer than three vertices when the chain has no area.
void cleanup(std::vector<Point>& v) {
  bool changed = true;
  while (changed && v.size() >= 2) {
    changed = false;
    for (std::size_t k = 0; k < v.size() && v.size() >= 2; ++k) {
      const std::size_t next = (k + 1) % v.size();
      if (v[k] == v[next]) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(next));
        changed = true;
        --k;
      }
    }
    for (std::size_t k = 0; k < v.size() && v.size() >= 3; ++k) {
      const Point& prev = v[(k + v.size() - 1) % v.size()];
      const Point& next = v[(k + 1) % v.size()];
      if (orient(prev, v[k], next).is_zero()) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        if (k > 0) --k;
      }
    }
  }
  if (v.size() < 3) v.clear();
}

// Number of sign changes of a cyclic sequence, ignoring zeros.
int cyclic_sign_changes(const std::vector<int>& signs) {
  int first = 0, last = 0, changes = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (first == 0) first = s;
    else if (s != last) ++changes;
    last = s;
  }
  if (first != 0 && last != first) ++changes;
  return changes;
}

}  // namespace

Rational orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

ConvexPolygon ConvexPolygon::trusted(std::vector<Point> ccw) {
  ConvexPolygon p;
  p.vertices_ = std::move(ccw);
  p.compute_bounds();
  return p;
}

void ConvexPolygon::compute_bounds() {
  if (vertices_.empty()) {
    bounds_ = Box{};
    return;
  }
  bounds_ = Box{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
  for (const Point& v : vertices_) {
    if (v.x < bounds_.xmin) bounds_.xmin = v.x;
    if (v.x > bounds_.xmax) bounds_.xmax = v.x;
    if (v.y < bounds_.ymin) bounds_.ymin = v.y;
    if (v.y > bounds_.ymax) bounds_.ymax = v.y;
  }
}

ConvexPolygon ConvexPolygon::normalize(std::vector<Point> chain) {
  cleanup(chain);
  if (chain.empty()) return {};

  const std::size_t n = chain.size();
  std::vector<int> dx(n), dy(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Point& prev = chain[(k + n - 1) % n];
    const Point& next = chain[(k + 1) % n];
    if (orient(prev, chain[k], next).sign() < 0) {
      throw InvalidInput("polygon chain is not convex counterclockwise");
    }
    dx[k] = (next.x - chain[k].x).sign();
    dy[k] = (next.y - chain[k].y).sign();
  }
  // All left turns but winding twice or more (a star) still fails this.
  if (cyclic_sign_changes(dx) > 2 || cyclic_sign_changes(dy) > 2) {
    throw InvalidInput("polygon chain winds more than once");
  }
  // Canonical start: lowest y, then lowest x.
  const auto first = std::min_element(chain.begin(), chain.end(), [](const Point& a, const Point& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(chain.begin(), first, chain.end());
  return trusted(std::move(chain));
}

ConvexPolygon ConvexPolygon::rectangle(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
  if (!(x0 < x1) || !(y0 < y1)) return {};
  return trusted({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon ConvexPolygon::unit_square() { return rectangle(0, 0, 1, 1); }

Rational area(const ConvexPolygon& p) {
  const auto v = p.vertices();
  if (v.size() < 3) return Rational(0);
  mpq_class twice = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& a = v[k];
    const Point& b = v[(k + 1) % v.size()];
    twice += a.x.raw() * b.y.raw() - b.x.raw() * a.y.raw();
  }
  return Rational(mpq_class(twice / 2));
}

ConvexPolygon clip_halfplane(const ConvexPolygon& p, const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("degenerate halfplane: a = b = 0");
  const auto v = p.vertices();
  if (v.empty()) return {};

  // slack >= 0 means inside.
  std::vector<Rational> slack;
  slack.reserve(v.size());
  bool all_in = true, all_out = true;
  for (const Point& pt : v) {
    slack.push_back(c - a * pt.x - b * pt.y);
    const int s = slack.back().sign();
    all_in = all_in && s >= 0;
    all_out = all_out && s <= 0;
  }
  if (all_in) return p;
  if (all_out) return {};

  std::vector<Point> out;
  out.reserve(v.size() + 1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::size_t next = (k + 1) % v.size();
    const int s0 = slack[k].sign();
    const int s1 = slack[next].sign();
    if (s0 >= 0) out.push_back(v[k]);
    if ((s0 > 0 && s1 < 0) || (s0 < 0 && s1 > 0)) {
      const Rational t = slack[k] / (slack[k] - slack[next]);
      out.push_back({v[k].x + t * (v[next].x - v[k].x), v[k].y + t * (v[next].y - v[k].y)});
    }
  }
  cleanup(out);
  return ConvexPolygon::trusted(std::move(out));
}

ConvexPolygon intersect_convex(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.empty() || q.empty()) return {};
  if (!p.bounds().overlaps_interior(q.bounds())) return {};
  ConvexPolygon result = p;
  const auto e = q.vertices();
  for (std::size_t k = 0; k < e.size() && !result.empty(); ++k) {
    const Point& from = e[k];
    const Point& to = e[(k + 1) % e.size()];
    const Rational a = to.y - from.y;
    const Rational b = from.x - to.x;
    result = clip_halfplane(result, a, b, a * from.x + b * from.y);
  }
  return result;
}

bool contains(const ConvexPolygon& p, const Point& pt) {
  const auto v = p.vertices();
  if (v.empty()) return false;
  const Box& bb = p.bounds();
  if (pt.x < bb.xmin || pt.x > bb.xmax || pt.y < bb.ymin || pt.y > bb.ymax) return false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (orient(v[k], v[(k + 1) % v.size()], pt).sign() < 0) return false;
  }
  return true;
}

ConvexPolygon reflect_x(const ConvexPolygon& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  // Reflection reverses orientation; walk backwards to stay counterclockwise.
  for (auto it = p.vertices().rbegin(); it != p.vertices().rend(); ++it) {
    out.push_back({Rational(1) - it->x, it->y});
  }
  return ConvexPolygon::normalize(std::move(out));
}

ConvexPolygon transpose(const ConvexPolygon& p) {
  std::vector<Point> out;
  out.reserve(p.size());
  for (auto it = p.vertices().rbegin(); it != p.vertices().rend(); ++it) {
    out.push_back({it->y, it->x});
  }
  return ConvexPolygon::normalize(std::move(out));
}

}  // namespace nikodym
