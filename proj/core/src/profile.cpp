#include "nikodym/profile.hpp"

#include <algorithm>

namespace nikodym {

Rational vertical_section(const ConvexPolygon& p, const Rational& t) {
  const auto v = p.vertices();
  if (v.empty() || t < p.bounds().xmin || t > p.bounds().xmax) return Rational(0);
  bool seen = false;
  Rational lo, hi;
  auto take = [&](const Rational& y) {
    if (!seen) {
      lo = hi = y;
      seen = true;
    } else if (y < lo) {
      lo = y;
    } else if (y > hi) {
      hi = y;
    }
  };
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& a = v[k];
    const Point& b = v[(k + 1) % v.size()];
    if (a.x == t) take(a.y);
    const bool straddles = (a.x < t && t < b.x) || (b.x < t && t < a.x);
    if (straddles) take(a.y + (t - a.x) * (b.y - a.y) / (b.x - a.x));
  }
  return seen ? hi - lo : Rational(0);
}

SweepProfile::SweepProfile(std::span<const ConvexPolygon> polygons) {
  std::vector<Rational> xs;
  for (const ConvexPolygon& p : polygons) {
    if (p.empty()) continue;
    xs.clear();
    for (const Point& v : p.vertices()) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    Rational c0 = vertical_section(p, xs.front());
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      Rational c1 = vertical_section(p, xs[k + 1]);
      const Rational beta = (c1 - c0) / (xs[k + 1] - xs[k]);
      const Rational alpha = c0 - beta * xs[k];
      events_.push_back({xs[k], alpha, beta});
      events_.push_back({xs[k + 1], -alpha, -beta});
      c0 = std::move(c1);
    }
  }
  std::sort(events_.begin(), events_.end(), [](const Event& a, const Event& b) { return a.t < b.t; });

  // Merge events sharing an abscissa.
  std::vector<Event> merged;
  merged.reserve(events_.size());
  for (Event& e : events_) {
    if (!merged.empty() && merged.back().t == e.t) {
      merged.back().alpha += e.alpha;
      merged.back().beta += e.beta;
    } else {
      merged.push_back(std::move(e));
    }
  }
  events_ = std::move(merged);
}

std::vector<Rational> SweepProfile::cumulative(std::span<const Rational> thresholds) const {
  std::vector<Rational> out;
  out.reserve(thresholds.size());
  Rational acc = 0, alpha = 0, beta = 0;
  Rational pos;
  bool started = false;
  std::size_t e = 0;
  const Rational half(1, 2);

  auto advance_to = [&](const Rational& x) {
    if (started && x > pos) acc += alpha * (x - pos) + beta * (x * x - pos * pos) * half;
    pos = x;
    started = true;
  };
  for (const Rational& t : thresholds) {
    while (e < events_.size() && events_[e].t <= t) {
      advance_to(events_[e].t);
      alpha += events_[e].alpha;
      beta += events_[e].beta;
      ++e;
    }
    if (started) advance_to(t);
    out.push_back(acc);
  }
  return out;
}

Rational SweepProfile::at(const Rational& t) const {
  const Rational one[] = {t};
  return cumulative(one).front();
}

}  // namespace nikodym
