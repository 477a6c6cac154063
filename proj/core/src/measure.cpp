#include "nikodym/measure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nikodym/errors.hpp"
#include "nikodym/workers.hpp"

namespace nikodym {

namespace {

const Rational kThreeQuarters(3, 4);

// area(p ∩ strip), skipping the clip when the strip swallows p's box.
Rational clipped_area(const ConvexPolygon& p, const Rational& full_area, const ConvexPolygon& strip) {
  if (p.empty() || strip.empty()) return Rational(0);
  if (strip.bounds().contains(p.bounds())) return full_area;
  return area(intersect_convex(p, strip));
}

DeviationResult finish(const StripQuery& q, Rational sum_area, Rational pair_sum) {
  DeviationResult r;
  r.sum_area = std::move(sum_area);
  r.pair_sum = std::move(pair_sum);
  r.union_area = r.sum_area - r.pair_sum;
  r.dev_ii = abs(r.union_area - kThreeQuarters * q.measure());
  r.dev_iii = abs(r.sum_area - q.measure());
  if (r.pair_sum.sign() < 0 || r.union_area.sign() < 0 || r.union_area > q.measure() || r.union_area > r.sum_area) {
    throw ConsistencyError("inclusion-exclusion produced an impossible union area " + r.union_area.str() +
                           " for extent " + q.extent.str());
  }
  return r;
}

void check_extent(const Rational& extent) {
  if (extent.sign() < 0 || extent > Rational(1)) {
    throw InvalidParameter("strip extent must lie in [0, 1], got " + extent.str());
  }
}

}  // namespace

const char* to_string(Axis axis) { return axis == Axis::vertical ? "vertical" : "horizontal"; }
const char* to_string(Property which) { return which == Property::ii ? "ii" : "iii"; }

ConvexPolygon strip_polygon(const StripQuery& q) {
  check_extent(q.extent);
  if (q.axis == Axis::vertical) return ConvexPolygon::rectangle(0, 0, q.extent, 1);
  return ConvexPolygon::rectangle(0, 0, 1, q.extent);
}

Rational area_in_strip(const Parallelogram& p, const StripQuery& q) {
  return area(intersect_convex(p.polygon(), strip_polygon(q)));
}

Rational pair_intersection_area(const Parallelogram& qi, const Parallelogram& rj, const StripQuery& q) {
  return area(intersect_convex(intersect_convex(qi.polygon(), rj.polygon()), strip_polygon(q)));
}

std::vector<std::pair<std::size_t, std::size_t>> overlapping_boxes(std::span<const ConvexPolygon> a,
                                                                   std::span<const ConvexPolygon> b, bool same) {
  std::vector<std::size_t> order;
  order.reserve(b.size());
  Rational tallest = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k].empty()) continue;
    order.push_back(k);
    tallest = max(tallest, b[k].bounds().ymax - b[k].bounds().ymin);
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return b[x].bounds().ymin < b[y].bounds().ymin; });

  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    const Box& box = a[i].bounds();
    // Any overlapping box has ymin in (box.ymin - tallest, box.ymax).
    const Rational floor_y = box.ymin - tallest;
    auto it = std::upper_bound(order.begin(), order.end(), floor_y,
                               [&](const Rational& y, std::size_t k) { return y < b[k].bounds().ymin; });
    for (; it != order.end() && b[*it].bounds().ymin < box.ymax; ++it) {
      if (same && *it <= i) continue;
      if (box.overlaps_interior(b[*it].bounds())) out.emplace_back(i, *it);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Rational& SupDeviations::get(Axis axis, Property which) const {
  if (which == Property::ii) return axis == Axis::vertical ? ii_vertical : ii_horizontal;
  return axis == Axis::vertical ? iii_vertical : iii_horizontal;
}

bool SupDeviations::all_below(const Rational& epsilon) const {
  return ii_vertical < epsilon && ii_horizontal < epsilon && iii_vertical < epsilon && iii_horizontal < epsilon;
}

FamilyMeasure::FamilyMeasure(Family family, std::size_t workers)
    : family_(std::move(family)), workers_(workers == 0 ? worker_count() : workers) {
  verify_disjoint(family_.q_polygons(), "Q");
  verify_disjoint(family_.r_polygons(), "R");

  const auto& qp = family_.q_polygons();
  const auto& rp = family_.r_polygons();
  const auto candidates = overlapping_boxes(qp, rp);
  std::vector<Crossing> found(candidates.size());
  parallel_chunks(candidates.size(), workers_, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [qi, rj] = candidates[k];
      ConvexPolygon poly = intersect_convex(qp[qi], rp[rj]);
      Rational a = area(poly);
      found[k] = Crossing{qi, rj, std::move(poly), std::move(a)};
    }
  });
  crossings_.reserve(found.size());
  for (auto& c : found) {
    if (!c.polygon.empty()) crossings_.push_back(std::move(c));
  }
}

void FamilyMeasure::verify_disjoint(const std::vector<ConvexPolygon>& polys, const char* label) const {
  const auto pairs = overlapping_boxes(polys, polys, /*same=*/true);
  parallel_chunks(pairs.size(), workers_, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [a, b] = pairs[k];
      const Rational overlap = area(intersect_convex(polys[a], polys[b]));
      if (!overlap.is_zero()) {
        throw ConsistencyError(std::string(label) + "-members " + std::to_string(a) + " and " + std::to_string(b) +
                               " overlap with area " + overlap.str());
      }
    }
  });
}

DeviationResult FamilyMeasure::deviations(const StripQuery& q) const {
  const ConvexPolygon strip = strip_polygon(q);
  const auto& qp = family_.q_polygons();
  const auto& rp = family_.r_polygons();
  const Rational& member_area = family_.q().front().delta();

  const std::size_t members = qp.size() + rp.size();
  const std::size_t total = members + crossings_.size();
  std::vector<Rational> sum_part(workers_), pair_part(workers_);
  parallel_chunks(total, workers_, [&](std::size_t w, std::size_t begin, std::size_t end) {
    Rational s = 0, c = 0;
    for (std::size_t k = begin; k < end; ++k) {
      if (k < qp.size()) {
        s += clipped_area(qp[k], member_area, strip);
      } else if (k < members) {
        s += clipped_area(rp[k - qp.size()], member_area, strip);
      } else {
        const Crossing& x = crossings_[k - members];
        c += clipped_area(x.polygon, x.area, strip);
      }
    }
    sum_part[w] = std::move(s);
    pair_part[w] = std::move(c);
  });
  return finish(q, std::accumulate(sum_part.begin(), sum_part.end(), Rational(0)),
                std::accumulate(pair_part.begin(), pair_part.end(), Rational(0)));
}

const FamilyMeasure::Profiles& FamilyMeasure::profiles(Axis axis) const {
  const int slot = axis == Axis::vertical ? 0 : 1;
  std::call_once(profile_once_[slot], [&] {
    std::vector<ConvexPolygon> members;
    members.reserve(family_.member_count());
    std::vector<ConvexPolygon> cross;
    cross.reserve(crossings_.size());
    auto orient_for_axis = [&](const ConvexPolygon& p) { return axis == Axis::vertical ? p : transpose(p); };
    for (const auto& p : family_.q_polygons()) members.push_back(orient_for_axis(p));
    for (const auto& p : family_.r_polygons()) members.push_back(orient_for_axis(p));
    for (const auto& c : crossings_) cross.push_back(orient_for_axis(c.polygon));
    profiles_[slot] = Profiles{SweepProfile(members), SweepProfile(cross)};
  });
  return profiles_[slot];
}

std::vector<DeviationResult> FamilyMeasure::deviations_at(Axis axis, std::span<const Rational> extents) const {
  for (std::size_t k = 0; k < extents.size(); ++k) {
    check_extent(extents[k]);
    if (k > 0 && extents[k] < extents[k - 1]) throw InvalidParameter("extents must be sorted ascending");
  }
  const Profiles& p = profiles(axis);
  const auto sums = p.members.cumulative(extents);
  const auto pairs = p.crossings.cumulative(extents);
  std::vector<DeviationResult> out;
  out.reserve(extents.size());
  for (std::size_t k = 0; k < extents.size(); ++k) {
    out.push_back(finish(StripQuery{axis, extents[k]}, sums[k], pairs[k]));
  }
  return out;
}

DeviationResult family_deviations(const Family& f, const StripQuery& q) { return FamilyMeasure(f).deviations(q); }

DiagnosticBounds f_bracket(const FamilyMeasure& m, const Rational& y0) {
  if (y0.sign() <= 0 || y0 > Rational(1)) throw InvalidParameter("y0 must satisfy 0 < y0 <= 1, got " + y0.str());
  const long n = m.family().n();
  DiagnosticBounds d;
  d.quantity = m.deviations({Axis::horizontal, y0}).sum_area;
  d.lower = y0 - Rational(1, n) - Rational(1, n * n);
  d.upper = y0 - Rational(2, n * n);
  d.within = d.lower <= d.quantity && d.quantity <= d.upper;
  return d;
}

DiagnosticBounds f_bracket(const Family& f, const Rational& y0) { return f_bracket(FamilyMeasure(f), y0); }

DiagnosticBounds pair_sum_bracket(const FamilyMeasure& m, const StripQuery& q) {
  const long n = m.family().n();
  const Rational& t = q.extent;
  const Rational quarter(1, 4);
  DiagnosticBounds d;
  d.quantity = m.deviations(q).pair_sum;
  if (q.axis == Axis::vertical) {
    d.lower = t * quarter * (Rational(1) - Rational(3, n) + Rational(1, n * n));
    d.upper = t * quarter * (Rational(1) - Rational(3, 2 * n) + Rational(3, 4 * n * n));
  } else {
    d.lower = t * quarter - Rational(1, 4 * n);
    d.upper = t * quarter - Rational(3, 4 * n) - Rational(1, 4 * n * n);
  }
  d.within = d.lower <= d.quantity && d.quantity <= d.upper;
  return d;
}

DiagnosticBounds pair_sum_bracket(const Family& f, const StripQuery& q) {
  return pair_sum_bracket(FamilyMeasure(f), q);
}

Rational default_grid_step(int n) { return Rational(1, 4L * n * n); }

std::vector<Rational> extent_grid(const Rational& grid_step) {
  if (grid_step.sign() <= 0 || grid_step > Rational(1)) {
    throw InvalidParameter("grid step must satisfy 0 < h <= 1, got " + grid_step.str());
  }
  std::vector<Rational> grid;
  for (Rational t = 0; t < Rational(1); t += grid_step) grid.push_back(t);
  grid.push_back(Rational(1));
  return grid;
}

namespace {

Rational padding(Property which, const Rational& h) {
  return which == Property::ii ? Rational(7, 4) * h : Rational(2) * h;
}

Rational grid_max(const std::vector<DeviationResult>& devs, Property which) {
  Rational best = 0;
  for (const auto& d : devs) best = max(best, which == Property::ii ? d.dev_ii : d.dev_iii);
  return best;
}

}  // namespace

Rational sup_deviation(const FamilyMeasure& m, Axis axis, Property which, const std::optional<Rational>& grid_step) {
  const Rational h = grid_step.value_or(default_grid_step(m.family().n()));
  const auto grid = extent_grid(h);
  return grid_max(m.deviations_at(axis, grid), which) + padding(which, h);
}

Rational sup_deviation(const Family& f, Axis axis, Property which, const std::optional<Rational>& grid_step) {
  return sup_deviation(FamilyMeasure(f), axis, which, grid_step);
}

SupDeviations sup_deviations(const FamilyMeasure& m, const std::optional<Rational>& grid_step) {
  const Rational h = grid_step.value_or(default_grid_step(m.family().n()));
  const auto grid = extent_grid(h);
  const auto vertical = m.deviations_at(Axis::vertical, grid);
  const auto horizontal = m.deviations_at(Axis::horizontal, grid);
  return SupDeviations{
      grid_max(vertical, Property::ii) + padding(Property::ii, h),
      grid_max(horizontal, Property::ii) + padding(Property::ii, h),
      grid_max(vertical, Property::iii) + padding(Property::iii, h),
      grid_max(horizontal, Property::iii) + padding(Property::iii, h),
  };
}

std::optional<MinNResult> min_odd_n(const Rational& epsilon, int n_cap) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1, 2)) {
    throw InvalidParameter("epsilon must satisfy 0 < epsilon < 1/2, got " + epsilon.str());
  }
  if (n_cap < 3) throw InvalidParameter("n cap must be >= 3, got " + std::to_string(n_cap));
  for (int n = 3; n <= n_cap; n += 2) {
    Family f = build_family(n, n_cap);
    if (!covers_epsilon_band(f, epsilon)) continue;
    const FamilyMeasure m(std::move(f));
    SupDeviations sup = sup_deviations(m);
    if (sup.all_below(epsilon)) return MinNResult{n, std::move(sup)};
  }
  return std::nullopt;
}

}  // namespace nikodym
