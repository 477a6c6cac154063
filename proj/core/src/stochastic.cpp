#include "nikodym/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nikodym/errors.hpp"
#include "nikodym/workers.hpp"

namespace nikodym {

namespace {

__extension__ typedef __int128 i128;

constexpr std::size_t kColumns = 16;
constexpr std::size_t kMaxRows = 1u << 14;
// Integer halfplane coefficients and sample scales stay below these bounds so
// that every product in contains_scaled fits in 127 bits.
const mpz_class kCoeffLimit = mpz_class(1) << 40;
constexpr std::int64_t kScaleLimit = std::int64_t{1} << 16;

std::optional<std::int64_t> small_int(const mpz_class& v) {
  if (abs(v) >= kCoeffLimit) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

mpz_class lcm3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t());
  return r;
}

// y-range of a convex polygon over the closed slab x0 <= x <= x1.
std::optional<std::pair<Rational, Rational>> slab_y_range(const ConvexPolygon& p, const Rational& x0,
                                                          const Rational& x1) {
  const auto v = p.vertices();
  if (v.empty() || p.bounds().xmax < x0 || p.bounds().xmin > x1) return std::nullopt;
  std::optional<std::pair<Rational, Rational>> range;
  auto take = [&](const Rational& y) {
    if (!range) range.emplace(y, y);
    else if (y < range->first) range->first = y;
    else if (y > range->second) range->second = y;
  };
  for (std::size_t k = 0; k < v.size(); ++k) {
    const Point& a = v[k];
    const Point& b = v[(k + 1) % v.size()];
    if (x0 <= a.x && a.x <= x1) take(a.y);
    for (const Rational* x : {&x0, &x1}) {
      if ((a.x < *x && *x < b.x) || (b.x < *x && *x < a.x)) take(a.y + (*x - a.x) * (b.y - a.y) / (b.x - a.x));
    }
  }
  return range;
}

struct Scale {
  std::int64_t num = 0, den = 1;
  bool small = false;
};

Scale small_scale(const Rational& s) {
  Scale out;
  const mpz_class num = s.numerator(), den = s.denominator();
  if (num >= 0 && num < kScaleLimit && den < kScaleLimit) {
    out.num = num.get_si();
    out.den = den.get_si();
    out.small = true;
  }
  return out;
}

}  // namespace

bool point_in_family_union(const Family& f, const Point& pt) {
  for (const auto& p : f.q_polygons()) {
    if (contains(p, pt)) return true;
  }
  for (const auto& p : f.r_polygons()) {
    if (contains(p, pt)) return true;
  }
  return false;
}

UnionIndex::UnionIndex(const std::vector<ConvexPolygon>& polygons) {
  cols_ = kColumns;
  rows_ = std::clamp<std::size_t>(4 * polygons.size(), 16, kMaxRows);
  cells_.resize(cols_ * rows_);

  for (const ConvexPolygon& poly : polygons) {
    if (poly.empty()) continue;
    Shape shape;
    shape.integral = true;
    const auto v = poly.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point& from = v[k];
      const Point& to = v[(k + 1) % v.size()];
      Halfplane h;
      h.a = to.y - from.y;
      h.b = from.x - to.x;
      h.c = h.a * from.x + h.b * from.y;
      const mpz_class scale = lcm3(h.a.denominator(), h.b.denominator(), h.c.denominator());
      h.ia = small_int(h.a.numerator() * (scale / h.a.denominator()));
      h.ib = small_int(h.b.numerator() * (scale / h.b.denominator()));
      h.ic = small_int(h.c.numerator() * (scale / h.c.denominator()));
      shape.integral = shape.integral && h.ia && h.ib && h.ic;
      shape.edges.push_back(std::move(h));
    }
    const auto id = static_cast<std::uint32_t>(shapes_.size());
    shapes_.push_back(std::move(shape));

    // Register the polygon in every cell its closed extent reaches.
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational x0(static_cast<long>(c), static_cast<long>(cols_));
      const Rational x1(static_cast<long>(c + 1), static_cast<long>(cols_));
      const auto yr = slab_y_range(poly, x0, x1);
      if (!yr) continue;
      const Rational rows(static_cast<long>(rows_));
      auto row_of = [&](const Rational& y) -> long {
        if (y.sign() < 0) return 0;
        const mpz_class r = (y * rows).floor();
        return r >= static_cast<long>(rows_) ? static_cast<long>(rows_) - 1 : r.get_si();
      };
      if (yr->second.sign() < 0 || yr->first > Rational(1)) continue;
      for (long r = row_of(yr->first); r <= row_of(yr->second); ++r) {
        cells_[c * rows_ + static_cast<std::size_t>(r)].push_back(id);
      }
    }
  }
}

std::size_t UnionIndex::cell_of(const Rational& x, const Rational& y) const {
  auto bucket = [](const Rational& t, std::size_t count) {
    const mpz_class k = (t * Rational(static_cast<long>(count))).floor();
    return k >= static_cast<long>(count) ? count - 1 : static_cast<std::size_t>(k.get_si());
  };
  return bucket(x, cols_) * rows_ + bucket(y, rows_);
}

bool UnionIndex::shape_contains(const Shape& s, const Point& pt) const {
  for (const Halfplane& h : s.edges) {
    if (h.a * pt.x + h.b * pt.y > h.c) return false;
  }
  return true;
}

bool UnionIndex::contains(const Point& pt) const {
  const bool in_square = pt.x.sign() >= 0 && pt.x <= Rational(1) && pt.y.sign() >= 0 && pt.y <= Rational(1);
  if (!in_square) {
    return std::any_of(shapes_.begin(), shapes_.end(), [&](const Shape& s) { return shape_contains(s, pt); });
  }
  for (std::uint32_t id : cells_[cell_of(pt.x, pt.y)]) {
    if (shape_contains(shapes_[id], pt)) return true;
  }
  return false;
}

bool UnionIndex::contains_scaled(const Rational& sx, const Rational& sy, std::uint64_t X, std::uint64_t Y) const {
  const Scale kx = small_scale(sx), ky = small_scale(sy);
  const i128 unit = i128{1} << kSampleBits;
  if (!kx.small || !ky.small || X >= static_cast<std::uint64_t>(unit) || Y >= static_cast<std::uint64_t>(unit)) {
    const Rational denom(mpq_class(mpz_class(1) << kSampleBits));
    auto coord = [&](const Rational& s, std::uint64_t v) {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
      return s * Rational(mpq_class(z)) / denom;
    };
    return contains(Point{coord(sx, X), coord(sy, Y)});
  }

  // x = xn / xd and y = yn / yd with xd = kx.den * 2^53, yd = ky.den * 2^53.
  const i128 xn = i128{kx.num} * static_cast<i128>(X);
  const i128 yn = i128{ky.num} * static_cast<i128>(Y);
  const i128 xd = i128{kx.den} * unit;
  const i128 yd = i128{ky.den} * unit;
  const std::size_t col = std::min<std::size_t>(static_cast<std::size_t>(xn * static_cast<i128>(cols_) / xd), cols_ - 1);
  const std::size_t row = std::min<std::size_t>(static_cast<std::size_t>(yn * static_cast<i128>(rows_) / yd), rows_ - 1);

  for (std::uint32_t id : cells_[col * rows_ + row]) {
    const Shape& s = shapes_[id];
    bool inside = true;
    if (s.integral) {
      // a*x + b*y <= c  <=>  a*xn*ky.den + b*yn*kx.den <= c*kx.den*ky.den*2^53
      for (const Halfplane& h : s.edges) {
        const i128 lhs = i128{*h.ia} * xn * ky.den + i128{*h.ib} * yn * kx.den;
        const i128 rhs = i128{*h.ic} * kx.den * ky.den * unit;
        if (lhs > rhs) {
          inside = false;
          break;
        }
      }
    } else {
      const Rational denom(mpq_class(mpz_class(1) << kSampleBits));
      inside = shape_contains(s, Point{sx * Rational(static_cast<long>(X)) / denom,
                                       sy * Rational(static_cast<long>(Y)) / denom});
    }
    if (inside) return true;
  }
  return false;
}

MCEstimate mc_union_area(const Family& f, const StripQuery& q, std::uint64_t samples, std::uint64_t seed,
                         std::size_t workers) {
  if (samples == 0) throw InvalidParameter("sample count must be positive");
  const ConvexPolygon strip = strip_polygon(q);  // validates the extent
  MCEstimate est;
  est.samples = samples;
  est.seed = seed;
  if (strip.empty()) return est;

  std::vector<ConvexPolygon> polys = f.q_polygons();
  polys.insert(polys.end(), f.r_polygons().begin(), f.r_polygons().end());
  const UnionIndex index(polys);
  const Rational sx = q.axis == Axis::vertical ? q.extent : Rational(1);
  const Rational sy = q.axis == Axis::vertical ? Rational(1) : q.extent;

  if (workers == 0) workers = worker_count();
  std::vector<std::uint64_t> hits(workers, 0);
  parallel_chunks(samples, workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    std::uint64_t h = 0;
    for (std::size_t k = begin; k < end; ++k) {
      const std::uint64_t X = SplitMix64::at(seed, 2 * k) >> (64 - kSampleBits);
      const std::uint64_t Y = SplitMix64::at(seed, 2 * k + 1) >> (64 - kSampleBits);
      if (index.contains_scaled(sx, sy, X, Y)) ++h;
    }
    hits[w] = h;
  });
  for (auto h : hits) est.hits += h;

  const double region = q.extent.to_double();
  const double p = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.estimate = region * p;
  est.std_error = region * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

}  // namespace nikodym
