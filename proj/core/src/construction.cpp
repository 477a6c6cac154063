#include "nikodym/construction.hpp"

#include <algorithm>
#include <string>

#include "nikodym/errors.hpp"

namespace nikodym {

Parallelogram::Parallelogram(Rational b1, Rational b2, Rational delta)
    : b1_(std::move(b1)), b2_(std::move(b2)), delta_(std::move(delta)) {
  if (delta_.sign() <= 0) throw InvalidParameter("parallelogram thickness must be positive");
  const Rational top = Rational(1) - delta_;
  if (b1_.sign() < 0 || b1_ > top || b2_.sign() < 0 || b2_ > top) {
    throw InvalidParameter("parallelogram must lie in the unit square: b1=" + b1_.str() + " b2=" + b2_.str() +
                           " delta=" + delta_.str());
  }
}

ConvexPolygon Parallelogram::polygon() const {
  return ConvexPolygon::normalize({{0, b1_}, {1, b2_}, {1, b2_ + delta_}, {0, b1_ + delta_}});
}

LeftInterval left_side(const Parallelogram& p) { return {p.b1(), p.delta()}; }

std::vector<int> index_set(int n) {
  if (n < 3 || n % 2 == 0) {
    throw InvalidParameter("n must be an odd integer >= 3, got " + std::to_string(n));
  }
  std::vector<int> s;
  s.reserve(static_cast<std::size_t>((n * n - n) / 2));
  for (int i = 0; i <= n * n - n - 2; i += 2) s.push_back(i);
  return s;
}

Family build_family(int n, int n_cap) {
  Family f;
  f.indices_ = index_set(n);
  if (n > n_cap) {
    throw InvalidParameter("n = " + std::to_string(n) + " exceeds the configured cap " + std::to_string(n_cap));
  }
  f.n_ = n;
  const long nn = static_cast<long>(n) * n;
  const Rational delta(1, nn);
  f.q_.reserve(f.indices_.size());
  f.r_.reserve(f.indices_.size());
  for (int i : f.indices_) {
    f.q_.emplace_back(Rational(i, nn), Rational(i + n, nn), delta);
    f.r_.emplace_back(Rational(i + n, nn), Rational(i, nn), delta);
  }
  for (const auto& p : f.q_) f.q_polys_.push_back(p.polygon());
  for (const auto& p : f.r_) f.r_polys_.push_back(p.polygon());
  return f;
}

CoverInterval left_cover_interval(const Family& f) {
  std::vector<LeftInterval> sides;
  sides.reserve(f.member_count());
  for (const auto& p : f.q()) sides.push_back(left_side(p));
  for (const auto& p : f.r()) sides.push_back(left_side(p));
  std::sort(sides.begin(), sides.end(), [](const LeftInterval& a, const LeftInterval& b) { return a.b < b.b; });

  const Rational half(1, 2);
  Rational lo = sides.front().lo();
  Rational hi = sides.front().hi();
  auto holds_half = [&] { return lo <= half && half <= hi; };
  for (std::size_t k = 1; k < sides.size(); ++k) {
    if (sides[k].lo() <= hi) {
      hi = max(hi, sides[k].hi());
      continue;
    }
    if (holds_half()) break;
    lo = sides[k].lo();
    hi = sides[k].hi();
  }
  if (!holds_half()) {
    // The run holding 1/2 is empty: report the degenerate point interval.
    return {half, half};
  }
  return {lo, hi};
}

CoverInterval claimed_cover_interval(int n) {
  const long nn = static_cast<long>(n) * n;
  return {Rational(1, n), Rational(1) - Rational(1, n) - Rational(1, nn)};
}

bool covers_epsilon_band(const Family& f, const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1, 2)) {
    throw InvalidParameter("epsilon must satisfy 0 < epsilon < 1/2, got " + epsilon.str());
  }
  const CoverInterval c = left_cover_interval(f);
  return c.lo <= epsilon && c.hi >= Rational(1) - epsilon;
}

ConvexPolygon affine_contract(const ConvexPolygon& p, const Rational& b, long i) {
  if (i < 1) throw InvalidParameter("contraction factor i must be >= 1, got " + std::to_string(i));
  const Rational scale(1, i);
  std::vector<Point> out;
  out.reserve(p.size());
  for (const Point& v : p.vertices()) out.push_back({v.x, b + (v.y - b) * scale});
  return ConvexPolygon::normalize(std::move(out));
}

}  // namespace nikodym
