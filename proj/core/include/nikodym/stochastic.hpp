#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nikodym/construction.hpp"
#include "nikodym/geometry.hpp"
#include "nikodym/measure.hpp"

namespace nikodym {

/// SplitMix64 (Steele, Lea & Flood 2014) in counter form: the k-th output is
/// mix(seed + (k + 1) * 0x9E3779B97F4A7C15), so any index can be derived
/// directly and the sample range can be partitioned freely.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  static std::uint64_t at(std::uint64_t seed, std::uint64_t index) { return mix(seed + (index + 1) * kGamma); }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Sample k uses outputs 2k and 2k+1; each keeps its top 53 bits as the
/// numerator of a dyadic coordinate in [0, 1).
inline constexpr int kSampleBits = 53;

struct MCEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t hits = 0;

  friend bool operator==(const MCEstimate&, const MCEstimate&) = default;
};

/// Closed membership in any member parallelogram, exact.
bool point_in_family_union(const Family& f, const Point& pt);

/// Exact membership index over a set of convex polygons. Each polygon is kept
/// as integer halfplanes, bucketed on a uniform grid of cells, so a query
/// only touches polygons whose clipped extent reaches the query cell.
class UnionIndex {
 public:
  explicit UnionIndex(const std::vector<ConvexPolygon>& polygons);

  /// Exact closed test for a rational point.
  bool contains(const Point& pt) const;

  /// Exact closed test for (sx * X / 2^53, sy * Y / 2^53) with X, Y < 2^53
  /// and sx, sy in [0, 1]. Uses 128-bit integers when magnitudes allow.
  bool contains_scaled(const Rational& sx, const Rational& sy, std::uint64_t X, std::uint64_t Y) const;

 private:
  struct Halfplane {  // a*x + b*y <= c
    Rational a, b, c;
    std::optional<std::int64_t> ia, ib, ic;  // integer form when it fits
  };
  struct Shape {
    std::vector<Halfplane> edges;
    bool integral = false;
  };

  std::size_t cell_of(const Rational& x, const Rational& y) const;
  bool shape_contains(const Shape& s, const Point& pt) const;

  std::vector<Shape> shapes_;
  std::size_t cols_ = 1, rows_ = 1;
  std::vector<std::vector<std::uint32_t>> cells_;
};

/// Hit-or-miss estimate of λ²(union ∩ J) from uniform samples over J.
/// Deterministic in (family, strip, samples, seed) for any worker count.
/// Throws InvalidParameter when samples == 0.
MCEstimate mc_union_area(const Family& f, const StripQuery& q, std::uint64_t samples, std::uint64_t seed,
                         std::size_t workers = 0);

}  // namespace nikodym
