#pragma once

#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nikodym/construction.hpp"
#include "nikodym/geometry.hpp"
#include "nikodym/profile.hpp"
#include "nikodym/rational.hpp"

namespace nikodym {

enum class Axis { vertical, horizontal };
enum class Property { ii, iii };

const char* to_string(Axis axis);
const char* to_string(Property which);

/// J = [0, extent] x [0, 1] (vertical) or [0, 1] x [0, extent] (horizontal).
struct StripQuery {
  Axis axis = Axis::vertical;
  Rational extent;

  /// λ²(J), which equals the extent.
  const Rational& measure() const { return extent; }
};

/// Throws InvalidParameter unless 0 <= extent <= 1.
ConvexPolygon strip_polygon(const StripQuery& q);

struct DeviationResult {
  Rational union_area;
  Rational sum_area;
  Rational pair_sum;
  Rational dev_ii;   // |union_area - 3/4 λ²(J)|
  Rational dev_iii;  // |sum_area - λ²(J)|
};

struct DiagnosticBounds {
  Rational lower;
  Rational upper;
  Rational quantity;
  bool within = false;
};

Rational area_in_strip(const Parallelogram& p, const StripQuery& q);

/// Area of qi ∩ rj ∩ J by two successive convex intersections.
Rational pair_intersection_area(const Parallelogram& qi, const Parallelogram& rj, const StripQuery& q);

/// Index pairs (a, b) whose polygon boxes overlap in positive area.
/// When `same` is set, a and b index the same list and only a < b is returned.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_boxes(std::span<const ConvexPolygon> a,
                                                                   std::span<const ConvexPolygon> b,
                                                                   bool same = false);

/// One Q×R pair that may meet: positions into Family::q() and Family::r().
struct Crossing {
  std::size_t q_pos;
  std::size_t r_pos;
  ConvexPolygon polygon;  // Q ∩ R
  Rational area;
};

/// Certified upper bounds on the worst deviation over all strip extents.
struct SupDeviations {
  Rational ii_vertical;
  Rational ii_horizontal;
  Rational iii_vertical;
  Rational iii_horizontal;

  const Rational& get(Axis axis, Property which) const;
  bool all_below(const Rational& epsilon) const;
};

/// Exact measure evaluation for one family.
///
/// Construction checks that members within each slope family meet only in
/// null sets (throws ConsistencyError otherwise) and caches every Q×R
/// intersection polygon whose boxes overlap. Pairs with disjoint boxes have
/// zero area and are never clipped. All queries are const and thread-safe.
class FamilyMeasure {
 public:
  explicit FamilyMeasure(Family family, std::size_t workers = 0);
  FamilyMeasure(const FamilyMeasure&) = delete;
  FamilyMeasure& operator=(const FamilyMeasure&) = delete;

  const Family& family() const { return family_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  /// Inclusion-exclusion over clipped members and clipped crossings.
  DeviationResult deviations(const StripQuery& q) const;

  /// Same quantities at many extents of one axis via exact sweep profiles.
  /// Extents must be sorted ascending and lie in [0, 1].
  std::vector<DeviationResult> deviations_at(Axis axis, std::span<const Rational> extents) const;

 private:
  struct Profiles {
    SweepProfile members;
    SweepProfile crossings;
  };
  const Profiles& profiles(Axis axis) const;
  void verify_disjoint(const std::vector<ConvexPolygon>& polys, const char* label) const;

  Family family_;
  std::size_t workers_;
  std::vector<Crossing> crossings_;
  mutable std::once_flag profile_once_[2];
  mutable Profiles profiles_[2];
};

/// One-shot form of FamilyMeasure::deviations.
DeviationResult family_deviations(const Family& f, const StripQuery& q);

/// f(n, y0) = summed member area below y0 against [y0 - 1/n - 1/n², y0 - 2/n²].
/// Membership is reported, not enforced. Throws InvalidParameter unless 0 < y0 <= 1.
DiagnosticBounds f_bracket(const FamilyMeasure& m, const Rational& y0);
DiagnosticBounds f_bracket(const Family& f, const Rational& y0);

/// Exact crossing sum against the simplified closed-form bracket for the axis:
///   vertical:   x0/4 (1 - 3/n + 1/n²)  ..  x0/4 (1 - 3/(2n) + 3/(4n²))
///   horizontal: y0/4 - 1/(4n)          ..  y0/4 - 3/(4n) - 1/(4n²)
/// Membership is reported, not enforced.
DiagnosticBounds pair_sum_bracket(const FamilyMeasure& m, const StripQuery& q);
DiagnosticBounds pair_sum_bracket(const Family& f, const StripQuery& q);

/// Default grid spacing 1/(4n²).
Rational default_grid_step(int n);

/// Upper bound on sup over extents in [0,1] of the chosen deviation: the
/// largest exact deviation on the grid plus Lipschitz padding (7/4 h for
/// property ii, 2h for property iii). Throws InvalidParameter unless 0 < h <= 1.
Rational sup_deviation(const FamilyMeasure& m, Axis axis, Property which, const std::optional<Rational>& grid_step = {});
Rational sup_deviation(const Family& f, Axis axis, Property which, const std::optional<Rational>& grid_step = {});

/// All four bounds, sharing one grid per axis.
SupDeviations sup_deviations(const FamilyMeasure& m, const std::optional<Rational>& grid_step = {});

/// Grid 0, h, 2h, ... with 1 appended when h does not divide 1.
std::vector<Rational> extent_grid(const Rational& grid_step);

struct MinNResult {
  int n;
  SupDeviations sup;
};

/// Smallest odd n <= n_cap whose family covers the epsilon band and keeps all
/// four sup bounds below epsilon. Throws InvalidParameter unless
/// 0 < epsilon < 1/2 and n_cap >= 3.
std::optional<MinNResult> min_odd_n(const Rational& epsilon, int n_cap);

}  // namespace nikodym
