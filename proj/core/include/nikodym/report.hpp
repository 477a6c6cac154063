#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nikodym/construction.hpp"
#include "nikodym/measure.hpp"
#include "nikodym/rational.hpp"
#include "nikodym/stochastic.hpp"

namespace nikodym {

struct VerifyOptions {
  int n = 3;
  Rational epsilon = Rational(1, 10);
  std::optional<Rational> grid_step;  // default 1/(4n²)
  std::uint64_t mc_samples = 0;       // 0 disables the Monte Carlo cross-check
  std::uint64_t seed = 0;
  int n_cap = kDefaultNCap;
};

struct NamedDiagnostic {
  std::string name;
  StripQuery strip;
  DiagnosticBounds bounds;
};

/// Monte Carlo estimate of the full-square union against the exact value.
struct McCrosscheck {
  MCEstimate estimate;
  Rational exact;
  double z_score = 0.0;  // |estimate - exact| / std_error (0 when std_error is 0)
  bool within_4se = false;
};

/// How many Q×R pairs hit the closed-form crossing area 1/(2n³).
struct PairCensus {
  std::uint64_t pairs_total = 0;      // |S(n)|²
  std::uint64_t pairs_meeting = 0;    // positive-area intersections
  std::uint64_t at_closed_form = 0;   // area exactly 1/(2n³)
  std::uint64_t deviating_interior = 0;  // off the closed form with crossing abscissa inside (0, 1)
  Rational closed_form;
};

PairCensus pair_census(const FamilyMeasure& m);

struct VerificationReport {
  int n = 0;
  Rational epsilon;
  Rational grid_step;
  CoverInterval cover;
  CoverInterval claimed_cover;
  bool property_i = false;
  SupDeviations sup;
  std::vector<NamedDiagnostic> diagnostics;
  PairCensus census;
  std::optional<McCrosscheck> mc;
  bool pass = false;  // property_i and all four sup bounds below epsilon
};

/// Runs every check for one family. Throws InvalidParameter for bad options
/// and ConsistencyError if the family violates the disjointness premise.
VerificationReport verify(const VerifyOptions& options);
VerificationReport verify(const FamilyMeasure& m, const VerifyOptions& options);

std::string report_json(const VerificationReport& r, int indent = 2);

struct SweepRow {
  int n = 0;
  Rational epsilon;
  SupDeviations sup;
  bool covers = false;
  bool pass = false;
};

/// One row per (n, epsilon); each family is measured once.
std::vector<SweepRow> sweep(const std::vector<Rational>& epsilons, const std::vector<int>& ns,
                            int n_cap = kDefaultNCap);

/// Header: n,epsilon,sup_dev_ii_v,sup_dev_ii_h,sup_dev_iii_v,sup_dev_iii_h,covers,pass
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace nikodym
