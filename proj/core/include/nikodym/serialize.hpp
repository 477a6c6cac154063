#pragma once

#include <string>
#include <string_view>

#include "nikodym/construction.hpp"
#include "nikodym/geometry.hpp"
#include "nikodym/measure.hpp"
#include "nikodym/stochastic.hpp"

// JSON documents shared by every command. Rationals are "p/q" strings in
// lowest terms; points are [x, y]; polygons are arrays of points in
// counterclockwise order. Decimal annotations, where present, sit next to the
// exact value under a "_decimal" suffix and are never read back.
namespace nikodym {

/// Significant digits used for every decimal annotation.
inline constexpr int kDecimalDigits = 20;

std::string polygon_json(const ConvexPolygon& p);
ConvexPolygon polygon_from_json(std::string_view text);

/// { "n": ..., "indices": [...], "q": [[b1, b2, delta], ...], "r": [...] }
std::string family_json(const Family& f, int indent = 2);

/// Rebuilds the family named by a document and checks every stored triple
/// against it. Throws InvalidInput on mismatch or malformed text.
Family family_from_json(std::string_view text);

std::string deviation_json(const DeviationResult& d, const StripQuery& q);
std::string diagnostic_json(const DiagnosticBounds& d);
std::string mc_json(const MCEstimate& e);

/// Fixed-format rendering of a double ("%.17g"), stable across runs.
std::string fixed_double(double v);

}  // namespace nikodym
