#include "nikodym/report.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "nikodym/errors.hpp"
#include "nikodym/serialize.hpp"

namespace nikodym {

using detail::Json;
using detail::put_rational;

PairCensus pair_census(const FamilyMeasure& m) {
  const Family& f = m.family();
  const long n = f.n();
  PairCensus c;
  c.closed_form = Rational(1, 2 * n * n * n);
  c.pairs_total = static_cast<std::uint64_t>(f.indices().size()) * f.indices().size();

  std::set<std::pair<std::size_t, std::size_t>> exact;
  for (const Crossing& x : m.crossings()) {
    if (x.area.sign() > 0) ++c.pairs_meeting;
    if (x.area == c.closed_form) {
      ++c.at_closed_form;
      exact.emplace(x.q_pos, x.r_pos);
    }
  }
  // Crossing abscissa (j + n - i) / (2n) lies in (0, 1) iff i - n < j < i + n.
  const auto& idx = f.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const long i = idx[a], j = idx[b];
      if (j <= i - n || j >= i + n) continue;
      if (!exact.contains({a, b})) ++c.deviating_interior;
    }
  }
  return c;
}

VerificationReport verify(const VerifyOptions& options) {
  const FamilyMeasure m(build_family(options.n, options.n_cap));
  return verify(m, options);
}

VerificationReport verify(const FamilyMeasure& m, const VerifyOptions& options) {
  const Family& f = m.family();
  VerificationReport r;
  r.n = f.n();
  r.epsilon = options.epsilon;
  r.grid_step = options.grid_step.value_or(default_grid_step(f.n()));
  r.property_i = covers_epsilon_band(f, options.epsilon);
  r.cover = left_cover_interval(f);
  r.claimed_cover = claimed_cover_interval(f.n());
  r.sup = sup_deviations(m, r.grid_step);

  const StripQuery full_v{Axis::vertical, Rational(1)};
  const StripQuery half_h{Axis::horizontal, Rational(1, 2)};
  r.diagnostics.push_back({"pair_sum_bracket", full_v, pair_sum_bracket(m, full_v)});
  r.diagnostics.push_back({"pair_sum_bracket", half_h, pair_sum_bracket(m, half_h)});
  r.diagnostics.push_back({"f_bracket", half_h, f_bracket(m, half_h.extent)});
  r.census = pair_census(m);

  if (options.mc_samples > 0) {
    McCrosscheck mc;
    mc.estimate = mc_union_area(f, full_v, options.mc_samples, options.seed);
    mc.exact = m.deviations(full_v).union_area;
    const double diff = std::abs(mc.estimate.estimate - mc.exact.to_double());
    mc.z_score = mc.estimate.std_error > 0 ? diff / mc.estimate.std_error : 0.0;
    mc.within_4se = diff <= 4.0 * mc.estimate.std_error;
    r.mc = std::move(mc);
  }
  r.pass = r.property_i && r.sup.all_below(options.epsilon);
  return r;
}

std::string report_json(const VerificationReport& r, int indent) {
  Json j;
  j["n"] = r.n;
  put_rational(j, "epsilon", r.epsilon);
  put_rational(j, "grid_step", r.grid_step);

  Json p1;
  p1["cover"] = Json::array({r.cover.lo.str(), r.cover.hi.str()});
  p1["claimed_cover"] = Json::array({r.claimed_cover.lo.str(), r.claimed_cover.hi.str()});
  p1["band"] = Json::array({r.epsilon.str(), (Rational(1) - r.epsilon).str()});
  p1["holds"] = r.property_i;
  j["property_i"] = p1;

  Json sup;
  for (Property which : {Property::ii, Property::iii}) {
    Json per_axis;
    for (Axis axis : {Axis::vertical, Axis::horizontal}) {
      Json v;
      put_rational(v, "bound", r.sup.get(axis, which));
      v["below_epsilon"] = r.sup.get(axis, which) < r.epsilon;
      per_axis[to_string(axis)] = v;
    }
    sup[to_string(which)] = per_axis;
  }
  j["sup_deviation"] = sup;

  Json diags = Json::array();
  for (const auto& d : r.diagnostics) {
    Json e;
    e["name"] = d.name;
    e["axis"] = to_string(d.strip.axis);
    e["extent"] = d.strip.extent.str();
    const Json bounds = detail::to_json(d.bounds);
    for (const auto& [k, v] : bounds.items()) e[k] = v;
    diags.push_back(e);
  }
  j["diagnostics"] = diags;

  Json census;
  census["pairs_total"] = r.census.pairs_total;
  census["pairs_meeting"] = r.census.pairs_meeting;
  census["at_closed_form"] = r.census.at_closed_form;
  census["deviating_interior"] = r.census.deviating_interior;
  census["closed_form"] = r.census.closed_form.str();
  j["pair_census"] = census;

  if (r.mc) {
    Json mc = detail::to_json(r.mc->estimate);
    put_rational(mc, "exact", r.mc->exact);
    mc["z_score"] = fixed_double(r.mc->z_score);
    mc["within_4se"] = r.mc->within_4se;
    j["mc_crosscheck"] = mc;
  } else {
    j["mc_crosscheck"] = nullptr;
  }
  j["pass"] = r.pass;
  return j.dump(indent);
}

std::vector<SweepRow> sweep(const std::vector<Rational>& epsilons, const std::vector<int>& ns, int n_cap) {
  if (epsilons.empty() || ns.empty()) throw InvalidParameter("sweep needs at least one n and one epsilon");
  for (const auto& e : epsilons) {
    if (e.sign() <= 0 || e >= Rational(1, 2)) throw InvalidParameter("epsilon must satisfy 0 < epsilon < 1/2, got " + e.str());
  }
  std::vector<SweepRow> rows;
  for (int n : ns) {
    const FamilyMeasure m(build_family(n, n_cap));
    const SupDeviations sup = sup_deviations(m);
    for (const auto& e : epsilons) {
      SweepRow row;
      row.n = n;
      row.epsilon = e;
      row.sup = sup;
      row.covers = covers_epsilon_band(m.family(), e);
      row.pass = row.covers && sup.all_below(e);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "n,epsilon,sup_dev_ii_v,sup_dev_ii_h,sup_dev_iii_v,sup_dev_iii_h,covers,pass\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.epsilon.decimal(kDecimalDigits) << ',' << r.sup.ii_vertical.decimal(kDecimalDigits) << ','
        << r.sup.ii_horizontal.decimal(kDecimalDigits) << ',' << r.sup.iii_vertical.decimal(kDecimalDigits) << ','
        << r.sup.iii_horizontal.decimal(kDecimalDigits) << ',' << (r.covers ? "true" : "false") << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace nikodym
