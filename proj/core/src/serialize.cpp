#include "nikodym/serialize.hpp"

#include <cstdio>

#include "json_util.hpp"
#include "nikodym/errors.hpp"

namespace nikodym {

namespace detail {

void put_rational(Json& obj, const std::string& key, const Rational& r) {
  obj[key] = r.str();
  obj[key + "_decimal"] = r.decimal(kDecimalDigits);
}

Json to_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

Json to_json(const ConvexPolygon& p) {
  Json arr = Json::array();
  for (const Point& v : p.vertices()) arr.push_back(to_json(v));
  return arr;
}

Json to_json(const DeviationResult& d, const StripQuery& q) {
  Json j;
  j["axis"] = to_string(q.axis);
  put_rational(j, "extent", q.extent);
  put_rational(j, "union_area", d.union_area);
  put_rational(j, "sum_area", d.sum_area);
  put_rational(j, "pair_sum", d.pair_sum);
  put_rational(j, "dev_ii", d.dev_ii);
  put_rational(j, "dev_iii", d.dev_iii);
  return j;
}

Json to_json(const DiagnosticBounds& d) {
  Json j;
  put_rational(j, "lower", d.lower);
  put_rational(j, "upper", d.upper);
  put_rational(j, "quantity", d.quantity);
  j["within"] = d.within;
  return j;
}

Json to_json(const MCEstimate& e) {
  Json j;
  j["estimate"] = fixed_double(e.estimate);
  j["std_error"] = fixed_double(e.std_error);
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["hits"] = e.hits;
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("expected a \"p/q\" string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

}  // namespace detail

using detail::Json;

std::string fixed_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string polygon_json(const ConvexPolygon& p) { return detail::to_json(p).dump(); }

ConvexPolygon polygon_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    std::vector<Point> pts;
    if (!j.is_array()) throw InvalidInput("polygon must be an array of points");
    for (const auto& v : j) {
      if (!v.is_array() || v.size() != 2) throw InvalidInput("point must be [x, y]");
      pts.push_back({detail::rational_from_json(v[0]), detail::rational_from_json(v[1])});
    }
    return ConvexPolygon::normalize(std::move(pts));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed polygon document: ") + e.what());
  }
}

std::string family_json(const Family& f, int indent) {
  Json j;
  j["n"] = f.n();
  j["indices"] = f.indices();
  auto triples = [](const std::vector<Parallelogram>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(Json::array({p.b1().str(), p.b2().str(), p.delta().str()}));
    return arr;
  };
  j["q"] = triples(f.q());
  j["r"] = triples(f.r());
  return j.dump(indent);
}

Family family_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed family document: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidInput("family document lacks integer n");
  Family f = build_family(j["n"].get<int>(), j["n"].get<int>());
  if (!j.contains("indices") || j["indices"] != Json(f.indices())) throw InvalidInput("family indices do not match n");
  auto check = [&](const char* key, const std::vector<Parallelogram>& expected) {
    const Json& arr = j.at(key);
    if (!arr.is_array() || arr.size() != expected.size()) throw InvalidInput(std::string("family list '") + key + "' has wrong size");
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const Json& t = arr[k];
      if (!t.is_array() || t.size() != 3) throw InvalidInput("parallelogram must be [b1, b2, delta]");
      const Parallelogram p(detail::rational_from_json(t[0]), detail::rational_from_json(t[1]),
                            detail::rational_from_json(t[2]));
      if (!(p == expected[k])) throw InvalidInput(std::string("family list '") + key + "' differs at position " + std::to_string(k));
    }
  };
  check("q", f.q());
  check("r", f.r());
  return f;
}

std::string deviation_json(const DeviationResult& d, const StripQuery& q) { return detail::to_json(d, q).dump(2); }
std::string diagnostic_json(const DiagnosticBounds& d) { return detail::to_json(d).dump(2); }
std::string mc_json(const MCEstimate& e) { return detail::to_json(e).dump(2); }

}  // namespace nikodym
