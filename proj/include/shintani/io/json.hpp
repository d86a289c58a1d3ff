#pragma once

// JSON encodings. Rationals travel as "p/q" strings, matrices as row-major
// arrays, coefficient-ring elements as a rational string or as
// {"ring": {"m", "sqrt"}, "coords": [...]} in the ring's power basis.

#include <json.hpp>

#include "shintani/cone/cone_combo.hpp"
#include "shintani/pairing/schwartz.hpp"

namespace shintani::io {

using Json = nlohmann::ordered_json;

/// Malformed input document. Distinct from library errors so that callers can
/// tell a bad request from a failed computation.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& message, std::string path) : std::runtime_error(message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

[[noreturn]] inline void schema_fail(const std::string& message, const std::string& path) {
  throw SchemaError(message, path);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_fail("expected an object", path);
  auto it = j.find(key);
  if (it == j.end()) schema_fail("missing field \"" + key + "\"", path);
  return *it;
}

inline long to_long(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail("expected an integer", path);
  return j.get<long>();
}

inline long long_field(const Json& j, const std::string& key, const std::string& path) {
  return to_long(field(j, key, path), path + "." + key);
}

inline long long_field_or(const Json& j, const std::string& key, long fallback, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return long_field(j, key, path);
}

inline Json rat_json(const Rat& x) { return to_string(x); }

inline Rat parse_rat_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) schema_fail("expected a rational as an integer or a \"p/q\" string", path);
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error&) {
    schema_fail("malformed rational \"" + j.get<std::string>() + "\"", path);
  }
}

inline Json vec_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

inline QVec parse_vec(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail("expected a nonempty array of rationals", path);
  QVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rat_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

inline Json mat_json(const QMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(vec_json(row));
  return a;
}

/// Square matrix of size n (any size when n == 0).
inline QMat parse_mat(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail("expected a nonempty array of rows", path);
  QMat m;
  for (std::size_t i = 0; i < j.size(); ++i) m.push_back(parse_vec(j[i], path + "[" + std::to_string(i) + "]"));
  if (n == 0) n = m.size();
  if (m.size() != n) schema_fail("expected " + std::to_string(n) + " rows", path);
  for (const auto& row : m)
    if (row.size() != n) schema_fail("expected a square " + std::to_string(n) + "x" + std::to_string(n) + " matrix", path);
  return m;
}

inline std::vector<QMat> parse_mats(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail("expected a nonempty array of matrices", path);
  std::vector<QMat> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_mat(j[i], n, path + "[" + std::to_string(i) + "]"));
    n = out.back().size();
  }
  return out;
}

inline Json coeff_json(const CoeffElem& x) {
  if (x.is_rational()) return rat_json(x.to_rat());
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(rat_json(c));
  return Json{{"ring", {{"m", x.ring()->cyclotomic_order()}, {"sqrt", x.ring()->sqrt_d()}}},
              {"coords", coords},
              {"text", x.to_string()}};
}

inline CoeffElem parse_coeff(const Json& j, const std::string& path) {
  if (j.is_string() || j.is_number_integer()) return CoeffElem(parse_rat_json(j, path));
  if (!j.is_object()) schema_fail("expected a rational or a ring element object", path);
  const Json& ring = field(j, "ring", path);
  long m = long_field_or(ring, "m", 1, path + ".ring");
  long d = long_field_or(ring, "sqrt", 1, path + ".ring");
  RingPtr r;
  try {
    r = CoeffRing::get(static_cast<int>(m), d);
  } catch (const Error& e) {
    schema_fail(e.message(), path + ".ring");
  }
  QVec c = parse_vec(field(j, "coords", path), path + ".coords");
  if (c.size() != r->dim()) schema_fail("expected " + std::to_string(r->dim()) + " coordinates", path + ".coords");
  return CoeffElem(r, std::move(c));
}

inline Json combo_json(const ConeCombo& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    Json gens = Json::array();
    for (const auto& g : t.cone.generators()) gens.push_back(vec_json(g));
    terms.push_back({{"coeff", rat_json(t.coeff)}, {"generators", gens}});
  }
  return Json{{"n", c.n}, {"constant", rat_json(c.constant)}, {"terms", terms}};
}

inline ConeCombo parse_combo(const Json& j, const std::string& path) {
  const long n = long_field(j, "n", path);
  if (n < 1) schema_fail("dimension must be positive", path + ".n");
  ConeCombo c(static_cast<std::size_t>(n));
  if (j.contains("constant")) c.constant = parse_rat_json(j["constant"], path + ".constant");
  const Json& terms = field(j, "terms", path);
  if (!terms.is_array()) schema_fail("expected an array", path + ".terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    Rat coeff = parse_rat_json(field(terms[i], "coeff", tp), tp + ".coeff");
    const Json& gj = field(terms[i], "generators", tp);
    if (!gj.is_array() || gj.empty()) schema_fail("expected a nonempty array of generators", tp + ".generators");
    std::vector<QVec> gens;
    for (std::size_t k = 0; k < gj.size(); ++k) {
      gens.push_back(parse_vec(gj[k], tp + ".generators[" + std::to_string(k) + "]"));
      if (gens.back().size() != c.n) schema_fail("generator has wrong dimension", tp + ".generators");
    }
    c.add(coeff, OpenSimplicialCone(std::move(gens)));
  }
  return c;
}

/// {n, d, f, values: [{class: [ints], re: coeff}]}; classes are d*w mod d*f,
/// omitted classes are zero.
inline SchwartzFn parse_schwartz(const Json& j, const std::string& path) {
  const long n = long_field(j, "n", path);
  const long d = long_field_or(j, "d", 1, path);
  const long f = long_field_or(j, "f", 1, path);
  if (n < 1 || n > 8) schema_fail("dimension must be between 1 and 8", path + ".n");
  if (d < 1 || f < 1) schema_fail("d and f must be positive", path);
  SchwartzFn s(static_cast<std::size_t>(n), d, f);
  const Json& values = field(j, "values", path);
  if (!values.is_array()) schema_fail("expected an array", path + ".values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string vp = path + ".values[" + std::to_string(i) + "]";
    const Json& cj = field(values[i], "class", vp);
    if (!cj.is_array() || static_cast<long>(cj.size()) != n) schema_fail("class must have n entries", vp + ".class");
    ResidueClass c;
    for (const auto& x : cj) c.push_back(to_long(x, vp + ".class"));
    s.set(c, parse_coeff(field(values[i], "re", vp), vp + ".re"));
  }
  return s;
}

inline Json schwartz_json(const SchwartzFn& s) {
  Json values = Json::array();
  for (const auto& [c, v] : s.table())
    if (!v.is_zero()) values.push_back({{"class", c}, {"re", coeff_json(v)}});
  return Json{{"n", s.dim()}, {"d", s.support_denominator()}, {"f", s.period()}, {"values", values}};
}

inline Json series_json(const Series& s) {
  Json coeffs = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json deg = Json::array();
    for (std::size_t i = 0; i < s.nvars(); ++i) deg.push_back(m[i]);
    coeffs.push_back({{"deg", deg}, {"value", coeff_json(c)}});
  }
  return coeffs;
}

inline Json quot_series_json(const QuotSeries& q) {
  Json denoms = Json::array();
  for (const auto& l : q.denominators()) {
    Json f = Json::array();
    for (const auto& c : l) f.push_back(coeff_json(c));
    denoms.push_back(f);
  }
  return Json{{"denoms", denoms}, {"num_prec", q.num_prec()}, {"coeffs", series_json(q.numerator())}};
}

}  // namespace shintani::io
