#pragma once

// Job dispatch for the command-line front end. Every command reads a JSON
// document, writes one JSON result to the output stream and returns an exit
// code: 0 success, 64 schema violation, 65 library error, 66 truncation too
// small.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "shintani/cocycle/solomon.hpp"
#include "shintani/cone/decompose.hpp"
#include "shintani/io/json.hpp"
#include "shintani/lvalues/real_quadratic.hpp"
#include "shintani/random.hpp"

namespace shintani::cli {

using io::Json;

constexpr int exit_ok = 0;
constexpr int exit_schema = 64;
constexpr int exit_math = 65;
constexpr int exit_truncation = 66;

struct JobSpec {
  std::string command;
  Json input = Json::object();
  std::optional<unsigned long> seed;
  std::optional<int> dmax;
  std::optional<long> trials;
  bool pretty = false;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"eval-sigma",     "decompose", "pair",    "verify-cocycle",
                                              "lvalue-q",       "lvalue-quad", "s-coeffs"};
  return names;
}

/// Reads a JSON document from a path, or parses the text itself when it
/// starts with '{'.
inline Json load_input(const std::string& source) {
  std::string text = source;
  if (source.find_first_not_of(" \t\r\n") == std::string::npos || source[source.find_first_not_of(" \t\r\n")] != '{') {
    std::ifstream in(source);
    if (!in) io::schema_fail("cannot read input file", source);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    io::schema_fail(std::string("invalid JSON: ") + e.what(), source);
  }
}

namespace detail {

inline int dmax_of(const JobSpec& job, int fallback) {
  if (job.dmax) return *job.dmax;
  return static_cast<int>(io::long_field_or(job.input, "dmax", fallback, "$"));
}

inline long trials_of(const JobSpec& job, long fallback) {
  if (job.trials) return *job.trials;
  return io::long_field_or(job.input, "trials", fallback, "$");
}

inline unsigned positive_r(const Json& in, const std::string& key, long fallback) {
  long r = io::long_field_or(in, key, fallback, "$");
  if (r < 1 || r > 30) io::schema_fail(key + " must be between 1 and 30", "$." + key);
  return static_cast<unsigned>(r);
}

/// {"trivial": true}, {"kronecker": d}, {"modulus": f, "index": k} (k-th
/// character of characters_mod(f)) or {"modulus": f, "values": [...]}.
inline DirichletChar parse_character(const Json& j, const std::string& path) {
  if (j.is_null()) return DirichletChar::trivial();
  if (!j.is_object()) io::schema_fail("expected a character object", path);
  if (j.contains("kronecker")) return kronecker_character(io::long_field(j, "kronecker", path));
  if (j.value("trivial", false)) return DirichletChar::trivial(io::long_field_or(j, "modulus", 1, path));
  const long f = io::long_field(j, "modulus", path);
  if (f < 1 || f > 10000) io::schema_fail("modulus must be between 1 and 10000", path + ".modulus");
  if (j.contains("index")) {
    const long k = io::long_field(j, "index", path);
    auto all = characters_mod(f);
    if (k < 0 || k >= static_cast<long>(all.size())) io::schema_fail("character index out of range", path + ".index");
    return all[static_cast<std::size_t>(k)];
  }
  const Json& vals = io::field(j, "values", path);
  if (!vals.is_array() || static_cast<long>(vals.size()) != f)
    io::schema_fail("values must list chi(0), ..., chi(f - 1)", path + ".values");
  std::vector<CoeffElem> v;
  for (std::size_t i = 0; i < vals.size(); ++i) v.push_back(io::parse_coeff(vals[i], path + ".values[" + std::to_string(i) + "]"));
  return DirichletChar(f, std::move(v));
}

inline Json character_json(const DirichletChar& chi) {
  Json vals = Json::array();
  for (const auto& v : chi.values()) vals.push_back(io::coeff_json(v));
  return Json{{"modulus", chi.modulus()}, {"conductor", chi.conductor()}, {"even", chi.is_even()}, {"values", vals}};
}

inline Json quad_field_json(const RealQuadField& K) {
  auto qi = [](const QuadInt& x) { return Json::array({to_string(x.a), to_string(x.b)}); };
  return Json{{"D", K.D()},
              {"discriminant", K.discriminant()},
              {"fundamental_unit", qi(K.fundamental_unit())},
              {"fundamental_unit_norm", K.fundamental_unit_norm()},
              {"totally_positive_unit", qi(K.totally_positive_unit())},
              {"unit_matrix", io::mat_json(K.unit_matrix())},
              {"narrow_class_number", K.narrow_class_number()}};
}

/// The test function on the ring of integers: "phi" as a table, else
/// "character" composed with the norm, else the indicator.
inline SchwartzFn quad_test_function(const RealQuadField& K, const Json& in) {
  if (in.contains("phi")) {
    SchwartzFn phi = io::parse_schwartz(in["phi"], "$.phi");
    if (phi.dim() != 2) io::schema_fail("test function must be two-dimensional", "$.phi.n");
    return phi;
  }
  if (in.contains("character")) return norm_character(K, parse_character(in["character"], "$.character"));
  return SchwartzFn::indicator(2);
}

inline RealQuadField quad_field(const Json& in) { return build_real_quad(io::long_field(in, "D", "$")); }

inline Json eval_sigma(const JobSpec& job) {
  const auto& in = job.input;
  QVec w = io::parse_vec(io::field(in, "w", "$"), "$.w");
  auto mats = io::parse_mats(io::field(in, "matrices", "$"), w.size(), "$.matrices");
  if (mats.size() != w.size()) io::schema_fail("sigma takes n matrices of size n", "$.matrices");
  return Json{{"value", sigma_eval(mats, w)}};
}

inline Json decompose(const JobSpec& job) {
  auto mats = io::parse_mats(io::field(job.input, "matrices", "$"), 0, "$.matrices");
  if (mats.size() != mats[0].size()) io::schema_fail("sigma takes n matrices of size n", "$.matrices");
  ConeCombo c = sigma_decompose(mats);
  Json out{{"combo", io::combo_json(c)}, {"cones", c.terms.size()}};
  if (job.input.contains("points")) {
    Json checks = Json::array();
    const Json& pts = job.input["points"];
    if (!pts.is_array()) io::schema_fail("expected an array of points", "$.points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      QVec w = io::parse_vec(pts[i], "$.points[" + std::to_string(i) + "]");
      if (w.size() != c.n) io::schema_fail("point has wrong dimension", "$.points[" + std::to_string(i) + "]");
      checks.push_back({{"w", io::vec_json(w)}, {"combo", io::rat_json(combo_eval(c, w))}, {"sigma", sigma_eval(mats, w)}});
    }
    out["checks"] = checks;
  }
  return out;
}

inline Json pair(const JobSpec& job) {
  const auto& in = job.input;
  const int dmax = dmax_of(job, 2);
  if (dmax < 0) io::schema_fail("dmax must be nonnegative", "$.dmax");
  ConeCombo c = in.contains("combo") ? io::parse_combo(in["combo"], "$.combo")
                                     : sigma_decompose(io::parse_mats(io::field(in, "matrices", "$"), 0, "$.matrices"));
  SchwartzFn phi = io::parse_schwartz(io::field(in, "phi", "$"), "$.phi");
  QuotSeries q = pair_combo(c, phi, dmax);
  Json out{{"dmax", dmax}, {"quot_series", io::quot_series_json(q)}};
  try {
    out["power_series"] = io::series_json(reduce_to_power_series(q));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_divisible) throw;
    out["power_series"] = nullptr;
  }
  if (in.contains("laurent")) {
    Json coeffs = Json::array();
    for (const auto& e : in["laurent"]) {
      if (!e.is_array()) io::schema_fail("expected exponent arrays", "$.laurent");
      std::vector<int> exps;
      for (const auto& x : e) exps.push_back(static_cast<int>(io::to_long(x, "$.laurent")));
      coeffs.push_back({{"exponent", exps}, {"value", io::coeff_json(laurent_coefficient(q, exps))}});
    }
    out["laurent"] = coeffs;
  }
  return out;
}

/// Random tuples with every fifth one drawn from a degenerate family.
inline Json verify_cocycle(const JobSpec& job) {
  const auto& in = job.input;
  std::optional<unsigned long> seed = job.seed;
  if (!seed && in.contains("seed")) seed = static_cast<unsigned long>(io::long_field(in, "seed", "$"));
  if (!seed) io::schema_fail("a seed is required", "$.seed");
  const long n = io::long_field_or(in, "n", 2, "$");
  if (n < 1 || n > 4) io::schema_fail("n must be between 1 and 4", "$.n");
  const long trials = trials_of(job, 500);
  const long points = io::long_field_or(in, "points", 20, "$");
  if (trials < 1 || points < 1) io::schema_fail("trials and points must be positive", "$");
  Rng rng(*seed);
  const Degeneracy families[] = {Degeneracy::repeated, Degeneracy::parallel_first_columns,
                                 Degeneracy::low_rank_first_columns, Degeneracy::integer_unimodular};
  long degenerate = 0, checks = 0, failures = 0;
  Json first = nullptr;
  for (long t = 0; t < trials; ++t) {
    Degeneracy kind = Degeneracy::none;
    if (t % 5 == 4) {
      kind = families[(t / 5) % 4];
      ++degenerate;
    }
    auto tuple = random_tuple(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1, kind);
    const int tau = tau_cocycle(tuple);
    for (long k = 0; k < points; ++k) {
      QVec w = random_point_for(rng, tuple, static_cast<std::size_t>(n));
      const int lhs = sigma_alternating_sum(tuple, w);
      ++checks;
      if (lhs != tau) {
        ++failures;
        if (first.is_null()) {
          Json mats = Json::array();
          for (const auto& a : tuple) mats.push_back(io::mat_json(a));
          first = {{"matrices", mats}, {"w", io::vec_json(w)}, {"alternating_sum", lhs}, {"tau", tau}};
        }
      }
    }
  }
  Json out{{"n", n},          {"seed", *seed},  {"trials", trials},     {"degenerate", degenerate},
           {"points", points}, {"checks", checks}, {"failures", failures}};
  if (!first.is_null()) out["first_failure"] = first;
  return out;
}

inline Json lvalue_q(const JobSpec& job) {
  const auto& in = job.input;
  DirichletChar chi = parse_character(in.contains("character") ? in["character"] : Json(), "$.character");
  const unsigned r = positive_r(in, "r", 1);
  const int dmax = dmax_of(job, static_cast<int>(r));
  CoeffElem closed = dirichlet_L_closed(chi, r);
  CoeffElem via = dirichlet_L_via_cocycle(chi, r, dmax);
  return Json{{"character", character_json(chi)},
              {"s", 1 - static_cast<long>(r)},
              {"value", io::coeff_json(via)},
              {"closed_form", io::coeff_json(closed)},
              {"agree", closed == via}};
}

inline Json lvalue_quad(const JobSpec& job) {
  const auto& in = job.input;
  RealQuadField K = quad_field(in);
  const unsigned r = positive_r(in, "r", 1);
  const int dmax = dmax_of(job, 2 * static_cast<int>(r));
  SchwartzFn phi = quad_test_function(K, in);
  CoeffElem v = quad_L_value(K, phi, r, dmax, in.value("allow_narrow_class", false));
  return Json{{"field", quad_field_json(K)}, {"s", -static_cast<long>(r)}, {"value", io::coeff_json(v)}};
}

inline Json s_coeffs_cmd(const JobSpec& job) {
  const auto& in = job.input;
  RealQuadField K = quad_field(in);
  const unsigned rmax = positive_r(in, "rmax", 1);
  const int dmax = dmax_of(job, 2 * static_cast<int>(rmax));
  SchwartzFn phi = quad_test_function(K, in);
  auto s = s_coeffs(K, phi, rmax, dmax);
  Json table = Json::array();
  for (const auto& [m, v] : s) table.push_back({{"m", {m.first, m.second}}, {"value", io::coeff_json(v)}});
  Json values = Json::array();
  for (unsigned r = 1; r <= rmax; ++r)
    values.push_back({{"s", -static_cast<long>(r)}, {"value", io::coeff_json(quad_L_from_s_coeffs(K, s, r))}});
  return Json{{"field", quad_field_json(K)}, {"coefficients", table}, {"l_values", values}};
}

inline Json error_json(const std::string& code, const std::string& message, const std::string& context) {
  return Json{{"error", {{"code", code}, {"message", message}, {"context", context}}}};
}

}  // namespace detail

/// Runs one job, writing exactly one JSON document followed by a newline.
inline int run(const JobSpec& job, std::ostream& out) {
  Json result;
  int code = exit_ok;
  try {
    if (!job.input.is_object()) io::schema_fail("input document must be an object", "$");
    if (job.command == "eval-sigma") {
      result = detail::eval_sigma(job);
    } else if (job.command == "decompose") {
      result = detail::decompose(job);
    } else if (job.command == "pair") {
      result = detail::pair(job);
    } else if (job.command == "verify-cocycle") {
      result = detail::verify_cocycle(job);
    } else if (job.command == "lvalue-q") {
      result = detail::lvalue_q(job);
    } else if (job.command == "lvalue-quad") {
      result = detail::lvalue_quad(job);
    } else if (job.command == "s-coeffs") {
      result = detail::s_coeffs_cmd(job);
    } else {
      io::schema_fail("unknown command \"" + job.command + "\"", "command");
    }
  } catch (const io::SchemaError& e) {
    result = detail::error_json("SchemaViolation", e.what(), e.path());
    code = exit_schema;
  } catch (const Error& e) {
    result = detail::error_json(std::string(error_code_name(e.code())), e.message(), e.context());
    code = e.code() == ErrorCode::truncation_too_small ? exit_truncation : exit_math;
  } catch (const nlohmann::json::exception& e) {
    result = detail::error_json("SchemaViolation", e.what(), "$");
    code = exit_schema;
  }
  out << (job.pretty ? result.dump(2) : result.dump()) << '\n';
  return code;
}

}  // namespace shintani::cli
