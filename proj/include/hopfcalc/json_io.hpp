#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcalc/census.hpp"
#include "hopfcalc/citations.hpp"
#include "hopfcalc/cyclotomic.hpp"
#include "hopfcalc/fusion.hpp"
#include "hopfcalc/fusion_search.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/hopf.hpp"

namespace hopfcalc {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("malformed ") + what);
  }
}

}  // namespace detail

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// ---- scalars ----

inline Json to_json(const CycNumber& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_string(q));
  return Json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline CycNumber cyc_from_json(const Json& j) {
  if (j.is_number_integer()) return CycNumber(j.get<long long>());
  if (j.is_string()) return CycNumber(parse_rational(j.get<std::string>()));
  const int n = detail::int_field(j, "conductor");
  const Json& cs = detail::field(j, "coeffs");
  if (!cs.is_array()) throw ParseError("coeffs must be an array");
  std::vector<Rational> v;
  for (const auto& c : cs) {
    if (c.is_number_integer()) v.emplace_back(Integer(c.get<long long>()));
    else if (c.is_string()) v.push_back(parse_rational(c.get<std::string>()));
    else throw ParseError("coefficient must be a string or integer");
  }
  return CycNumber::from_reduced(n, std::move(v));
}

// ---- groups ----

/// {"construct": "cyclic"|"dihedral"|"symmetric", "n": k}, {"construct": "quaternion"},
/// {"construct": "builtin", "name": "G12"},
/// {"construct": "product", "factors": [g, h]} or
/// {"construct": "semidirect", "normal": N, "acting": Q, "action": [[images of N under q] for q in Q]}.
inline FiniteGroup group_from_json(const Json& j) {
  const std::string c = detail::get_as<std::string>(detail::field(j, "construct"), "construct");
  if (c == "cyclic") return build_cyclic(detail::int_field(j, "n"));
  if (c == "dihedral") return build_dihedral(detail::int_field(j, "n"));
  if (c == "symmetric") return build_symmetric(detail::int_field(j, "n"));
  if (c == "quaternion") return build_quaternion();
  if (c == "builtin") return builtin_group(detail::get_as<std::string>(detail::field(j, "name"), "name"));
  if (c == "product") {
    const Json& f = detail::field(j, "factors");
    if (!f.is_array() || f.size() != 2) throw ParseError("product needs two factors");
    return build_product(group_from_json(f[0]), group_from_json(f[1]));
  }
  if (c == "semidirect") {
    const FiniteGroup n = group_from_json(detail::field(j, "normal"));
    const FiniteGroup q = group_from_json(detail::field(j, "acting"));
    GroupAction act;
    act.map = detail::get_as<std::vector<std::vector<int>>>(detail::field(j, "action"), "action table");
    return build_semidirect(n, q, act);
  }
  throw ParseError("unknown construct '" + c + "'");
}

// ---- fusion data ----

inline Json to_json(const FusionDatum& f) {
  Json constants = Json::array();
  const int r = f.size();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (f.N(i, j, k) != 0) constants.push_back({i, j, k, f.N(i, j, k)});
  return Json{{"degrees", f.degrees}, {"dual", f.dual}, {"constants", constants}};
}

inline FusionDatum fusion_datum_from_json(const Json& j) {
  auto deg = detail::get_as<std::vector<int>>(detail::field(j, "degrees"), "degrees");
  auto du = detail::get_as<std::vector<int>>(detail::field(j, "dual"), "dual");
  if (deg.size() != du.size()) throw ParseError("degrees and dual differ in length");
  const int unit = j.contains("unit") ? detail::int_field(j, "unit") : 0;
  FusionDatum f(deg, du, unit);
  const int r = f.size();
  for (const auto& e : detail::field(j, "constants")) {
    const auto v = detail::get_as<std::vector<int>>(e, "constant entry");
    if (v.size() != 4) throw ParseError("constant entries are [i, j, k, value]");
    for (int t = 0; t < 3; ++t)
      if (v[static_cast<std::size_t>(t)] < 0 || v[static_cast<std::size_t>(t)] >= r) throw ParseError("constant index out of range");
    f.N(v[0], v[1], v[2]) = v[3];
  }
  return f;
}

inline Json checks_json(const std::vector<AxiomCheck>& checks, const std::string& citation_prefix) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"axiom", c.axiom}, {"passed", c.passed}, {"detail", c.detail}, {"citation", citation(citation_prefix + c.axiom)}});
  return out;
}

inline Json to_json(const FusionReport& r) {
  return Json{{"profile", r.profile}, {"passed", r.passed()}, {"checks", checks_json(r.checks, "")}};
}

inline Json to_json(const SearchOutcome& o) {
  Json failures = Json::array();
  for (const auto& [k, v] : o.failures) failures.push_back({{"constraint", k}, {"count", v}, {"citation", citation(k)}});
  Json j{{"status", o.status_name()},
         {"nodes", o.nodes},
         {"dual_patterns", o.dual_patterns},
         {"subproblems", o.subproblems},
         {"first_failure", o.first_failure},
         {"failures", failures}};
  j["witness"] = o.witness ? to_json(*o.witness) : Json(nullptr);
  return j;
}

// ---- census ----

inline Json to_json(const CensusResult& r, const CensusOptions& opt) {
  Json rules = Json::array();
  for (const auto& id : opt.rules) {
    const auto& rule = census_rule(id);
    rules.push_back({{"id", rule.id}, {"statement", rule.statement}, {"citation", rule.citation}});
  }
  Json survivors = Json::array();
  for (const auto& t : r.survivors) survivors.push_back(t.to_string());
  Json eliminated = Json::array();
  for (const auto& e : r.eliminated) eliminated.push_back({{"type", e.type.to_string()}, {"rule", e.rule}, {"detail", e.detail}});
  Json oracle = Json::array();
  for (const auto& v : r.oracle)
    oracle.push_back({{"type", v.type.to_string()}, {"status", v.status}, {"nodes", v.nodes}, {"detail", v.detail}});
  Json final_types = Json::array();
  for (const auto& t : r.final_types()) final_types.push_back(t.to_string());
  return Json{{"dim", r.dim},
              {"rules", rules},
              {"survivors", survivors},
              {"eliminated", eliminated},
              {"oracle", oracle},
              {"final", final_types}};
}

// ---- Hopf data ----

inline Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& [k, c] : v) out.push_back({k, to_json(c)});
  return out;
}

inline Json to_json(const HopfData& h) {
  Json mult = Json::array(), comult = Json::array(), antipode = Json::array(), unit = Json::array(),
       counit = Json::array();
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      for (const auto& [k, c] : h.product(i, j)) mult.push_back({i, j, k, to_json(c)});
  for (int i = 0; i < h.dim; ++i)
    for (const auto& [jk, c] : h.comult[static_cast<std::size_t>(i)]) comult.push_back({i, jk.first, jk.second, to_json(c)});
  for (int i = 0; i < h.dim; ++i)
    for (const auto& [k, c] : h.antipode[static_cast<std::size_t>(i)]) antipode.push_back({i, k, to_json(c)});
  for (const auto& c : to_dense(h.unit, h.dim)) unit.push_back(to_json(c));
  for (const auto& c : h.counit) counit.push_back(to_json(c));
  return Json{{"dim", h.dim}, {"labels", h.labels}, {"mult", mult},     {"comult", comult},
              {"unit", unit}, {"counit", counit},   {"antipode", antipode}};
}

inline HopfData hopf_from_json(const Json& j) {
  HopfData h;
  h.dim = detail::int_field(j, "dim");
  if (h.dim <= 0) throw ParseError("dim must be positive");
  const auto m = static_cast<std::size_t>(h.dim);
  h.labels = detail::get_as<std::vector<std::string>>(detail::field(j, "labels"), "labels");
  h.mult.assign(m * m, Vec{});
  h.comult.assign(m, Tensor2{});
  h.antipode.assign(m, Vec{});
  auto idx = [&](const Json& e, std::size_t t) {
    if (!e.at(t).is_number_integer()) throw ParseError("index must be an integer");
    const int v = e.at(t).get<int>();
    if (v < 0 || v >= h.dim) throw ParseError("index out of range");
    return v;
  };
  auto entries = [&](const char* key, std::size_t width) {
    const Json& a = detail::field(j, key);
    if (!a.is_array()) throw ParseError(std::string(key) + " must be an array");
    for (const auto& e : a)
      if (!e.is_array() || e.size() != width) throw ParseError(std::string("malformed entry in ") + key);
    return a;
  };
  for (const auto& e : entries("mult", 4)) add_term(h.mult[static_cast<std::size_t>(idx(e, 0) * h.dim + idx(e, 1))], idx(e, 2), cyc_from_json(e[3]));
  for (const auto& e : entries("comult", 4)) add_term(h.comult[static_cast<std::size_t>(idx(e, 0))], {idx(e, 1), idx(e, 2)}, cyc_from_json(e[3]));
  for (const auto& e : entries("antipode", 3)) add_term(h.antipode[static_cast<std::size_t>(idx(e, 0))], idx(e, 1), cyc_from_json(e[2]));
  const Json& u = detail::field(j, "unit");
  const Json& c = detail::field(j, "counit");
  if (!u.is_array() || u.size() != m || !c.is_array() || c.size() != m) throw ParseError("unit and counit need dim entries");
  for (std::size_t i = 0; i < m; ++i) {
    add_term(h.unit, static_cast<int>(i), cyc_from_json(u[i]));
    h.counit.push_back(cyc_from_json(c[i]));
  }
  if (h.labels.size() != m) throw ParseError("labels need dim entries");
  return h;
}

inline Json to_json(const HopfReport& r) {
  Json checks = checks_json(r.checks, "hopf:");
  return Json{{"passed", r.passed()},
              {"checks", checks},
              {"s_squared_identity", r.s_squared_identity},
              {"s_squared_citation", citation("hopf:s-squared-identity")}};
}

// ---- human tables ----

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_object() && v.contains("conductor") && v.contains("coeffs")) {
    try {
      return cyc_from_json(v).to_string();
    } catch (const Error&) {
    }
  }
  return v.dump();
}

inline bool is_scalar_like(const Json& v) {
  return !v.is_structured() || (v.is_object() && v.contains("conductor") && v.contains("coeffs"));
}

inline void render(std::ostringstream& os, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (is_scalar_like(v)) {
      os << indent << it.key() << ": " << scalar_text(v) << "\n";
    } else if (v.is_object()) {
      os << indent << it.key() << ":\n";
      render(os, v, indent + "  ");
    } else if (v.empty()) {
      os << indent << it.key() << ": (none)\n";
    } else if (std::all_of(v.begin(), v.end(), is_scalar_like)) {
      os << indent << it.key() << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
      os << "\n";
    } else if (std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); })) {
      std::vector<std::string> cols;
      for (const auto& e : v)
        for (auto c = e.begin(); c != e.end(); ++c)
          if (std::find(cols.begin(), cols.end(), c.key()) == cols.end()) cols.push_back(c.key());
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : v) {
        std::vector<std::string> row;
        for (const auto& c : cols) row.push_back(e.contains(c) ? scalar_text(e.at(c)) : "");
        rows.push_back(std::move(row));
      }
      std::vector<std::size_t> width;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::size_t w = cols[c].size();
        for (const auto& r : rows) w = std::max(w, r[c].size());
        width.push_back(w);
      }
      os << indent << it.key() << ":\n";
      auto line = [&](const std::vector<std::string>& cells) {
        os << indent << "  ";
        for (std::size_t c = 0; c < cells.size(); ++c) {
          os << cells[c];
          if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << "\n";
      };
      line(cols);
      for (const auto& r : rows) line(r);
    } else {
      os << indent << it.key() << ":\n";
      for (const auto& e : v) os << indent << "  " << e.dump() << "\n";
    }
  }
}

}  // namespace detail

/// Plain-text rendering of a JSON report: scalars as "key: value", arrays of
/// objects as aligned tables, nested objects indented.
inline std::string render_table(const Json& j) {
  std::ostringstream os;
  detail::render(os, j, "");
  return os.str();
}

}  // namespace hopfcalc
