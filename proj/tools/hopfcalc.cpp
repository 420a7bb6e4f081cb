#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfcalc/builtins.hpp"
#include "hopfcalc/census.hpp"
#include "hopfcalc/fusion.hpp"
#include "hopfcalc/fusion_search.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/json_io.hpp"
#include "hopfcalc/twist.hpp"

using namespace hopfcalc;

namespace {

enum Exit { kOk = 0, kNegative = 1, kBadInput = 2, kBudget = 3 };

struct Global {
  std::string format = "json";
  int threads = 0;
  long long budget = 10'000'000;
};

struct Report {
  Json body;
  int exit = kOk;
};

void collect_citations(const Json& j, Json& out) {
  if (j.is_object()) {
    const auto it = j.find("citation");
    if (it != j.end() && it->is_string() && std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    for (const auto& [k, v] : j.items()) collect_citations(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_citations(v, out);
  }
}

void emit(const Global& g, const std::string& command, const Json& args, const Json& result) {
  Json citations = Json::array();
  collect_citations(result, citations);
  Json out{{"command", command}, {"arguments", args}, {"result", result}, {"citations", citations}};
  if (g.format == "table")
    std::cout << render_table(out);
  else
    std::cout << out.dump(2) << "\n";
}

std::string read_text(const std::string& source) {
  if (!source.empty() && (source.front() == '{' || source.front() == '[')) return source;
  std::ifstream in(source);
  if (!in) throw ParseError("cannot read '" + source + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FiniteGroup resolve_group(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return group_from_json(parse_json_text(spec));
  return builtin_group(spec);
}

Subgroup resolve_subgroup(const std::string& group_name, const FiniteGroup& g, const std::string& spec) {
  if (spec.empty() || !std::isdigit(static_cast<unsigned char>(spec.front()))) return named_subgroup(group_name, g, spec);
  Subgroup s;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size() || v < 0 || v >= g.order()) throw ParseError("bad subgroup element '" + item + "'");
      s.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad subgroup element '" + item + "'");
    }
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!is_subgroup(g, s)) throw NotAbelianSubgroup("elements " + spec + " do not form a subgroup");
  return s;
}

AltBicharacter resolve_bicharacter(const AbelianStructure& s, const std::string& text) {
  const Json m = parse_json_text(text);
  if (!m.is_array()) throw ParseError("bicharacter must be a JSON matrix");
  const bool exponents = std::all_of(m.begin(), m.end(), [](const Json& row) {
    return row.is_array() && std::all_of(row.begin(), row.end(), [](const Json& e) { return e.is_number_integer(); });
  });
  if (exponents) return AltBicharacter::from_exponents(s, m.get<std::vector<std::vector<int>>>());
  std::vector<std::vector<CycNumber>> values;
  for (const auto& row : m) {
    if (!row.is_array()) throw ParseError("bicharacter rows must be arrays");
    std::vector<CycNumber> r;
    for (const auto& e : row) r.push_back(cyc_from_json(e));
    values.push_back(std::move(r));
  }
  return AltBicharacter(s, values);
}

Json labels_of(const FiniteGroup& g, const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(g.label(x));
  return out;
}

Json vec_json(const HopfData& h, const Vec& v) { return vec_to_string(h, v); }

// ---- commands ----

Report run_census(const Global& g, int dim, const std::string& rules, bool oracle, const std::vector<std::string>& targets,
                  int n_filter, bool improper, Json& args) {
  CensusOptions opt;
  opt.rules = parse_rule_set(rules);
  opt.proper_only = !improper;
  if (n_filter > 0) opt.n_filter = n_filter;
  opt.oracle = oracle;
  for (const auto& t : targets) opt.oracle_targets.push_back(parse_signature(t));
  opt.search.budget = g.budget;
  opt.search.threads = g.threads;
  args = {{"dim", dim}, {"rules", opt.rules}, {"oracle", oracle}, {"oracle_targets", targets},
          {"n", n_filter > 0 ? Json(n_filter) : Json(nullptr)}, {"improper", improper}, {"budget", g.budget}};
  const CensusResult r = enumerate_types(dim, opt);
  return {to_json(r, opt), kOk};
}

Report run_fusion_search(const Global& g, const std::string& type, const std::string& profile, Json& args) {
  SearchOptions opt;
  opt.profile = AxiomProfile::parse(profile);
  opt.budget = g.budget;
  opt.threads = g.threads;
  const AlgebraTypeSignature t = parse_signature(type);
  args = {{"type", t.to_string()}, {"profile", opt.profile.name()}, {"budget", g.budget}};
  const SearchOutcome o = search_fusion(t, opt);
  Json body{{"type", t.to_string()}, {"dimension", t.dimension()}, {"profile", opt.profile.name()}};
  body.update(to_json(o));
  const int code = o.status == SearchOutcome::Status::Feasible     ? kOk
                   : o.status == SearchOutcome::Status::Infeasible ? kNegative
                                                                   : kBudget;
  return {body, code};
}

Report run_fusion_verify(const std::string& datum, const std::string& group, const std::string& profile, Json& args) {
  if (datum.empty() == group.empty()) throw ParseError("give exactly one of --datum or --group");
  const AxiomProfile p = AxiomProfile::parse(profile);
  const FusionDatum f = datum.empty() ? from_group_characters(resolve_group(group)) : fusion_datum_from_json(parse_json_text(read_text(datum)));
  args = {{"datum", datum.empty() ? Json(nullptr) : Json(datum)}, {"group", group.empty() ? Json(nullptr) : Json(group)},
          {"profile", p.name()}};
  const FusionReport r = verify_fusion_datum(f, p);
  Json body{{"type", f.signature().to_string()}, {"datum", to_json(f)}};
  body.update(to_json(r));
  return {body, r.passed() ? kOk : kNegative};
}

Report run_double(const std::string& group, Json& args) {
  const FiniteGroup g = resolve_group(group);
  args = {{"group", group}};
  Json classes = Json::array();
  for (const auto& cls : g.conjugacy_classes()) {
    const Subgroup c = centralizer(g, cls.front());
    classes.push_back({{"representative", g.label(cls.front())},
                       {"class_size", cls.size()},
                       {"centralizer_order", c.size()},
                       {"centralizer_degrees", irreducible_degrees(subgroup_as_group(g, c))}});
  }
  const AlgebraTypeSignature t = drinfeld_double_group_type(g);
  return {Json{{"group_order", g.order()},
               {"type", t.to_string()},
               {"dimension", t.dimension()},
               {"classes", classes},
               {"citation", citation("double:group-type")}},
          kOk};
}

std::string character_name(const HopfData& h, const CharacterFunctional& eta, const std::vector<int>& gens) {
  std::string s;
  for (int i : gens) s += (s.empty() ? "" : ",") + h.label(i) + ":" + eta[i].to_string();
  return "(" + s + ")";
}

Report run_h8_report(Json& args) {
  args = Json::object();
  const HopfData h = build_h8();
  const std::vector<int> gens{1, 2, 4};
  const HopfReport axioms = verify_hopf_axioms(h);
  bool ok = axioms.passed() && axioms.s_squared_identity;

  const auto group_likes = group_like_elements(h);
  const auto central = central_group_likes(h);
  Json gl = Json::array(), cgl = Json::array();
  for (const auto& v : group_likes) gl.push_back(vec_json(h, v));
  for (const auto& v : central) cgl.push_back(vec_json(h, v));

  const HopfData d = dual(h);
  const auto chars = algebra_characters(h, gens);
  Json cj = Json::array(), hits = Json::array();
  const Rational half(1, 2);
  for (const auto& eta : chars) {
    const Vec as_dual = to_sparse(eta.values);
    bool is_central = true;
    for (int k = 0; k < d.dim && is_central; ++k) is_central = d.multiply(as_dual, basis_vector(k)) == d.multiply(basis_vector(k), as_dual);
    cj.push_back({{"name", character_name(h, eta, gens)}, {"x", to_json(eta[1])}, {"y", to_json(eta[2])},
                  {"z", to_json(eta[4])}, {"central", is_central}});
    // (1 + y + eta(x)(1 - y)) eta(z) z / 2
    const Vec factor{{0, (CycNumber(1) + eta[1]) * half}, {2, (CycNumber(1) - eta[1]) * half}};
    Vec expected;
    for (const auto& [k, c] : factor)
      if (!c.is_zero()) add_into(expected, h.multiply(basis_vector(k), basis_vector(4)), c * eta[4]);
    const Vec got = hit_left(eta, basis_vector(4), h);
    ok = ok && got == expected;
    hits.push_back({{"character", character_name(h, eta, gens)}, {"eta_hit_z", vec_json(h, got)}, {"closed_form", got == expected}});
  }

  const YDPairReport yd = yd_one_dim_pairs(h);
  Json pairs = Json::array();
  for (const auto& p : yd.pairs)
    pairs.push_back({{"g", vec_json(h, yd.group_likes[static_cast<std::size_t>(p.g)])},
                     {"eta", character_name(h, yd.characters[static_cast<std::size_t>(p.eta)], gens)}});
  int max_order = 1;
  for (int a = 0; a < yd.group.order(); ++a) max_order = std::max(max_order, yd.group.element_order(a));

  const AlgebraTypeSignature h_type = complete_type(8, static_cast<int>(chars.size()), {2}).unique();
  const AlgebraTypeSignature dual_type = complete_type(8, static_cast<int>(group_likes.size()), {2}).unique();
  const AlgebraTypeSignature coalgebra = tensor_type(h_type, dual_type);
  const auto completion = complete_type(64, static_cast<int>(yd.pairs.size()), {2});
  ok = ok && yd.pairs.size() == 8 && max_order <= 2;

  Json body{{"dim", h.dim},
            {"labels", h.labels},
            {"axioms", to_json(axioms)},
            {"group_likes", gl},
            {"central_group_likes", cgl},
            {"characters", cj},
            {"hit_left_z", hits},
            {"hit_citation", citation("hit:left")},
            {"yd_pairs", {{"count", yd.pairs.size()}, {"structure", yd.structure}, {"max_order", max_order}, {"pairs", pairs},
                          {"citation", citation("yd:one-dimensional")}}},
            {"double",
             {{"one_dimensional_representations", yd.pairs.size()},
              {"coalgebra_type", coalgebra.to_string()},
              {"coalgebra_citation", citation("double:coalgebra")},
              {"algebra_type", completion.unique().to_string()},
              {"algebra_citation", citation("double:algebra")}}},
            {"passed", ok}};
  return {body, ok ? kOk : kNegative};
}

Report run_twist(const std::string& group, const std::string& subgroup, const std::string& bichar, bool check_cocomm,
                 bool group_likes, Json& args) {
  const FiniteGroup g = resolve_group(group);
  const Subgroup a = resolve_subgroup(group, g, subgroup);
  args = {{"group", group}, {"subgroup", subgroup}, {"bicharacter", bichar}, {"check_cocommutative", check_cocomm},
          {"group_likes", group_likes}};
  CharacterGroup chars;
  try {
    chars = character_group(g, a);
  } catch (const NotAbelian& e) {
    throw NotAbelianSubgroup(e.what());
  }
  const AltBicharacter b = resolve_bicharacter(chars.basis.structure, bichar);
  const TwistElement phi = build_lifted_twist(g, a, b);
  const HopfData h = from_group(g);
  const CheckList tv = verify_twist(h, phi);

  Json body{{"group_order", g.order()},
            {"subgroup", labels_of(g, a)},
            {"dual_structure", chars.basis.structure.to_string()},
            {"bicharacter_exponents", b.exponents()},
            {"bicharacter_modulus", b.modulus()},
            {"nondegenerate", b.is_nondegenerate()},
            {"twist", {{"passed", tv.passed()}, {"checks", checks_json(tv.checks, "twist:")}}}};
  bool ok = tv.passed();
  if (tv.passed()) {
    const HopfData t = twist_hopf(h, phi, false);
    const HopfReport r = verify_hopf_axioms(t);
    ok = ok && r.passed();
    body["twisted_axioms"] = to_json(r);
    if (check_cocomm) {
      Json crit{{"citation", citation("twist:cocommutativity-criterion")}};
      if (is_normal(g, a)) {
        crit["applicable"] = true;
        crit["value"] = cocommutativity_criterion(g, a, b);
      } else {
        crit["applicable"] = false;
        crit["value"] = nullptr;
        crit["detail"] = "subgroup is not normal";
      }
      body["cocommutative"] = is_cocommutative(t);
      body["criterion"] = crit;
    }
    if (group_likes) {
      const auto surv = surviving_group_likes(g, phi);
      body["surviving_group_likes"] = {{"elements", labels_of(g, surv)},
                                       {"count", surv.size()},
                                       {"scope", "elements of G only; group-likes supported off the group basis are not searched"},
                                       {"citation", citation("twist:surviving-group-likes")}};
    }
  }
  body["passed"] = ok;
  return {body, ok ? kOk : kNegative};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for semisimple Hopf algebras of low dimension"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores); never changes output")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", g.budget, "Search node limit")->check(CLI::PositiveNumber);

  int dim = 0, n_filter = 0;
  std::string rules = "all";
  bool oracle = false, improper = false;
  std::vector<std::string> targets;
  auto* census = app.add_subcommand("census", "Enumerate algebra types of a given dimension");
  census->add_option("--dim", dim, "Dimension N")->required()->check(CLI::PositiveNumber);
  census->add_option("--rules", rules, "Rule set: all, R1-R8, R1..R10 or R1,R4,R5");
  census->add_flag("--oracle", oracle, "Run the fusion search on survivors");
  census->add_option("--oracle-target", targets, "Restrict the oracle to these types");
  census->add_option("--n", n_filter, "Only types with this many one-dimensional representations");
  census->add_flag("--improper", improper, "Include types without higher-degree entries");

  std::string type, profile = "hopf";
  auto* search = app.add_subcommand("fusion-search", "Search for a fusion datum of a given type");
  search->add_option("--type", type, "Type string such as 1,2;2,1;4,1")->required();
  search->add_option("--profile", profile, "Axiom profile: hopf or fusion");

  std::string datum, group;
  auto* verify = app.add_subcommand("fusion-verify", "Check a fusion datum against an axiom profile");
  verify->add_option("--datum", datum, "Fusion datum JSON file or inline JSON");
  verify->add_option("--group", group, "Use the character ring of a group instead");
  verify->add_option("--profile", profile, "Axiom profile: hopf or fusion");

  auto* dbl = app.add_subcommand("double", "Algebra type of the Drinfeld double of a group");
  dbl->add_option("--group", group, "Built-in group name or JSON group spec")->required();

  auto* h8 = app.add_subcommand("h8-report", "Verify the eight-dimensional Kac-Paljutkin algebra and its double");

  std::string subgroup, bichar;
  bool check_cocomm = false, gl = false;
  auto* twist = app.add_subcommand("twist", "Twist a group algebra by a cocycle lifted from an abelian subgroup");
  twist->add_option("--group", group, "Built-in group name or JSON group spec")->required();
  twist->add_option("--subgroup", subgroup, "Subgroup name or comma-separated element indices")->required();
  twist->add_option("--bicharacter", bichar, "Alternating bicharacter: JSON matrix of integer exponents, or of values given as strings or cyclotomic objects")->required();
  twist->add_flag("--check-cocommutative", check_cocomm, "Compare the criterion with the direct computation");
  twist->add_flag("--group-likes", gl, "List group elements that stay group-like");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Json args;
    Report r;
    std::string name;
    if (*census) {
      name = "census";
      r = run_census(g, dim, rules, oracle, targets, n_filter, improper, args);
    } else if (*search) {
      name = "fusion-search";
      r = run_fusion_search(g, type, profile, args);
    } else if (*verify) {
      name = "fusion-verify";
      r = run_fusion_verify(datum, group, profile, args);
    } else if (*dbl) {
      name = "double";
      r = run_double(group, args);
    } else if (*h8) {
      name = "h8-report";
      r = run_h8_report(args);
    } else {
      name = "twist";
      r = run_twist(group, subgroup, bichar, check_cocomm, gl, args);
    }
    emit(g, name, args, r.body);
    return r.exit;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
