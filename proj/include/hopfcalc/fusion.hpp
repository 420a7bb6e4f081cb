#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hopfcalc/abelian.hpp"
#include "hopfcalc/check.hpp"
#include "hopfcalc/errors.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/signature.hpp"

namespace hopfcalc {

/// A based ring of irreducible characters. N(i,j,k) = m(chi_k, chi_i chi_j).
struct FusionDatum {
  std::vector<int> degrees;
  std::vector<int> dual;
  int unit = 0;
  std::vector<int> constants;  // dense r^3, index (i*r + j)*r + k

  FusionDatum() = default;
  FusionDatum(std::vector<int> deg, std::vector<int> du, int u = 0)
      : degrees(std::move(deg)), dual(std::move(du)), unit(u), constants(degrees.size() * degrees.size() * degrees.size(), 0) {}

  int size() const { return static_cast<int>(degrees.size()); }
  int deg(int i) const { return degrees[static_cast<std::size_t>(i)]; }
  int star(int i) const { return dual[static_cast<std::size_t>(i)]; }

  int N(int i, int j, int k) const { return constants[index(i, j, k)]; }
  int& N(int i, int j, int k) { return constants[index(i, j, k)]; }

  int dimension() const {
    int d = 0;
    for (int x : degrees) d += x * x;
    return d;
  }

  std::vector<int> group_likes() const {
    std::vector<int> g;
    for (int i = 0; i < size(); ++i)
      if (deg(i) == 1) g.push_back(i);
    return g;
  }

  /// For degree-1 g: the unique k with N(g,i,k) = 1, or -1.
  int left_translate(int g, int i) const {
    int found = -1;
    for (int k = 0; k < size(); ++k) {
      if (N(g, i, k) == 0) continue;
      if (N(g, i, k) != 1 || found >= 0) return -1;
      found = k;
    }
    return found;
  }
  int right_translate(int i, int g) const {
    int found = -1;
    for (int k = 0; k < size(); ++k) {
      if (N(i, g, k) == 0) continue;
      if (N(i, g, k) != 1 || found >= 0) return -1;
      found = k;
    }
    return found;
  }

  AlgebraTypeSignature signature() const { return AlgebraTypeSignature::from_degrees(degrees); }

  friend bool operator==(const FusionDatum&, const FusionDatum&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    const auto r = degrees.size();
    return (static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r + static_cast<std::size_t>(k);
  }
};

/// Axiom set used by verification and search. "fusion" holds the based-ring
/// axioms; "hopf" adds the stabilizer, closure-divisibility and degree-2
/// dichotomy constraints satisfied by character rings of semisimple Hopf
/// algebras.
struct AxiomProfile {
  bool hopf = false;

  static AxiomProfile fusion() { return {false}; }
  static AxiomProfile hopf_profile() { return {true}; }
  std::string name() const { return hopf ? "hopf" : "fusion"; }

  static AxiomProfile parse(const std::string& s) {
    if (s == "hopf") return hopf_profile();
    if (s == "fusion") return fusion();
    throw ParseError("unknown profile '" + s + "' (expected hopf or fusion)");
  }
};

struct FusionReport : CheckList {
  std::string profile;
};

namespace detail {

inline std::string triple(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

inline void check_well_formed(const FusionDatum& f) {
  const int r = f.size();
  if (r == 0) throw InvalidDatum("empty datum");
  if (static_cast<int>(f.dual.size()) != r) throw InvalidDatum("dual has wrong length");
  if (f.constants.size() != static_cast<std::size_t>(r) * r * r) throw InvalidDatum("constants have wrong size");
  if (f.unit < 0 || f.unit >= r || f.deg(f.unit) != 1) throw InvalidDatum("unit must be a degree-1 index");
  for (int i = 0; i < r; ++i) {
    if (f.deg(i) < 1) throw InvalidDatum("degrees must be positive");
    const int s = f.star(i);
    if (s < 0 || s >= r || f.star(s) != i) throw InvalidDatum("dual is not an involution");
    if (f.deg(s) != f.deg(i)) throw InvalidDatum("dual does not preserve degrees");
  }
  for (int v : f.constants)
    if (v < 0) throw InvalidDatum("structure constants must be nonnegative");
}

}  // namespace detail

/// G[chi_i] = {g of degree 1 : g chi_i = chi_i}, i.e. N(g,i,i) = 1.
inline std::vector<int> left_stabilizer(const FusionDatum& f, int i) {
  std::vector<int> out;
  for (int g : f.group_likes())
    if (f.N(g, i, i) == 1) out.push_back(g);
  return out;
}

/// Multiplication table of the degree-1 elements, or an empty group when
/// they are not closed under products.
inline std::optional<FiniteGroup> group_of_group_likes(const FusionDatum& f) {
  const auto g = f.group_likes();
  std::map<int, int> pos;
  for (std::size_t i = 0; i < g.size(); ++i) pos[g[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(g.size(), std::vector<int>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      const int k = f.left_translate(g[a], g[b]);
      if (k < 0 || !pos.count(k)) return std::nullopt;
      t[a][b] = pos[k];
    }
  try {
    return FiniteGroup(std::move(t));
  } catch (const InvalidGroup&) {
    return std::nullopt;
  }
}

/// Subsets containing the unit, closed under duality and product supports.
/// Each closed set is found as the closure of a smaller closed set plus one
/// element, so every one is reached.
inline std::vector<std::vector<int>> standard_subalgebras(const FusionDatum& f) {
  const int r = f.size();
  if (r > 30) throw InvalidDatum("standard subalgebra enumeration limited to 30 elements");
  auto closure = [&](unsigned long mask) {
    mask |= 1ul << f.unit;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < r; ++i) {
        if (!(mask >> i & 1)) continue;
        if (!(mask >> f.star(i) & 1)) {
          mask |= 1ul << f.star(i);
          grew = true;
        }
        for (int j = 0; j < r; ++j) {
          if (!(mask >> j & 1)) continue;
          for (int k = 0; k < r; ++k)
            if (f.N(i, j, k) > 0 && !(mask >> k & 1)) {
              mask |= 1ul << k;
              grew = true;
            }
        }
      }
    }
    return mask;
  };
  std::set<unsigned long> seen;
  std::vector<unsigned long> todo{closure(0)};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    const unsigned long m = todo.back();
    todo.pop_back();
    for (int x = 0; x < r; ++x) {
      if (m >> x & 1) continue;
      const unsigned long c = closure(m | 1ul << x);
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  std::vector<std::vector<int>> out;
  for (unsigned long m : seen) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (m >> i & 1) s.push_back(i);
    out.push_back(std::move(s));
  }
  auto dim = [&](const std::vector<int>& s) {
    int d = 0;
    for (int i : s) d += f.deg(i) * f.deg(i);
    return d;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const int da = dim(a), db = dim(b);
    return da != db ? da < db : a < b;
  });
  return out;
}

inline int subalgebra_dimension(const FusionDatum& f, const std::vector<int>& s) {
  int d = 0;
  for (int i : s) d += f.deg(i) * f.deg(i);
  return d;
}

namespace detail {

/// The degree-2 dichotomy for chi_i with trivial stabilizer: chi chi* must be
/// eps + psi with deg psi = 3 and, without degree-4 elements, psi^2 equal to
/// the sum of G[psi] plus 2 psi with |G[psi]| = 3. Returns "" when satisfied.
inline std::string nr_violation(const FusionDatum& f, int i) {
  if (left_stabilizer(f, i).size() > 1) return "";
  const int r = f.size();
  int psi = -1;
  for (int k = 0; k < r; ++k) {
    const int v = f.N(i, f.star(i), k);
    if (k == f.unit) {
      if (v != 1) return "chi chi* does not contain the unit once";
      continue;
    }
    if (v == 0) continue;
    if (v != 1 || f.deg(k) != 3 || psi >= 0) return "trivial stabilizer but chi chi* is not eps + psi with deg psi = 3";
    psi = k;
  }
  if (psi < 0) return "trivial stabilizer but chi chi* is not eps + psi with deg psi = 3";
  const bool has_deg4 = std::any_of(f.degrees.begin(), f.degrees.end(), [](int d) { return d == 4; });
  if (has_deg4) return "";
  const auto stab = left_stabilizer(f, psi);
  if (stab.size() != 3) return "psi has stabilizer of order " + std::to_string(stab.size()) + ", expected 3";
  for (int k = 0; k < r; ++k) {
    const int want = k == psi ? 2 : (std::find(stab.begin(), stab.end(), k) != stab.end() ? 1 : 0);
    if (f.N(psi, psi, k) != want) return "psi^2 is not the sum of G[psi] plus 2 psi";
  }
  return "";
}

}  // namespace detail

/// Checks every axiom of the profile and reports the first violation of each.
inline FusionReport verify_fusion_datum(const FusionDatum& f, const AxiomProfile& profile) {
  detail::check_well_formed(f);
  const int r = f.size();
  const int u = f.unit;
  FusionReport rep;
  rep.profile = profile.name();
  using detail::triple;

  auto run = [&](const std::string& name, auto&& body) {
    AxiomCheck c{name, true, ""};
    std::string why = body();
    if (!why.empty()) {
      c.passed = false;
      c.detail = why;
    }
    rep.checks.push_back(c);
  };

  run("unit", [&]() -> std::string {
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const int want = j == k ? 1 : 0;
        if (f.N(u, j, k) != want) return "N" + triple(u, j, k) + " = " + std::to_string(f.N(u, j, k));
        if (f.N(j, u, k) != want) return "N" + triple(j, u, k) + " = " + std::to_string(f.N(j, u, k));
      }
    return "";
  });
  run("duality", [&]() -> std::string {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const int want = j == f.star(i) ? 1 : 0;
        if (f.N(i, j, u) != want) return "N" + triple(i, j, u) + " = " + std::to_string(f.N(i, j, u));
      }
    return "";
  });
  run("frobenius", [&]() -> std::string {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          const int v = f.N(i, j, k);
          if (v != f.N(f.star(i), k, j)) return "N" + triple(i, j, k) + " != N" + triple(f.star(i), k, j);
          if (v != f.N(j, f.star(k), f.star(i))) return "N" + triple(i, j, k) + " != N" + triple(j, f.star(k), f.star(i));
        }
    return "";
  });
  run("degree", [&]() -> std::string {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        long long s = 0;
        for (int k = 0; k < r; ++k) s += static_cast<long long>(f.N(i, j, k)) * f.deg(k);
        if (s != static_cast<long long>(f.deg(i)) * f.deg(j))
          return "row (" + std::to_string(i) + "," + std::to_string(j) + ") has degree " + std::to_string(s);
      }
    return "";
  });
  run("group-like-multiplicity", [&]() -> std::string {
    for (int i = 0; i < r; ++i)
      for (int g : f.group_likes())
        if (f.N(i, f.star(i), g) > 1) return "N" + triple(i, f.star(i), g) + " = " + std::to_string(f.N(i, f.star(i), g));
    return "";
  });
  run("group-like-closure", [&]() -> std::string {
    for (int g : f.group_likes()) {
      if (f.deg(f.star(g)) != 1) return "dual of " + std::to_string(g) + " has degree > 1";
      for (int h : f.group_likes()) {
        const int k = f.left_translate(g, h);
        if (k < 0 || f.deg(k) != 1) return "product of " + std::to_string(g) + " and " + std::to_string(h) + " is not group-like";
      }
    }
    return "";
  });
  run("associativity", [&]() -> std::string {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l) {
            long long a = 0, b = 0;
            for (int t = 0; t < r; ++t) {
              a += static_cast<long long>(f.N(i, j, t)) * f.N(t, k, l);
              b += static_cast<long long>(f.N(j, k, t)) * f.N(i, t, l);
            }
            if (a != b)
              return "((" + std::to_string(i) + "," + std::to_string(j) + ")," + std::to_string(k) + ") vs (" +
                     std::to_string(i) + ",(" + std::to_string(j) + "," + std::to_string(k) + ")) at " + std::to_string(l);
          }
    return "";
  });
  if (!profile.hopf) return rep;

  const bool group_ok = rep.check("group-like-closure").passed;
  std::optional<FiniteGroup> glg = group_ok ? group_of_group_likes(f) : std::nullopt;
  const auto gl = f.group_likes();
  auto group_pos = [&](int g) { return static_cast<int>(std::find(gl.begin(), gl.end(), g) - gl.begin()); };

  run("stabilizer-order", [&]() -> std::string {
    for (int i = 0; i < r; ++i) {
      const auto s = left_stabilizer(f, i);
      if ((f.deg(i) * f.deg(i)) % static_cast<int>(s.size()) != 0)
        return "|G[" + std::to_string(i) + "]| = " + std::to_string(s.size()) + " does not divide " + std::to_string(f.deg(i) * f.deg(i));
    }
    return "";
  });
  run("stabilizer-exponent", [&]() -> std::string {
    if (!glg) return "degree-1 elements do not form a group";
    for (int i = 0; i < r; ++i)
      for (int g : left_stabilizer(f, i)) {
        const int o = glg->element_order(group_pos(g));
        if (f.deg(i) % o != 0)
          return "element " + std::to_string(g) + " of order " + std::to_string(o) + " stabilizes " + std::to_string(i);
      }
    return "";
  });
  run("closure-divisibility", [&]() -> std::string {
    const int n = f.dimension();
    for (const auto& s : standard_subalgebras(f)) {
      const int d = subalgebra_dimension(f, s);
      if (n % d != 0) {
        std::string set;
        for (int x : s) set += (set.empty() ? "" : ",") + std::to_string(x);
        return "standard subalgebra {" + set + "} has dimension " + std::to_string(d) + " not dividing " + std::to_string(n);
      }
    }
    return "";
  });
  run("nr-dichotomy", [&]() -> std::string {
    for (int i = 0; i < r; ++i) {
      if (f.deg(i) != 2) continue;
      const std::string why = detail::nr_violation(f, i);
      if (!why.empty()) return "element " + std::to_string(i) + ": " + why;
    }
    return "";
  });
  return rep;
}

/// The character ring of an abelian group (the group ring of its dual) or of
/// one of the nonabelian groups of order 6 and 8.
inline FusionDatum from_group_characters(const FiniteGroup& g) {
  if (g.is_abelian()) {
    const auto s = abelian_structure(g);
    const int n = s.order();
    FusionDatum f(std::vector<int>(static_cast<std::size_t>(n), 1), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x) {
      auto c = s.coords(x);
      for (auto& v : c) v = -v;
      f.dual[static_cast<std::size_t>(x)] = s.index(c);
      for (int y = 0; y < n; ++y) {
        auto cx = s.coords(x), cy = s.coords(y);
        for (std::size_t i = 0; i < cx.size(); ++i) cx[i] += cy[i];
        f.N(x, y, s.index(cx)) = 1;
      }
    }
    return f;
  }
  if (g.order() == 6) {
    // eps, sgn, chi with chi^2 = eps + sgn + chi
    FusionDatum f({1, 1, 2}, {0, 1, 2});
    const int table[3][3][3] = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
                                {{0, 0, 1}, {0, 0, 1}, {1, 1, 1}}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) f.N(i, j, k) = table[i][j][k];
    return f;
  }
  if (g.order() == 8) {
    // Z_2 x Z_2 of linear characters, chi fixed by all of them, chi^2 = sum of them
    FusionDatum f({1, 1, 1, 1, 2}, {0, 1, 2, 3, 4});
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) f.N(a, b, a ^ b) = 1;
      f.N(a, 4, 4) = 1;
      f.N(4, a, 4) = 1;
      f.N(4, 4, a) = 1;
    }
    return f;
  }
  throw UnsupportedGroup("character ring only shipped for abelian groups and the nonabelian groups of order 6 and 8");
}

/// The action (g,h).chi = g chi h^-1 of G x G on degree-d elements.
struct BiactionOrbit {
  std::vector<int> elements;
  int representative = -1;
  std::vector<std::pair<int, int>> stabilizer;  // pairs (g,h) fixing the representative
};

struct BiactionReport {
  int degree = 0;
  std::vector<BiactionOrbit> orbits;
  bool order_pq_hypotheses = false;  // nonabelian G of order pq, p < q, all G[chi] != 1 on X_p
  bool order_pq_conclusion = true;   // q^2 divides |X_p|
  bool order_pq_holds() const { return !order_pq_hypotheses || order_pq_conclusion; }
};

inline BiactionReport biaction_orbits(const FusionDatum& f, int d) {
  detail::check_well_formed(f);
  BiactionReport rep;
  rep.degree = d;
  const auto gl = f.group_likes();
  std::vector<int> xd;
  for (int i = 0; i < f.size(); ++i)
    if (f.deg(i) == d) xd.push_back(i);
  std::set<int> done;
  auto act = [&](int g, int h, int i) {
    const int a = f.left_translate(g, i);
    if (a < 0) throw InvalidDatum("g chi is not irreducible");
    const int b = f.right_translate(a, f.star(h));
    if (b < 0) throw InvalidDatum("chi h is not irreducible");
    return b;
  };
  for (int x : xd) {
    if (done.count(x)) continue;
    BiactionOrbit o;
    o.representative = x;
    std::set<int> orbit;
    for (int g : gl)
      for (int h : gl) {
        const int y = act(g, h, x);
        orbit.insert(y);
        if (y == x) o.stabilizer.emplace_back(g, h);
      }
    o.elements.assign(orbit.begin(), orbit.end());
    done.insert(orbit.begin(), orbit.end());
    rep.orbits.push_back(std::move(o));
  }
  // order pq check for the prime p = d
  const int n = static_cast<int>(gl.size());
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int p = 2; p * p <= v; ++p)
      if (v % p == 0) return false;
    return true;
  };
  const auto grp = group_of_group_likes(f);
  if (is_prime(d) && n % d == 0 && is_prime(n / d) && d < n / d && grp && !grp->is_abelian()) {
    bool all_nontrivial = true;
    for (int x : xd) all_nontrivial = all_nontrivial && left_stabilizer(f, x).size() > 1;
    rep.order_pq_hypotheses = all_nontrivial;
    const int q = n / d;
    rep.order_pq_conclusion = static_cast<int>(xd.size()) % (q * q) == 0;
  }
  return rep;
}

/// sum over g in the subgroup G of N(i*, i, g) = |G[chi_i*] intersect G|.
inline int quotient_end_dim(const FusionDatum& f, const std::vector<int>& group, int i) {
  int s = 0;
  for (int g : group) {
    if (f.deg(g) != 1) throw InvalidDatum("subgroup must consist of degree-1 elements");
    s += f.N(f.star(i), i, g);
  }
  return s;
}

/// One coalgebra orbit: component dimension d^2, orbit size, stabilizer order.
struct OrbitDatum {
  int component_dim = 1;
  int orbit_size = 1;
  int stabilizer_order = 1;
};

/// Dimensions of the simple components of the quotient coalgebra by a group
/// of order group_order, one per orbit: d^2 * size / |G|. Orbit data must
/// cover every component of the type, group-likes included.
inline std::vector<int> quotient_coalgebra_type(const AlgebraTypeSignature& type, const std::vector<OrbitDatum>& orbits,
                                                int group_order) {
  if (group_order < 1) throw InconsistentOrbitData("group order must be positive");
  std::map<int, int> covered;
  long long total = 0;
  std::vector<int> out;
  for (const auto& o : orbits) {
    if (o.orbit_size * o.stabilizer_order != group_order)
      throw InconsistentOrbitData("orbit size " + std::to_string(o.orbit_size) + " times stabilizer order " +
                                  std::to_string(o.stabilizer_order) + " is not " + std::to_string(group_order));
    int d = 1;
    while (d * d < o.component_dim) ++d;
    if (d * d != o.component_dim) throw InconsistentOrbitData("component dimension is not a square");
    covered[d] += o.orbit_size;
    total += static_cast<long long>(o.component_dim) * o.orbit_size;
    const long long q = static_cast<long long>(o.component_dim) * o.orbit_size;
    if (q % group_order != 0) throw InconsistentOrbitData("quotient component dimension is not an integer");
    out.push_back(static_cast<int>(q / group_order));
  }
  if (total != type.dimension())
    throw InconsistentOrbitData("orbits cover dimension " + std::to_string(total) + ", type has " + std::to_string(type.dimension()));
  std::vector<int> degrees{1};
  for (auto [d, m] : type.entries) degrees.push_back(d);
  for (auto [d, c] : covered) degrees.push_back(d);
  for (int d : degrees)
    if (covered[d] != type.multiplicity(d))
      throw InconsistentOrbitData("orbits cover " + std::to_string(covered[d]) + " components of degree " +
                                  std::to_string(d) + ", type has " + std::to_string(type.multiplicity(d)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopfcalc
