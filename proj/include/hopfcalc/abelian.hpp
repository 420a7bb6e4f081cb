#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfcalc/cyclotomic.hpp"
#include "hopfcalc/group.hpp"

namespace hopfcalc {

/// Invariant factors m_1 | m_2 | ... | m_k; the trivial group has none.
struct AbelianStructure {
  std::vector<int> invariant_factors;

  int order() const {
    int n = 1;
    for (int m : invariant_factors) n *= m;
    return n;
  }
  int exponent() const { return invariant_factors.empty() ? 1 : invariant_factors.back(); }
  int rank() const { return static_cast<int>(invariant_factors.size()); }

  /// Mixed-radix coordinates, first factor least significant.
  std::vector<int> coords(int index) const {
    std::vector<int> c(invariant_factors.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = index % invariant_factors[i];
      index /= invariant_factors[i];
    }
    return c;
  }
  int index(const std::vector<int>& c) const {
    int idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      const int m = invariant_factors[i];
      idx = idx * m + ((c[i] % m) + m) % m;
    }
    return idx;
  }

  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;

  std::string to_string() const {
    if (invariant_factors.empty()) return "1";
    std::string s;
    for (int m : invariant_factors) s += (s.empty() ? "Z" : " x Z") + std::to_string(m);
    return s;
  }
};

namespace detail {

inline std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

/// Invariant factors of an abelian group from counts of p^k-torsion.
inline AbelianStructure structure_from_orders(const std::vector<int>& orders) {
  const int n = static_cast<int>(orders.size());
  std::vector<std::vector<int>> parts;  // per prime, descending p-power parts
  std::size_t width = 0;
  for (int p : prime_factors(n)) {
    std::vector<int> s{0};
    for (int pk = p;; pk *= p) {
      int c = 0;
      for (int o : orders)
        if (pk % o == 0) ++c;
      int e = 0;
      while (c > 1) {
        c /= p;
        ++e;
      }
      s.push_back(e);
      if (n % pk != 0 || s.back() == s[s.size() - 2]) break;
    }
    // number of parts with exponent >= k is s_k - s_{k-1}
    std::vector<int> powers;
    int pk = 1;
    for (std::size_t k = 1; k < s.size(); ++k) {
      pk *= p;
      const int ge = s[k] - s[k - 1];
      const int ge_next = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      for (int r = 0; r < ge - ge_next; ++r) powers.push_back(pk);
    }
    std::sort(powers.begin(), powers.end(), std::greater<>());
    width = std::max(width, powers.size());
    parts.push_back(std::move(powers));
  }
  std::vector<int> factors(width, 1);
  for (const auto& pw : parts)
    for (std::size_t i = 0; i < pw.size(); ++i) factors[i] *= pw[i];
  std::reverse(factors.begin(), factors.end());
  return AbelianStructure{factors};
}

}  // namespace detail

/// A basis e_1..e_k of an abelian subgroup with ord(e_i) = m_i, and the
/// coordinate map between subgroup elements and Z_{m_1} x ... x Z_{m_k}.
struct AbelianBasis {
  AbelianStructure structure;
  std::vector<int> generators;     // element indices in the parent group
  std::vector<int> element_at;     // coordinate index -> parent element
  std::vector<int> coord_index;    // parent element -> coordinate index, -1 outside

  int order() const { return structure.order(); }
  std::vector<int> coords_of(int element) const {
    return structure.coords(coord_index[static_cast<std::size_t>(element)]);
  }
  bool contains(int element) const { return coord_index[static_cast<std::size_t>(element)] >= 0; }
};

/// Finds a basis by backtracking over elements of the required orders,
/// smallest indices first.
inline AbelianBasis abelian_basis(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) throw InvalidGroup("not a subgroup");
  if (!is_abelian_subset(g, s)) throw NotAbelian("subgroup is not abelian");
  std::vector<int> orders;
  for (int x : s) orders.push_back(g.element_order(x));
  AbelianBasis out;
  out.structure = detail::structure_from_orders(orders);
  const auto& m = out.structure.invariant_factors;
  const std::size_t k = m.size();
  std::vector<int> chosen;

  std::function<bool(const std::vector<int>&)> extend = [&](const std::vector<int>& span) -> bool {
    if (chosen.size() == k) return true;
    const int mi = m[chosen.size()];
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int x : span) in[static_cast<std::size_t>(x)] = 1;
    for (int x : s) {
      if (g.element_order(x) != mi) continue;
      bool trivial_meet = true;
      for (int p = x, e = 1; e < mi && trivial_meet; ++e, p = g.mul(p, x)) trivial_meet = !in[static_cast<std::size_t>(p)];
      if (!trivial_meet) continue;
      std::vector<int> next;
      for (int y : span)
        for (int e = 0, p = g.identity(); e < mi; ++e, p = g.mul(p, x)) next.push_back(g.mul(y, p));
      chosen.push_back(x);
      if (extend(next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend({g.identity()})) throw InvalidGroup("no abelian basis found");
  out.generators = chosen;
  out.element_at.assign(static_cast<std::size_t>(out.order()), -1);
  out.coord_index.assign(static_cast<std::size_t>(g.order()), -1);
  for (int idx = 0; idx < out.order(); ++idx) {
    auto c = out.structure.coords(idx);
    int x = g.identity();
    for (std::size_t i = 0; i < k; ++i) x = g.mul(x, g.pow(chosen[i], c[i]));
    out.element_at[static_cast<std::size_t>(idx)] = x;
    out.coord_index[static_cast<std::size_t>(x)] = idx;
  }
  return out;
}

inline Subgroup all_elements(const FiniteGroup& g) {
  Subgroup s(static_cast<std::size_t>(g.order()));
  std::iota(s.begin(), s.end(), 0);
  return s;
}

inline AbelianStructure abelian_structure(const FiniteGroup& g) {
  if (!g.is_abelian()) throw NotAbelian("group is not abelian");
  std::vector<int> orders;
  for (int x = 0; x < g.order(); ++x) orders.push_back(g.element_order(x));
  return detail::structure_from_orders(orders);
}

inline AbelianStructure abelianization(const FiniteGroup& g) {
  return abelian_structure(quotient_group(g, commutator_subgroup(g)));
}

/// Z_{m_1} x ... x Z_{m_k} with element index equal to coordinate index.
inline FiniteGroup build_abelian(const AbelianStructure& s) {
  const int n = s.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    auto cx = s.coords(x);
    for (int y = 0; y < n; ++y) {
      auto cy = s.coords(y);
      for (std::size_t i = 0; i < cx.size(); ++i) cy[i] += cx[i];
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = s.index(cy);
    }
    std::string l;
    for (int c : cx) l += (l.empty() ? "" : ",") + std::to_string(c);
    labels.push_back("[" + l + "]");
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// |Hom(Lambda^2 A, k^x)| = prod_{i<j} gcd(m_i, m_j).
inline int hom_lambda2_order(const AbelianStructure& a) {
  int r = 1;
  const auto& m = a.invariant_factors;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) r *= std::gcd(m[i], m[j]);
  return r;
}

/// The characters of an abelian subgroup A. Character x has the coordinates
/// of its index in the dual basis: x(e_j) = zeta_{m_j}^{x_j}.
struct CharacterGroup {
  AbelianBasis basis;

  int order() const { return basis.order(); }
  int exponent() const { return basis.structure.exponent(); }

  /// x(a) = zeta_M^t with M = exponent(); returns t in [0, M).
  int value_exponent(int x, int element) const {
    const auto& m = basis.structure.invariant_factors;
    const auto cx = basis.structure.coords(x);
    const auto ca = basis.coords_of(element);
    const int big = exponent();
    long long t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += static_cast<long long>(cx[i]) * ca[i] * (big / m[i]);
    return static_cast<int>(t % big);
  }
  CycNumber value(int x, int element) const { return root_of_unity(exponent(), value_exponent(x, element)); }

  /// Values of character x on the subgroup elements in coordinate order.
  std::vector<CycNumber> values(int x) const {
    std::vector<CycNumber> v;
    for (int e : basis.element_at) v.push_back(value(x, e));
    return v;
  }
};

inline CharacterGroup character_group(const FiniteGroup& g, const Subgroup& a) { return {abelian_basis(g, a)}; }

inline CharacterGroup character_group(const FiniteGroup& a) {
  if (!a.is_abelian()) throw NotAbelian("character_group needs an abelian group");
  return character_group(a, all_elements(a));
}

/// An alternating bicharacter on a finite abelian group with chosen basis,
/// stored as exponents: B(e_i, e_j) = zeta_M^{b_ij}, M the exponent.
class AltBicharacter {
 public:
  AltBicharacter() = default;

  AltBicharacter(AbelianStructure s, const std::vector<std::vector<CycNumber>>& values) : s_(std::move(s)) {
    const auto k = static_cast<std::size_t>(s_.rank());
    const int big = s_.exponent();
    if (values.size() != k) throw InvalidBicharacter("bicharacter matrix has wrong size");
    exps_.assign(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      if (values[i].size() != k) throw InvalidBicharacter("bicharacter matrix has wrong size");
      for (std::size_t j = 0; j < k; ++j) {
        int t = -1;
        for (int e = 0; e < big && t < 0; ++e)
          if (root_of_unity(big, e) == values[i][j]) t = e;
        if (t < 0)
          throw InvalidBicharacter("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") is not a root of unity of order dividing " + std::to_string(big));
        exps_[i][j] = t;
      }
    }
    validate();
  }

  static AltBicharacter from_exponents(AbelianStructure s, std::vector<std::vector<int>> exps) {
    AltBicharacter b;
    b.s_ = std::move(s);
    const int big = b.s_.exponent();
    for (auto& row : exps)
      for (auto& e : row) e = ((e % big) + big) % big;
    b.exps_ = std::move(exps);
    if (b.exps_.size() != static_cast<std::size_t>(b.s_.rank())) throw InvalidBicharacter("bicharacter matrix has wrong size");
    for (const auto& row : b.exps_)
      if (row.size() != b.exps_.size()) throw InvalidBicharacter("bicharacter matrix has wrong size");
    b.validate();
    return b;
  }

  static AltBicharacter trivial(const AbelianStructure& s) {
    const auto k = static_cast<std::size_t>(s.rank());
    return from_exponents(s, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
  }

  const AbelianStructure& structure() const { return s_; }
  const std::vector<std::vector<int>>& exponents() const { return exps_; }
  int modulus() const { return s_.exponent(); }

  std::vector<std::vector<CycNumber>> values() const {
    std::vector<std::vector<CycNumber>> v(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      for (int e : exps_[i]) v[i].push_back(root_of_unity(modulus(), e));
    return v;
  }

  /// Multiplicative order of B as an element of Hom(Lambda^2, k^x).
  int order() const {
    int o = 1;
    for (const auto& row : exps_)
      for (int e : row) o = std::lcm(o, modulus() / std::gcd(modulus(), e));
    return o;
  }

  bool is_trivial() const { return order() == 1; }

  /// B(x, y) on coordinate indices, as an exponent of zeta_M.
  int exponent_at(int x, int y) const {
    const auto cx = s_.coords(x), cy = s_.coords(y);
    long long t = 0;
    for (std::size_t i = 0; i < cx.size(); ++i)
      for (std::size_t j = 0; j < cy.size(); ++j) t += static_cast<long long>(exps_[i][j]) * cx[i] * cy[j];
    return static_cast<int>(t % modulus());
  }
  CycNumber operator()(int x, int y) const { return root_of_unity(modulus(), exponent_at(x, y)); }

  /// The upper-triangular cocycle omega(x,y) = prod_{i<j} B(e_i,e_j)^{x_i y_j}.
  int cocycle_exponent(int x, int y) const {
    const auto cx = s_.coords(x), cy = s_.coords(y);
    long long t = 0;
    for (std::size_t i = 0; i < cx.size(); ++i)
      for (std::size_t j = i + 1; j < cy.size(); ++j) t += static_cast<long long>(exps_[i][j]) * cx[i] * cy[j];
    return static_cast<int>(t % modulus());
  }

  /// Nondegenerate when x -> B(x, .) is injective.
  bool is_nondegenerate() const {
    for (int x = 1; x < s_.order(); ++x) {
      bool zero = true;
      for (int y = 0; y < s_.order() && zero; ++y) zero = exponent_at(x, y) == 0;
      if (zero) return false;
    }
    return true;
  }

 private:
  void validate() const {
    const auto& m = s_.invariant_factors;
    const int big = modulus();
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i][i] != 0) throw InvalidBicharacter("B(e_i, e_i) must be 1");
      for (std::size_t j = 0; j < exps_.size(); ++j) {
        if ((exps_[i][j] + exps_[j][i]) % big != 0) throw InvalidBicharacter("B is not antisymmetric");
        const int g = std::gcd(m[i], m[j]);
        if ((static_cast<long long>(exps_[i][j]) * g) % big != 0)
          throw InvalidBicharacter("B(e_i, e_j) has order not dividing gcd(m_i, m_j)");
      }
    }
  }

  AbelianStructure s_;
  std::vector<std::vector<int>> exps_;
};

/// All value matrices satisfying the alternating-bicharacter constraints;
/// a direct count used to cross-check hom_lambda2_order.
inline int count_alt_bicharacters(const AbelianStructure& s) {
  const auto k = static_cast<std::size_t>(s.rank());
  const int big = s.exponent();
  int count = 0;
  std::vector<std::vector<int>> e(k, std::vector<int>(k, 0));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == pairs.size()) {
      try {
        AltBicharacter::from_exponents(s, e);
        ++count;
      } catch (const InvalidBicharacter&) {
      }
      return;
    }
    const auto [i, j] = pairs[p];
    for (int t = 0; t < big; ++t) {
      e[i][j] = t;
      e[j][i] = (big - t) % big;
      rec(p + 1);
    }
  };
  rec(0);
  return count;
}

/// The contragredient action (g.x)(a) = x(g^-1 a g) of G on the characters
/// of a normal abelian subgroup, on coordinate indices of the dual.
inline GroupAction dual_action(const FiniteGroup& g, const CharacterGroup& chars) {
  Subgroup a(chars.basis.element_at.begin(), chars.basis.element_at.end());
  std::sort(a.begin(), a.end());
  if (!is_normal(g, a)) throw NotNormal("subgroup is not normal");
  const auto& s = chars.basis.structure;
  const int big = s.exponent();
  GroupAction act;
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> row;
    for (int x = 0; x < chars.order(); ++x) {
      std::vector<int> c(static_cast<std::size_t>(s.rank()));
      for (std::size_t j = 0; j < c.size(); ++j) {
        const int moved = g.conj(g.inv(h), chars.basis.generators[j]);
        c[j] = chars.value_exponent(x, moved) / (big / s.invariant_factors[j]);
      }
      row.push_back(s.index(c));
    }
    act.map.push_back(std::move(row));
  }
  return act;
}

/// The exponent t with B(g.x, g.y) = B(x, y)^t on all basis pairs, reduced
/// modulo the order of B (trivial B gives 1), or nullopt when no single t
/// works. B is g-invariant iff the result is 1.
inline std::optional<int> bichar_action_scalar(const AltBicharacter& b, const FiniteGroup& actor,
                                               const GroupAction& act, int g) {
  const auto& s = b.structure();
  check_automorphism_action(actor, act, build_abelian(s));
  const int ord = b.order();
  const int big = b.modulus();
  const int k = s.rank();
  std::vector<int> basis;
  for (int i = 0; i < k; ++i) {
    std::vector<int> c(static_cast<std::size_t>(k), 0);
    c[static_cast<std::size_t>(i)] = 1;
    basis.push_back(s.index(c));
  }
  if (ord == 1) return 1;
  for (int t = 1; t <= ord; ++t) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        const int lhs = b.exponent_at(act.apply(g, basis[static_cast<std::size_t>(i)]),
                                      act.apply(g, basis[static_cast<std::size_t>(j)]));
        const long long rhs = static_cast<long long>(b.exponents()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * t;
        ok = (lhs - rhs) % big == 0;
      }
    if (ok) return t % ord;
  }
  return std::nullopt;
}

/// Degrees of the irreducible representations of G from |G^ab|, the class
/// count and sum d^2 = |G| with every d dividing |G|. Ascending.
inline std::vector<int> irreducible_degrees(const FiniteGroup& g) {
  const int n = g.order();
  const int linear = abelianization(g).order();
  const int rest = static_cast<int>(g.conjugacy_classes().size()) - linear;
  std::vector<int> ds;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  std::vector<std::vector<int>> solutions;
  std::vector<int> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int left, int remaining) {
    if (remaining == 0) {
      if (left == 0) solutions.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < ds.size(); ++i) {
      const int sq = ds[i] * ds[i];
      if (sq * remaining > left) break;
      cur.push_back(ds[i]);
      rec(i, left - sq, remaining - 1);
      cur.pop_back();
    }
  };
  rec(0, n - linear, rest);
  if (solutions.size() != 1)
    throw AmbiguousDegrees("degree equation for a group of order " + std::to_string(n) + " has " +
                           std::to_string(solutions.size()) + " solutions");
  std::vector<int> out(static_cast<std::size_t>(linear), 1);
  out.insert(out.end(), solutions[0].begin(), solutions[0].end());
  return out;
}

}  // namespace hopfcalc
