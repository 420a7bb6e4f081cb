#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/abelian.hpp"
#include "hopfcalc/check.hpp"
#include "hopfcalc/cyclotomic.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/linalg.hpp"
#include "hopfcalc/signature.hpp"

namespace hopfcalc {

/// Sparse elements of H, H (x) H and H (x) H (x) H; zero coefficients are never stored.
using Vec = std::map<int, CycNumber>;
using Tensor2 = std::map<std::pair<int, int>, CycNumber>;
using Tensor3 = std::map<std::array<int, 3>, CycNumber>;

template <class K>
void add_term(std::map<K, CycNumber>& m, const K& k, const CycNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

template <class K>
std::map<K, CycNumber> scaled(const std::map<K, CycNumber>& m, const CycNumber& c) {
  std::map<K, CycNumber> out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : m) out.emplace(k, v * c);
  return out;
}

template <class K>
void add_into(std::map<K, CycNumber>& acc, const std::map<K, CycNumber>& m, const CycNumber& c = CycNumber(1)) {
  for (const auto& [k, v] : m) add_term(acc, k, v * c);
}

inline Vec basis_vector(int i) { return Vec{{i, CycNumber(1)}}; }

inline DenseVec to_dense(const Vec& v, int dim) {
  DenseVec d(static_cast<std::size_t>(dim));
  for (const auto& [k, c] : v) d[static_cast<std::size_t>(k)] = c;
  return d;
}

inline Vec to_sparse(const DenseVec& d) {
  Vec v;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (!d[k].is_zero()) v.emplace(static_cast<int>(k), d[k]);
  return v;
}

/// Deterministic order on sparse elements.
inline bool vec_less(const Vec& a, const Vec& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return canonical_less(ia->second, ib->second);
  }
  return ib != b.end();
}

/// A finite-dimensional Hopf algebra by structure constants on a basis e_0..e_{m-1}.
struct HopfData {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Vec> mult;        // e_i e_j at i * dim + j
  Vec unit;
  std::vector<Tensor2> comult;  // Delta(e_i)
  std::vector<CycNumber> counit;
  std::vector<Vec> antipode;    // S(e_i)

  friend bool operator==(const HopfData&, const HopfData&) = default;

  const Vec& product(int i, int j) const { return mult[static_cast<std::size_t>(i * dim + j)]; }
  const std::string& label(int i) const { return labels[static_cast<std::size_t>(i)]; }

  Vec multiply(const Vec& a, const Vec& b) const {
    Vec out;
    for (const auto& [i, x] : a)
      for (const auto& [j, y] : b) add_into(out, product(i, j), x * y);
    return out;
  }

  Tensor2 multiply(const Tensor2& a, const Tensor2& b) const {
    Tensor2 out;
    for (const auto& [ka, x] : a)
      for (const auto& [kb, y] : b) {
        const CycNumber c = x * y;
        for (const auto& [p, u] : product(ka.first, kb.first))
          for (const auto& [q, v] : product(ka.second, kb.second)) add_term(out, {p, q}, c * u * v);
      }
    return out;
  }

  Tensor3 multiply(const Tensor3& a, const Tensor3& b) const {
    Tensor3 out;
    for (const auto& [ka, x] : a)
      for (const auto& [kb, y] : b) {
        const CycNumber c = x * y;
        for (const auto& [p, u] : product(ka[0], kb[0]))
          for (const auto& [q, v] : product(ka[1], kb[1]))
            for (const auto& [r, w] : product(ka[2], kb[2])) add_term(out, {p, q, r}, c * u * v * w);
      }
    return out;
  }

  Tensor2 comultiply(const Vec& a) const {
    Tensor2 out;
    for (const auto& [i, x] : a) add_into(out, comult[static_cast<std::size_t>(i)], x);
    return out;
  }

  CycNumber counit_of(const Vec& a) const {
    CycNumber s;
    for (const auto& [i, x] : a) s += x * counit[static_cast<std::size_t>(i)];
    return s;
  }

  Vec apply_antipode(const Vec& a) const {
    Vec out;
    for (const auto& [i, x] : a) add_into(out, antipode[static_cast<std::size_t>(i)], x);
    return out;
  }

  Tensor2 unit_tensor() const {
    Tensor2 out;
    for (const auto& [i, x] : unit)
      for (const auto& [j, y] : unit) add_term(out, {i, j}, x * y);
    return out;
  }
};

inline Tensor2 tensor(const Vec& a, const Vec& b) {
  Tensor2 out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) add_term(out, {i, j}, x * y);
  return out;
}

inline Tensor2 flip(const Tensor2& t) {
  Tensor2 out;
  for (const auto& [k, c] : t) out.emplace(std::pair{k.second, k.first}, c);
  return out;
}

/// (Delta (x) id) t and (id (x) Delta) t.
inline Tensor3 comultiply_left(const HopfData& h, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [d, x] : h.comult[static_cast<std::size_t>(k.first)]) add_term(out, {d.first, d.second, k.second}, c * x);
  return out;
}

inline Tensor3 comultiply_right(const HopfData& h, const Tensor2& t) {
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [d, x] : h.comult[static_cast<std::size_t>(k.second)]) add_term(out, {k.first, d.first, d.second}, c * x);
  return out;
}

/// Multiplies the legs of a two-tensor, optionally applying S to one of them first.
enum class Leg { none, left, right };

inline Vec contract(const HopfData& h, const Tensor2& t, Leg antipode_on = Leg::none) {
  Vec out;
  for (const auto& [k, c] : t) {
    const Vec a = antipode_on == Leg::left ? h.antipode[static_cast<std::size_t>(k.first)] : basis_vector(k.first);
    const Vec b = antipode_on == Leg::right ? h.antipode[static_cast<std::size_t>(k.second)] : basis_vector(k.second);
    add_into(out, h.multiply(a, b), c);
  }
  return out;
}

inline std::string vec_to_string(const HopfData& h, const Vec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + h.label(k);
  }
  return s;
}

/// The subalgebra generated by a set of elements, with each spanning vector
/// recorded as a word in the generators (applied right to left).
struct WordSpan {
  LinearSpan span;
  std::vector<Vec> vectors;
  std::vector<std::vector<int>> words;  // positions into the generator list

  explicit WordSpan(const HopfData& h) : span(h.dim) {
    span.insert(to_dense(h.unit, h.dim));
    vectors.push_back(h.unit);
    words.emplace_back();
  }

  /// Adds generator number pos (value g) and closes under left multiplication by all generators so far.
  void add_generator(const HopfData& h, const std::vector<Vec>& gens, int pos) {
    std::vector<std::pair<Vec, std::vector<int>>> queue;
    const std::size_t existing = vectors.size();
    for (std::size_t i = 0; i < existing; ++i) {
      auto w = words[i];
      w.insert(w.begin(), pos);
      queue.emplace_back(h.multiply(gens[static_cast<std::size_t>(pos)], vectors[i]), std::move(w));
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [v, w] = queue[q];
      if (!span.insert(to_dense(v, h.dim))) continue;
      vectors.push_back(v);
      words.push_back(w);
      for (int g = 0; g <= pos; ++g) {
        auto w2 = w;
        w2.insert(w2.begin(), g);
        queue.emplace_back(h.multiply(gens[static_cast<std::size_t>(g)], v), std::move(w2));
      }
    }
  }
};

/// A greedy generating set of basis indices, in increasing order.
inline std::vector<int> generating_basis_elements(const HopfData& h) {
  WordSpan ws(h);
  std::vector<int> idx;
  std::vector<Vec> gens;
  for (int i = 0; i < h.dim && ws.span.rank() < h.dim; ++i) {
    if (ws.span.express(to_dense(basis_vector(i), h.dim))) continue;
    idx.push_back(i);
    gens.push_back(basis_vector(i));
    ws.add_generator(h, gens, static_cast<int>(gens.size()) - 1);
  }
  return idx;
}

struct HopfReport : CheckList {
  bool s_squared_identity = false;
};

namespace detail {

inline std::string labels_of(const HopfData& h, std::initializer_list<int> idx) {
  std::string s = "(";
  for (int i : idx) s += (s.size() > 1 ? "," : "") + h.label(i);
  return s + ")";
}

inline void check_shape(const HopfData& h) {
  const auto m = static_cast<std::size_t>(h.dim);
  if (h.dim <= 0 || h.labels.size() != m || h.mult.size() != m * m || h.comult.size() != m || h.counit.size() != m ||
      h.antipode.size() != m)
    throw InvalidHopfData("structure tensors do not match dimension " + std::to_string(h.dim));
  auto in_range = [&](int k) { return k >= 0 && k < h.dim; };
  for (const auto& v : h.mult)
    for (const auto& [k, c] : v)
      if (!in_range(k)) throw InvalidHopfData("product index out of range");
  for (const auto& t : h.comult)
    for (const auto& [k, c] : t)
      if (!in_range(k.first) || !in_range(k.second)) throw InvalidHopfData("coproduct index out of range");
  for (const auto& v : h.antipode)
    for (const auto& [k, c] : v)
      if (!in_range(k)) throw InvalidHopfData("antipode index out of range");
  for (const auto& [k, c] : h.unit)
    if (!in_range(k)) throw InvalidHopfData("unit index out of range");
}

}  // namespace detail

/// Checks the bialgebra and antipode axioms exactly; each failing check names
/// the first basis element, pair or triple where it fails.
inline HopfReport verify_hopf_axioms(const HopfData& h) {
  detail::check_shape(h);
  const int m = h.dim;
  HopfReport rep;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    const std::string d = body();
    rep.checks.push_back({name, d.empty(), d});
  };
  using detail::labels_of;

  run("associativity", [&]() -> std::string {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k)
          if (h.multiply(h.product(i, j), basis_vector(k)) != h.multiply(basis_vector(i), h.product(j, k)))
            return labels_of(h, {i, j, k});
    return "";
  });
  run("unit", [&]() -> std::string {
    for (int i = 0; i < m; ++i)
      if (h.multiply(h.unit, basis_vector(i)) != basis_vector(i) || h.multiply(basis_vector(i), h.unit) != basis_vector(i))
        return labels_of(h, {i});
    return "";
  });
  run("coassociativity", [&]() -> std::string {
    for (int i = 0; i < m; ++i) {
      const auto& d = h.comult[static_cast<std::size_t>(i)];
      if (comultiply_left(h, d) != comultiply_right(h, d)) return labels_of(h, {i});
    }
    return "";
  });
  run("counit", [&]() -> std::string {
    for (int i = 0; i < m; ++i) {
      Vec l, r;
      for (const auto& [k, c] : h.comult[static_cast<std::size_t>(i)]) {
        add_term(l, k.second, c * h.counit[static_cast<std::size_t>(k.first)]);
        add_term(r, k.first, c * h.counit[static_cast<std::size_t>(k.second)]);
      }
      if (l != basis_vector(i) || r != basis_vector(i)) return labels_of(h, {i});
    }
    return "";
  });
  run("comultiplication-multiplicative", [&]() -> std::string {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (h.comultiply(h.product(i, j)) != h.multiply(h.comult[static_cast<std::size_t>(i)], h.comult[static_cast<std::size_t>(j)]))
          return labels_of(h, {i, j});
    return "";
  });
  run("counit-multiplicative", [&]() -> std::string {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (h.counit_of(h.product(i, j)) != h.counit[static_cast<std::size_t>(i)] * h.counit[static_cast<std::size_t>(j)])
          return labels_of(h, {i, j});
    return "";
  });
  run("unit-coalgebra-map", [&]() -> std::string {
    if (h.comultiply(h.unit) != h.unit_tensor()) return "Delta(1) != 1(x)1";
    if (h.counit_of(h.unit) != CycNumber(1)) return "epsilon(1) != 1";
    return "";
  });
  run("antipode", [&]() -> std::string {
    for (int i = 0; i < m; ++i) {
      const auto& d = h.comult[static_cast<std::size_t>(i)];
      const Vec target = scaled(h.unit, h.counit[static_cast<std::size_t>(i)]);
      if (contract(h, d, Leg::left) != target || contract(h, d, Leg::right) != target) return labels_of(h, {i});
    }
    return "";
  });
  rep.s_squared_identity = true;
  for (int i = 0; i < m && rep.s_squared_identity; ++i)
    rep.s_squared_identity = h.apply_antipode(h.antipode[static_cast<std::size_t>(i)]) == basis_vector(i);
  return rep;
}

/// The group algebra kG.
inline HopfData from_group(const FiniteGroup& g) {
  HopfData h;
  h.dim = g.order();
  h.labels = g.labels();
  for (int a = 0; a < h.dim; ++a)
    for (int b = 0; b < h.dim; ++b) h.mult.push_back(basis_vector(g.mul(a, b)));
  h.unit = basis_vector(g.identity());
  for (int a = 0; a < h.dim; ++a) {
    h.comult.push_back(Tensor2{{{a, a}, CycNumber(1)}});
    h.counit.emplace_back(1);
    h.antipode.push_back(basis_vector(g.inv(a)));
  }
  return h;
}

/// The dual Hopf algebra on the dual basis; dual labels carry a "delta_" prefix, removed again by a second dual.
inline HopfData dual(const HopfData& h) {
  detail::check_shape(h);
  const int m = h.dim;
  HopfData d;
  d.dim = m;
  for (const auto& l : h.labels) d.labels.push_back(l.rfind("delta_", 0) == 0 ? l.substr(6) : "delta_" + l);
  d.mult.assign(static_cast<std::size_t>(m * m), Vec{});
  for (int k = 0; k < m; ++k)
    for (const auto& [ij, c] : h.comult[static_cast<std::size_t>(k)]) add_term(d.mult[static_cast<std::size_t>(ij.first * m + ij.second)], k, c);
  for (int k = 0; k < m; ++k) add_term(d.unit, k, h.counit[static_cast<std::size_t>(k)]);
  d.comult.assign(static_cast<std::size_t>(m), Tensor2{});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (const auto& [k, c] : h.product(i, j)) add_term(d.comult[static_cast<std::size_t>(k)], {i, j}, c);
  for (int k = 0; k < m; ++k) {
    auto it = h.unit.find(k);
    d.counit.push_back(it == h.unit.end() ? CycNumber(0) : it->second);
  }
  d.antipode.assign(static_cast<std::size_t>(m), Vec{});
  for (int i = 0; i < m; ++i)
    for (const auto& [k, c] : h.antipode[static_cast<std::size_t>(i)]) add_term(d.antipode[static_cast<std::size_t>(k)], i, c);
  return d;
}

inline bool is_commutative(const HopfData& h) {
  for (int i = 0; i < h.dim; ++i)
    for (int j = i + 1; j < h.dim; ++j)
      if (h.product(i, j) != h.product(j, i)) return false;
  return true;
}

inline bool is_cocommutative(const HopfData& h) {
  for (const auto& t : h.comult)
    if (flip(t) != t) return false;
  return true;
}

/// The eight-dimensional Hopf algebra with generators x, y, z:
/// x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz, z^2 = (1 + x + y - xy)/2,
/// Delta(z) = ((1 + y) (x) 1 + (1 - y) (x) x)(z (x) z)/2, epsilon(z) = 1.
/// Basis g z^a at index g + 4a with g in {1, x, y, xy} as bits (x = 1, y = 2).
inline HopfData build_h8() {
  const Rational half(1, 2);
  auto tau = [](int g) { return ((g & 1) << 1) | ((g >> 1) & 1); };
  // w = z^2 in k<x,y>
  const std::vector<std::pair<int, CycNumber>> w{{0, half}, {1, half}, {2, half}, {3, -CycNumber(half)}};
  HopfData h;
  h.dim = 8;
  h.labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int g = i & 3, a = i >> 2, k = j & 3, b = j >> 2;
      const int gk = g ^ (a ? tau(k) : k);
      Vec p;
      if (a + b < 2) {
        p = basis_vector(gk + 4 * (a + b));
      } else {
        for (const auto& [c, coef] : w) add_term(p, gk ^ c, coef);
      }
      h.mult.push_back(p);
    }
  h.unit = basis_vector(0);
  for (int i = 0; i < 8; ++i) {
    const int g = i & 3;
    if (i < 4) {
      h.comult.push_back(Tensor2{{{g, g}, CycNumber(1)}});
    } else {
      // (g (x) g) (z(x)z + yz(x)z + z(x)xz - yz(x)xz)/2
      Tensor2 t;
      add_term(t, {g + 4, g + 4}, CycNumber(half));
      add_term(t, {(g ^ 2) + 4, g + 4}, CycNumber(half));
      add_term(t, {g + 4, (g ^ 1) + 4}, CycNumber(half));
      add_term(t, {(g ^ 2) + 4, (g ^ 1) + 4}, -CycNumber(half));
      h.comult.push_back(t);
    }
    h.counit.emplace_back(1);
    // S(g) = g, S(gz) = S(z) g = z g = tau(g) z
    h.antipode.push_back(basis_vector(i < 4 ? g : tau(g) + 4));
  }
  return h;
}

/// A multiplicative functional on H, by its values on the basis.
struct CharacterFunctional {
  std::vector<CycNumber> values;

  const CycNumber& operator[](int i) const { return values[static_cast<std::size_t>(i)]; }
  CycNumber operator()(const Vec& v) const {
    CycNumber s;
    for (const auto& [k, c] : v) s += c * values[static_cast<std::size_t>(k)];
    return s;
  }
  friend bool operator==(const CharacterFunctional&, const CharacterFunctional&) = default;
  friend bool operator<(const CharacterFunctional& a, const CharacterFunctional& b) {
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(), b.values.end(),
                                        [](const CycNumber& x, const CycNumber& y) { return canonical_less(x, y); });
  }
};

inline bool is_character(const HopfData& h, const CharacterFunctional& eta) {
  if (eta(h.unit) != CycNumber(1)) return false;
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j)
      if (eta[i] * eta[j] != eta(h.product(i, j))) return false;
  return true;
}

/// Minimal polynomial of a in the regular representation, constant term first, monic.
inline Polynomial minimal_polynomial(const HopfData& h, const Vec& a) {
  LinearSpan span(h.dim);
  Vec power = h.unit;
  for (;;) {
    const DenseVec d = to_dense(power, h.dim);
    if (auto c = span.express(d)) {
      Polynomial p;
      for (const auto& x : *c) p.push_back(-x);
      p.emplace_back(1);
      return p;
    }
    span.insert(d);
    power = h.multiply(a, power);
  }
}

/// All algebra maps H -> k. Generator values range over the roots of their
/// minimal polynomials; relations among products of generators prune the
/// search, and each survivor is checked on every pair of basis elements.
inline std::vector<CharacterFunctional> algebra_characters(const HopfData& h, const std::vector<int>& generators) {
  detail::check_shape(h);
  const int m = h.dim;
  std::vector<Vec> gens;
  for (int g : generators) {
    if (g < 0 || g >= m) throw InvalidHopfData("generator index " + std::to_string(g) + " out of range");
    gens.push_back(basis_vector(g));
  }
  WordSpan ws(h);
  for (std::size_t p = 0; p < gens.size(); ++p) ws.add_generator(h, gens, static_cast<int>(p));
  if (ws.span.rank() < m)
    throw GeneratorsDoNotSpan("generators span a subalgebra of dimension " + std::to_string(ws.span.rank()) + " < " +
                              std::to_string(m));
  std::vector<DenseVec> basis_in_words;
  for (int k = 0; k < m; ++k) basis_in_words.push_back(*ws.span.express(to_dense(basis_vector(k), m)));

  std::vector<std::vector<CycNumber>> cands;
  for (std::size_t p = 0; p < gens.size(); ++p) {
    auto roots = roots_in_field(minimal_polynomial(h, gens[p]));
    if (!roots)
      throw CandidateOutsideField("minimal polynomial of " + h.label(generators[p]) +
                                  " has roots outside the configured cyclotomic field");
    cands.push_back(*roots);
  }

  // relation: eta(g_a) eta(g_b) (or eta(g_a) alone when b < 0) = sum c_i eta(item_i); item 0 is the unit
  struct Relation {
    int a, b;
    std::vector<std::pair<int, CycNumber>> rhs;
  };
  const std::size_t n = gens.size();
  std::vector<std::vector<Relation>> relations(n);
  {
    LinearSpan lin(m);
    std::vector<int> items;  // -1 for the unit, else generator position
    lin.insert(to_dense(h.unit, m));
    items.push_back(-1);
    auto as_relation = [&](int a, int b, const DenseVec& c) {
      Relation r{a, b, {}};
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) r.rhs.emplace_back(items[i], c[i]);
      return r;
    };
    for (std::size_t t = 0; t < n; ++t) {
      const DenseVec gt = to_dense(gens[t], m);
      if (auto c = lin.express(gt)) {
        relations[t].push_back(as_relation(static_cast<int>(t), -1, *c));
      } else {
        lin.insert(gt);
        items.push_back(static_cast<int>(t));
      }
      for (std::size_t i = 0; i <= t; ++i) {
        for (const auto& [x, y] : {std::pair{i, t}, std::pair{t, i}}) {
          if (auto c = lin.express(to_dense(h.multiply(gens[x], gens[y]), m)))
            relations[t].push_back(as_relation(static_cast<int>(x), static_cast<int>(y), *c));
        }
      }
    }
  }

  std::vector<CharacterFunctional> out;
  std::vector<CycNumber> val(n);
  auto item_value = [&](int item) { return item < 0 ? CycNumber(1) : val[static_cast<std::size_t>(item)]; };
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == n) {
      CharacterFunctional eta;
      std::vector<CycNumber> word_vals;
      for (const auto& w : ws.words) {
        CycNumber v(1);
        for (int p : w) v *= val[static_cast<std::size_t>(p)];
        word_vals.push_back(v);
      }
      for (const auto& c : basis_in_words) {
        CycNumber s;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (!c[i].is_zero()) s += c[i] * word_vals[i];
        eta.values.push_back(s);
      }
      if (is_character(h, eta)) out.push_back(std::move(eta));
      return;
    }
    for (const auto& c : cands[t]) {
      val[t] = c;
      bool ok = true;
      for (const auto& r : relations[t]) {
        const CycNumber lhs = r.b < 0 ? val[static_cast<std::size_t>(r.a)] : val[static_cast<std::size_t>(r.a)] * val[static_cast<std::size_t>(r.b)];
        CycNumber rhs;
        for (const auto& [item, coef] : r.rhs) rhs += coef * item_value(item);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) rec(t + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<CharacterFunctional> algebra_characters(const HopfData& h) {
  return algebra_characters(h, generating_basis_elements(h));
}

/// G(H), found as the characters of the dual algebra.
inline std::vector<Vec> group_like_elements(const HopfData& h) {
  const HopfData d = dual(h);
  std::vector<Vec> out;
  for (const auto& eta : algebra_characters(d)) {
    Vec v = to_sparse(eta.values);
    if (h.comultiply(v) != tensor(v, v) || h.counit_of(v) != CycNumber(1))
      throw InvalidHopfData("dual character does not give a group-like element");
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

/// eta -> h = sum eta(h_2) h_1
inline Vec hit_left(const CharacterFunctional& eta, const Vec& x, const HopfData& h) {
  Vec out;
  for (const auto& [k, c] : h.comultiply(x)) add_term(out, k.first, c * eta[k.second]);
  return out;
}

/// h <- eta = sum eta(h_1) h_2
inline Vec hit_right(const Vec& x, const CharacterFunctional& eta, const HopfData& h) {
  Vec out;
  for (const auto& [k, c] : h.comultiply(x)) add_term(out, k.second, c * eta[k.first]);
  return out;
}

/// Convolution product of two functionals.
inline CharacterFunctional convolve(const HopfData& h, const CharacterFunctional& a, const CharacterFunctional& b) {
  CharacterFunctional out;
  for (const auto& t : h.comult) {
    CycNumber s;
    for (const auto& [k, c] : t) s += c * a[k.first] * b[k.second];
    out.values.push_back(s);
  }
  return out;
}

inline std::vector<Vec> central_group_likes(const HopfData& h) {
  std::vector<Vec> out;
  for (auto& g : group_like_elements(h)) {
    bool central = true;
    for (int i = 0; i < h.dim && central; ++i) central = h.multiply(g, basis_vector(i)) == h.multiply(basis_vector(i), g);
    if (central) out.push_back(std::move(g));
  }
  return out;
}

struct YDPair {
  int g;    // index into group_likes
  int eta;  // index into characters
  friend bool operator==(const YDPair&, const YDPair&) = default;
};

struct YDPairReport {
  std::vector<Vec> group_likes;
  std::vector<CharacterFunctional> characters;
  std::vector<YDPair> pairs;
  FiniteGroup group;      // pairs under componentwise product, element i = pairs[i]
  std::string structure;  // invariant factors when abelian
};

/// One-dimensional Yetter-Drinfeld modules: pairs (g, eta) with
/// (eta -> h) g = g (h <- eta) for every basis element h.
inline YDPairReport yd_one_dim_pairs(const HopfData& h) {
  YDPairReport r;
  r.group_likes = group_like_elements(h);
  r.characters = algebra_characters(h);
  for (int gi = 0; gi < static_cast<int>(r.group_likes.size()); ++gi)
    for (int ei = 0; ei < static_cast<int>(r.characters.size()); ++ei) {
      const Vec& g = r.group_likes[static_cast<std::size_t>(gi)];
      const auto& eta = r.characters[static_cast<std::size_t>(ei)];
      bool ok = true;
      for (int k = 0; k < h.dim && ok; ++k)
        ok = h.multiply(hit_left(eta, basis_vector(k), h), g) == h.multiply(g, hit_right(basis_vector(k), eta, h));
      if (ok) r.pairs.push_back({gi, ei});
    }
  const int n = static_cast<int>(r.pairs.size());
  auto find_g = [&](const Vec& v) {
    for (std::size_t i = 0; i < r.group_likes.size(); ++i)
      if (r.group_likes[i] == v) return static_cast<int>(i);
    throw InvalidHopfData("group-likes are not closed under multiplication");
  };
  auto find_eta = [&](const CharacterFunctional& e) {
    for (std::size_t i = 0; i < r.characters.size(); ++i)
      if (r.characters[i] == e) return static_cast<int>(i);
    throw InvalidHopfData("characters are not closed under convolution");
  };
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
  for (const auto& p : r.pairs)
    for (const auto& q : r.pairs) {
      const YDPair prod{find_g(h.multiply(r.group_likes[static_cast<std::size_t>(p.g)], r.group_likes[static_cast<std::size_t>(q.g)])),
                        find_eta(convolve(h, r.characters[static_cast<std::size_t>(p.eta)], r.characters[static_cast<std::size_t>(q.eta)]))};
      const auto it = std::find(r.pairs.begin(), r.pairs.end(), prod);
      if (it == r.pairs.end()) throw InvalidHopfData("Yetter-Drinfeld pairs are not closed under products");
      table[static_cast<std::size_t>(&p - r.pairs.data())].push_back(static_cast<int>(it - r.pairs.begin()));
    }
  r.group = FiniteGroup(table);
  r.structure = r.group.is_abelian() ? abelian_structure(r.group).to_string()
                                     : "nonabelian of order " + std::to_string(n);
  return r;
}

/// Algebra type of D(G): one irreducible of dimension [G:C_G(g)] deg(rho) per
/// class representative g and irreducible rho of the centralizer.
inline AlgebraTypeSignature drinfeld_double_group_type(const FiniteGroup& g) {
  std::vector<int> dims;
  for (const auto& cls : g.conjugacy_classes()) {
    const Subgroup c = centralizer(g, cls.front());
    const int index = g.order() / static_cast<int>(c.size());
    for (int d : irreducible_degrees(subgroup_as_group(g, c))) dims.push_back(index * d);
  }
  return AlgebraTypeSignature::from_degrees(dims);
}

}  // namespace hopfcalc
