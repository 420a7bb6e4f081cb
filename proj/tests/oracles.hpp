#pragma once

// Independent reference computations used by the unit and acceptance tests.
// They rely only on group tables and brute force, never on the library's
// character or double machinery.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "hopfcalc/builtins.hpp"
#include "hopfcalc/fusion.hpp"

namespace oracle {

using namespace hopfcalc;

// All divisibility chains with product <= bound.
inline std::vector<AbelianStructure> abelian_structures_up_to(int bound) {
  std::vector<AbelianStructure> out;
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> chain, int prod) {
    out.push_back(AbelianStructure{chain});
    for (int m = chain.empty() ? 2 : chain.back(); prod * m <= bound; m += chain.empty() ? 1 : chain.back()) {
      auto next = chain;
      next.push_back(m);
      rec(next, prod * m);
    }
  };
  rec({}, 1);
  return out;
}

// Character ring from a real integer character table:
// m(chi_k, chi_i chi_j) = (1/|G|) sum_c |c| chi_i(c) chi_j(c) chi_k(c).
inline FusionDatum from_integer_table(const std::vector<int>& class_sizes, const std::vector<std::vector<int>>& table) {
  const int r = static_cast<int>(table.size());
  const int order = std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
  std::vector<int> degrees, dual;
  for (int i = 0; i < r; ++i) {
    degrees.push_back(table[static_cast<std::size_t>(i)][0]);
    dual.push_back(i);
  }
  FusionDatum f(degrees, dual, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        int s = 0;
        for (std::size_t c = 0; c < class_sizes.size(); ++c)
          s += class_sizes[c] * table[static_cast<std::size_t>(i)][c] * table[static_cast<std::size_t>(j)][c] *
               table[static_cast<std::size_t>(k)][c];
        if (s % order != 0) throw std::logic_error("character table is not orthogonal");
        f.N(i, j, k) = s / order;
      }
  return f;
}

inline FusionDatum s3_ring() { return from_integer_table({1, 3, 2}, {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}}); }

// classes: 1, r^2, {r,r^3}, {s,sr^2}, {sr,sr^3}
inline FusionDatum d4_ring() {
  return from_integer_table({1, 1, 2, 2, 2},
                            {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}});
}

inline bool same_up_to_relabeling(const FusionDatum& a, const FusionDatum& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> p(static_cast<std::size_t>(a.size()));
  std::iota(p.begin(), p.end(), 0);
  const auto at = [&](int i) { return p[static_cast<std::size_t>(i)]; };
  do {
    bool ok = at(a.unit) == b.unit;
    for (int i = 0; ok && i < a.size(); ++i) ok = a.deg(i) == b.deg(at(i)) && at(a.star(i)) == b.star(at(i));
    for (int i = 0; ok && i < a.size(); ++i)
      for (int j = 0; ok && j < a.size(); ++j)
        for (int k = 0; ok && k < a.size(); ++k) ok = a.N(i, j, k) == b.N(at(i), at(j), at(k));
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Irreducible degrees of a small group: class count and linear count from the
// table, the remaining degrees by exhaustive search over multisets. Throws when
// the search does not pin the degrees down.
inline std::vector<int> degrees(const FiniteGroup& g) {
  const int n = g.order();
  std::set<std::set<int>> classes;
  for (int a = 0; a < n; ++a) {
    std::set<int> c;
    for (int x = 0; x < n; ++x) c.insert(g.mul(g.mul(x, a), g.inv(x)));
    classes.insert(c);
  }
  std::set<int> comm{g.identity()};
  for (bool grew = true; grew;) {
    grew = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        for (int d : std::set<int>(comm))
          if (comm.insert(g.mul(c, d)).second) grew = true;
      }
  }
  const int linear = n / static_cast<int>(comm.size());
  const int rest = static_cast<int>(classes.size()) - linear;
  std::vector<int> out(static_cast<std::size_t>(linear), 1);
  if (rest == 0) return out;
  std::vector<std::vector<int>> found;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int from, int left, int k) {
    if (k == 0) {
      if (left == 0) found.push_back(cur);
      return;
    }
    for (int d = from; d * d <= left; ++d) {
      cur.push_back(d);
      rec(d, left - d * d, k - 1);
      cur.pop_back();
    }
  };
  rec(2, n - linear, rest);
  if (found.size() != 1) throw std::logic_error("degree search is ambiguous");
  out.insert(out.end(), found[0].begin(), found[0].end());
  return out;
}

// D(G) irreducibles: one per (class representative a, irreducible of C_G(a)),
// of dimension |class| * degree.
inline AlgebraTypeSignature double_type(const FiniteGroup& g) {
  std::vector<int> dims;
  std::set<int> seen;
  for (int a = 0; a < g.order(); ++a) {
    bool fresh = true;
    for (int x = 0; x < g.order(); ++x)
      if (seen.count(g.mul(g.mul(x, a), g.inv(x)))) fresh = false;
    if (!fresh) continue;
    seen.insert(a);
    std::vector<int> cent;
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(x, a) == g.mul(a, x)) cent.push_back(x);
    for (int d : degrees(subgroup_as_group(g, cent))) dims.push_back(d * g.order() / static_cast<int>(cent.size()));
  }
  return AlgebraTypeSignature::from_degrees(dims);
}

// (Z3 x Z3) x| Z2 with Z2 swapping the two coordinates.
inline FiniteGroup swap_semidirect_18() {
  const FiniteGroup a = build_product(build_cyclic(3), build_cyclic(3));
  std::vector<int> img(9);
  for (int x = 0; x < 9; ++x) img[static_cast<std::size_t>(x)] = (x % 3) * 3 + x / 3;
  const FiniteGroup f = build_cyclic(2);
  return build_semidirect(a, f, action_from_generators(f, {1}, {img}, a));
}

}  // namespace oracle
