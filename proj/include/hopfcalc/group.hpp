#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

/// Subgroups are sorted element-index lists inside their parent group.
using Subgroup = std::vector<int>;

/// A finite group given by its multiplication table. table[a][b] = a*b.
/// All derived data (inverses, classes) is computed once on construction.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(std::vector<std::vector<int>>{{0}}) {}

  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {})
      : table_(std::move(table)), labels_(std::move(labels)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw InvalidGroup("empty multiplication table");
    if (n > 256) throw InvalidGroup("groups of order above 256 are not supported");
    for (const auto& row : table_) {
      if (static_cast<int>(row.size()) != n) throw InvalidGroup("table is not square");
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int v : row) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw InvalidGroup("table is not a Latin square");
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
    for (int b = 0; b < n; ++b) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      for (int a = 0; a < n; ++a) {
        int v = mul(a, b);
        if (seen[static_cast<std::size_t>(v)]) throw InvalidGroup("table is not a Latin square");
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw InvalidGroup("no identity element");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InvalidGroup("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    if (labels_.size() != static_cast<std::size_t>(n)) {
      labels_.clear();
      for (int a = 0; a < n; ++a) labels_.push_back(a == identity_ ? "e" : "g" + std::to_string(a));
    }
    class_of_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      if (class_of_[static_cast<std::size_t>(a)] >= 0) continue;
      std::set<int> cls;
      for (int g = 0; g < n; ++g) cls.insert(conj(g, a));
      const int id = static_cast<int>(classes_.size());
      for (int x : cls) class_of_[static_cast<std::size_t>(x)] = id;
      classes_.emplace_back(cls.begin(), cls.end());
    }
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// g a g^-1
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  int pow(int a, long long k) const {
    if (k < 0) return pow(inv(a), -k);
    int r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }

  int index_of(const std::string& label) const {
    for (int a = 0; a < order(); ++a)
      if (labels_[static_cast<std::size_t>(a)] == label) return a;
    throw InvalidGroup("no element labelled '" + label + "'");
  }

  bool is_abelian() const { return static_cast<int>(classes_.size()) == order(); }

  /// Classes ordered by their smallest element; each class sorted.
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int a) const { return class_of_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

/// map[g][x]: the image of target element x under actor element g.
struct GroupAction {
  std::vector<std::vector<int>> map;

  int apply(int g, int x) const { return map[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  int target_size() const { return map.empty() ? 0 : static_cast<int>(map[0].size()); }
};

/// Raises NotAutomorphismAction unless act is a left action of actor by
/// automorphisms of target.
inline void check_automorphism_action(const FiniteGroup& actor, const GroupAction& act, const FiniteGroup& target) {
  const int q = actor.order(), n = target.order();
  if (static_cast<int>(act.map.size()) != q) throw NotAutomorphismAction("action table has wrong actor size");
  for (const auto& row : act.map) {
    if (static_cast<int>(row.size()) != n) throw NotAutomorphismAction("action table has wrong target size");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw NotAutomorphismAction("action is not bijective");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int x = 0; x < n; ++x)
    if (act.apply(actor.identity(), x) != x) throw NotAutomorphismAction("identity acts nontrivially");
  for (int g = 0; g < q; ++g)
    for (int h = 0; h < q; ++h)
      for (int x = 0; x < n; ++x)
        if (act.apply(actor.mul(g, h), x) != act.apply(g, act.apply(h, x)))
          throw NotAutomorphismAction("action is not compatible with multiplication");
  for (int g = 0; g < q; ++g)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (act.apply(g, target.mul(a, b)) != target.mul(act.apply(g, a), act.apply(g, b)))
          throw NotAutomorphismAction("element " + std::to_string(g) + " does not act by an automorphism");
}

/// Extends images of generators to a full action table. images[i] is the
/// permutation of the target induced by gens[i]. Well-definedness is checked.
inline GroupAction action_from_generators(const FiniteGroup& actor, const std::vector<int>& gens,
                                          const std::vector<std::vector<int>>& images, const FiniteGroup& target) {
  const int q = actor.order(), n = target.order();
  std::vector<std::vector<int>> map(static_cast<std::size_t>(q));
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  map[static_cast<std::size_t>(actor.identity())] = id;
  std::queue<int> todo;
  todo.push(actor.identity());
  while (!todo.empty()) {
    int g = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int h = actor.mul(g, gens[i]);
      if (!map[static_cast<std::size_t>(h)].empty()) continue;
      std::vector<int> row(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        row[static_cast<std::size_t>(x)] =
            map[static_cast<std::size_t>(g)][static_cast<std::size_t>(images[i][static_cast<std::size_t>(x)])];
      map[static_cast<std::size_t>(h)] = std::move(row);
      todo.push(h);
    }
  }
  for (const auto& row : map)
    if (row.empty()) throw NotAutomorphismAction("generators do not generate the acting group");
  GroupAction act{std::move(map)};
  check_automorphism_action(actor, act, target);
  return act;
}

// ---- constructions ----

inline FiniteGroup build_cyclic(int n) {
  if (n < 1) throw InvalidGroup("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    labels.push_back(i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// Dihedral group of order 2n; index i + n*j stands for r^i s^j.
inline FiniteGroup build_dihedral(int n) {
  if (n < 1) throw InvalidGroup("dihedral group needs n >= 1");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> labels;
  for (int x = 0; x < m; ++x) {
    const int i = x % n, a = x / n;
    for (int y = 0; y < m; ++y) {
      const int k = y % n, b = y / n;
      const int r = ((a == 0 ? i + k : i - k) % n + n) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = r + n * ((a + b) % 2);
    }
    std::string l = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    if (a == 1) l += "s";
    labels.push_back(l.empty() ? "e" : l);
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// Quaternion group of order 8; index i + 4*j stands for a^i x^j with
/// a^4 = 1, x^2 = a^2, x a x^-1 = a^-1.
inline FiniteGroup build_quaternion() {
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  const char* names[8] = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};
  for (int x = 0; x < 8; ++x) {
    const int i = x % 4, a = x / 4;
    for (int y = 0; y < 8; ++y) {
      const int k = y % 4, b = y / 4;
      int r = a == 0 ? i + k : i - k;
      if (a == 1 && b == 1) r += 2;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (r % 4 + 4) % 4 + 4 * ((a + b) % 2);
    }
  }
  return FiniteGroup(std::move(t), std::vector<std::string>(names, names + 8));
}

/// Symmetric group on n <= 4 points; elements in lexicographic order of
/// their one-line notation, product (st)(x) = s(t(x)).
inline FiniteGroup build_symmetric(int n) {
  if (n < 1 || n > 4) throw InvalidGroup("symmetric group supported for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const auto m = perms.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      t[a][b] = index[c];
    }
    std::string l;
    for (int v : perms[a]) l += std::to_string(v + 1);
    labels.push_back(l);
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// Direct product; index g*|H| + h.
inline FiniteGroup build_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int a = g.order(), b = h.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(a * b), std::vector<int>(static_cast<std::size_t>(a * b)));
  std::vector<std::string> labels;
  for (int x = 0; x < a * b; ++x) {
    for (int y = 0; y < a * b; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = g.mul(x / b, y / b) * b + h.mul(x % b, y % b);
    labels.push_back("(" + g.label(x / b) + "," + h.label(x % b) + ")");
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// N x| Q with (n,q)(n',q') = (n (q.n'), qq'); index n + |N|*q.
inline FiniteGroup build_semidirect(const FiniteGroup& n, const FiniteGroup& q, const GroupAction& act) {
  check_automorphism_action(q, act, n);
  const int a = n.order(), b = q.order();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(a * b), std::vector<int>(static_cast<std::size_t>(a * b)));
  std::vector<std::string> labels;
  for (int x = 0; x < a * b; ++x) {
    const int n1 = x % a, q1 = x / a;
    for (int y = 0; y < a * b; ++y) {
      const int n2 = y % a, q2 = y / a;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = n.mul(n1, act.apply(q1, n2)) + a * q.mul(q1, q2);
    }
    labels.push_back("(" + n.label(n1) + "," + q.label(q1) + ")");
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// x -> x^k on an abelian group, as a permutation of its elements.
inline std::vector<int> power_map(const FiniteGroup& a, int k) {
  std::vector<int> out(static_cast<std::size_t>(a.order()));
  for (int x = 0; x < a.order(); ++x) out[static_cast<std::size_t>(x)] = a.pow(x, k);
  return out;
}

// ---- subgroups and invariants ----

inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::set<int> s{g.identity()};
  std::queue<int> todo;
  todo.push(g.identity());
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int h : gens) {
      int y = g.mul(x, h);
      if (s.insert(y).second) todo.push(y);
    }
  }
  return Subgroup(s.begin(), s.end());
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end())) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : s) {
    if (x < 0 || x >= g.order()) return false;
    in[static_cast<std::size_t>(x)] = 1;
  }
  if (!in[static_cast<std::size_t>(g.identity())]) return false;
  for (int x : s)
    for (int y : s)
      if (!in[static_cast<std::size_t>(g.mul(x, y))]) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int x : s) in[static_cast<std::size_t>(x)] = 1;
  for (int h = 0; h < g.order(); ++h)
    for (int x : s)
      if (!in[static_cast<std::size_t>(g.conj(h, x))]) return false;
  return true;
}

inline bool is_abelian_subset(const FiniteGroup& g, const Subgroup& s) {
  for (int x : s)
    for (int y : s)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

inline Subgroup centralizer(const FiniteGroup& g, int x) {
  Subgroup out;
  for (int h = 0; h < g.order(); ++h)
    if (g.mul(h, x) == g.mul(x, h)) out.push_back(h);
  return out;
}

inline Subgroup center(const FiniteGroup& g) {
  Subgroup out;
  for (const auto& c : g.conjugacy_classes())
    if (c.size() == 1) out.push_back(c[0]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::set<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comms.insert(g.commutator(a, b));
  return generated_subgroup(g, std::vector<int>(comms.begin(), comms.end()));
}

/// The subgroup as a group in its own right; elements keep their order in s.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
  if (!is_subgroup(g, s)) throw InvalidGroup("not a subgroup");
  std::map<int, int> pos;
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(s.size(), std::vector<int>(s.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) t[i][j] = pos[g.mul(s[i], s[j])];
    labels.push_back(g.label(s[i]));
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

/// G/N; cosets ordered by smallest representative.
inline FiniteGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n) || !is_normal(g, n)) throw NotNormal("quotient by a non-normal subgroup");
  std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y : n) coset[static_cast<std::size_t>(g.mul(x, y))] = id;
  }
  const auto m = reps.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i][j] = coset[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
    labels.push_back(g.label(reps[i]) + "N");
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

}  // namespace hopfcalc
