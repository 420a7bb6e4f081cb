#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "hopfcalc/cyclotomic.hpp"

namespace hopfcalc {

using DenseVec = std::vector<CycNumber>;

/// Incremental row echelon form over Q(zeta) that remembers how each stored
/// row combines the independent vectors inserted so far.
class LinearSpan {
 public:
  explicit LinearSpan(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Coefficients c with v = sum c_i * inserted_i, or nullopt if v is independent.
  std::optional<DenseVec> express(const DenseVec& v) const {
    DenseVec rest = v;
    DenseVec coef(rows_.size());
    reduce(rest, coef);
    for (const auto& x : rest)
      if (!x.is_zero()) return std::nullopt;
    return coef;
  }

  /// Inserts v when independent; returns whether it was.
  bool insert(const DenseVec& v) {
    DenseVec rest = v;
    DenseVec coef(rows_.size() + 1);
    reduce(rest, coef);
    int pivot = -1;
    for (int i = 0; i < dim_ && pivot < 0; ++i)
      if (!rest[static_cast<std::size_t>(i)].is_zero()) pivot = i;
    if (pivot < 0) return false;
    // rest = v - sum coef_i inserted_i, so the new row is (v - sum coef_i inserted_i) / p
    const CycNumber inv = rest[static_cast<std::size_t>(pivot)].inverse();
    for (auto& x : rest) x *= inv;
    for (auto& c : coef) c = -c * inv;
    coef.back() = inv;
    rows_.push_back({pivot, std::move(rest), std::move(coef)});
    return true;
  }

 private:
  struct Row {
    int pivot;
    DenseVec v;
    DenseVec coef;  // row = sum coef_i * inserted_i
  };

  // Reduces rest by all rows; afterwards original = rest + sum coef_i * inserted_i.
  void reduce(DenseVec& rest, DenseVec& coef) const {
    for (const auto& r : rows_) {
      const CycNumber f = rest[static_cast<std::size_t>(r.pivot)];
      if (f.is_zero()) continue;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (!r.v[i].is_zero()) rest[i] -= f * r.v[i];
      for (std::size_t i = 0; i < r.coef.size(); ++i)
        if (!r.coef[i].is_zero()) coef[i] += f * r.coef[i];
    }
  }

  int dim_;
  std::vector<Row> rows_;
};

/// Polynomials with coefficients listed from the constant term up.
using Polynomial = std::vector<CycNumber>;

inline CycNumber evaluate(const Polynomial& p, const CycNumber& x) {
  CycNumber acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Quotient of p by (x - r), assuming r is a root.
inline Polynomial deflate(const Polynomial& p, const CycNumber& r) {
  Polynomial q(p.size() - 1);
  CycNumber carry;
  for (std::size_t i = p.size() - 1; i >= 1; --i) {
    carry = p[i] + carry * r;
    q[i - 1] = carry;
  }
  return q;
}

namespace detail {

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d;
  n = std::llabs(n);
  for (std::int64_t k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k * k != n) d.push_back(n / k);
    }
  return d;
}

inline std::vector<CycNumber> rational_root_candidates(const Polynomial& p) {
  std::vector<CycNumber> out;
  for (const auto& c : p)
    if (!c.is_rational()) return out;
  Integer l = 1;
  for (const auto& c : p) {
    const Integer d = c.rational_value().denominator();
    l = l / std::gcd(to_int64(l), to_int64(d)) * d;
  }
  std::size_t low = 0;
  while (low < p.size() && p[low].is_zero()) ++low;
  if (low + 1 >= p.size()) return out;
  const auto scaled = [&](std::size_t i) { return to_int64((p[i].rational_value() * Rational(l)).numerator()); };
  for (auto a : divisors(scaled(low)))
    for (auto b : divisors(scaled(p.size() - 1))) {
      out.emplace_back(Rational(Integer(a), Integer(b)));
      out.emplace_back(Rational(Integer(-a), Integer(b)));
    }
  return out;
}

}  // namespace detail

/// Distinct roots of p among 0, the roots of unity of Q(zeta_24) and the
/// rational candidates; nullopt when the roots found do not account for the degree.
inline std::optional<std::vector<CycNumber>> roots_in_field(Polynomial p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  std::vector<CycNumber> cands{CycNumber(0)};
  for (int t = 0; t < kMaxConductor; ++t) cands.push_back(root_of_unity(kMaxConductor, t));
  for (const auto& c : detail::rational_root_candidates(p)) cands.push_back(c);
  std::vector<CycNumber> roots;
  for (const auto& c : cands) {
    bool found = false;
    while (p.size() > 1 && evaluate(p, c).is_zero()) {
      p = deflate(p, c);
      found = true;
    }
    if (found) roots.push_back(c);
  }
  if (p.size() > 1) return std::nullopt;
  std::sort(roots.begin(), roots.end(), [](const CycNumber& a, const CycNumber& b) { return canonical_less(a, b); });
  return roots;
}

}  // namespace hopfcalc
