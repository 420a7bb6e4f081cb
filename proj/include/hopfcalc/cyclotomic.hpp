#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycNumber is a polynomial in zeta_n with rational coefficients, reduced
// modulo the n-th cyclotomic polynomial. Every value is kept in canonical
// form: the conductor is the smallest n whose field contains the value, so
// two values are equal exactly when their representations are equal.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <boost/safe_numerics/safe_integer.hpp>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

/// Overflow-checked 64-bit integer; overflow raises instead of wrapping.
using Integer = boost::safe_numerics::safe<std::int64_t>;
using Rational = boost::rational<Integer>;

}  // namespace hopfcalc

namespace boost {
// boost's mixed rational/integer operator== recurses under C++20 rewritten
// comparisons; exact overloads take precedence.
inline bool operator==(const hopfcalc::Rational& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const hopfcalc::Rational& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const hopfcalc::Rational& a, long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const hopfcalc::Rational& a, const hopfcalc::Integer& b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace hopfcalc {

/// Largest supported conductor. Results that need a bigger field raise
/// ConductorTooLarge.
inline constexpr int kMaxConductor = 24;

inline std::int64_t to_int64(const Integer& v) { return static_cast<std::int64_t>(v); }

inline std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << to_int64(q.numerator());
  if (q.denominator() != 1) os << '/' << to_int64(q.denominator());
  return os.str();
}

inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) throw ParseError("empty rational component in '" + text + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed rational '" + text + "'");
    }
    if (pos != s.size()) throw ParseError("malformed rational '" + text + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(parse_int(text)));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  return Rational(Integer(parse_int(text.substr(0, slash))), Integer(den));
}

namespace detail {

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Data to recognise elements of Q(zeta_n) that lie in the subfield Q(zeta_d).
struct Descent {
  int d = 0;
  std::vector<int> pivot_rows;              // phi(d) rows of the embedding matrix
  std::vector<std::vector<Rational>> inv;   // inverse of the pivot submatrix
};

struct ConductorTable {
  int n = 0;
  int phi = 0;
  // powers[e] = coefficients of zeta_n^e reduced mod Phi_n, for 0 <= e < n.
  std::vector<std::vector<std::int64_t>> powers;
  std::vector<Descent> descents;  // proper subfields, ascending d
};

inline std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                                   const std::vector<std::int64_t>& den) {
  // den is monic; returns quotient.
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<std::int64_t> q(static_cast<std::size_t>(std::max(nn - dn + 1, 1)), 0);
  for (int i = nn; i >= dn; --i) {
    std::int64_t c = num[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dn)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[static_cast<std::size_t>(i - dn + j)] -= c * den[static_cast<std::size_t>(j)];
  }
  return q;
}

class CyclotomicTables {
 public:
  CyclotomicTables() {
    cyclotomic_.resize(kMaxConductor + 1);
    tables_.resize(kMaxConductor + 1);
    for (int n = 1; n <= kMaxConductor; ++n) {
      std::vector<std::int64_t> p(static_cast<std::size_t>(n + 1), 0);
      p[0] = -1;
      p[static_cast<std::size_t>(n)] = 1;
      for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_[static_cast<std::size_t>(d)]);
      cyclotomic_[static_cast<std::size_t>(n)] = p;
    }
    for (int n = 1; n <= kMaxConductor; ++n) build(n);
  }

  const ConductorTable& at(int n) const { return tables_[static_cast<std::size_t>(n)]; }

 private:
  void build(int n) {
    ConductorTable& t = tables_[static_cast<std::size_t>(n)];
    t.n = n;
    t.phi = euler_phi(n);
    const auto& phin = cyclotomic_[static_cast<std::size_t>(n)];
    const auto phi = static_cast<std::size_t>(t.phi);
    std::vector<std::int64_t> cur(phi, 0);
    cur[0] = 1;
    for (int e = 0; e < n; ++e) {
      t.powers.push_back(cur);
      // multiply by x and reduce with x^phi = -sum_{i<phi} c_i x^i
      std::int64_t top = cur[phi - 1];
      for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * phin[i];
    }
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      t.descents.push_back(make_descent(t, d));
    }
  }

  Descent make_descent(const ConductorTable& t, int d) {
    Descent out;
    out.d = d;
    const int pd = euler_phi(d);
    const int step = t.n / d;
    // Embedding matrix columns: zeta_d^j = zeta_n^{j*step}.
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(t.phi),
                                            std::vector<Rational>(static_cast<std::size_t>(pd)));
    for (int j = 0; j < pd; ++j) {
      const auto& col = t.powers[static_cast<std::size_t>(j * step)];
      for (int i = 0; i < t.phi; ++i)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(Integer(col[static_cast<std::size_t>(i)]));
    }
    // Greedily pick independent rows.
    std::vector<std::vector<Rational>> basis;  // echelon copies
    std::vector<int> pivcol;
    for (int i = 0; i < t.phi && static_cast<int>(out.pivot_rows.size()) < pd; ++i) {
      auto v = rows[static_cast<std::size_t>(i)];
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto pc = static_cast<std::size_t>(pivcol[b]);
        if (v[pc] != 0) {
          Rational f = v[pc] / basis[b][pc];
          for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * basis[b][k];
        }
      }
      auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
      if (nz == v.end()) continue;
      pivcol.push_back(static_cast<int>(nz - v.begin()));
      basis.push_back(v);
      out.pivot_rows.push_back(i);
    }
    // Invert the square submatrix by Gauss-Jordan.
    const auto p = static_cast<std::size_t>(pd);
    std::vector<std::vector<Rational>> a(p, std::vector<Rational>(2 * p));
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) a[r][c] = rows[static_cast<std::size_t>(out.pivot_rows[r])][c];
      a[r][p + r] = Rational(1);
    }
    for (std::size_t c = 0; c < p; ++c) {
      std::size_t piv = c;
      while (a[piv][c] == 0) ++piv;
      std::swap(a[piv], a[c]);
      Rational inv = Rational(1) / a[c][c];
      for (auto& x : a[c]) x *= inv;
      for (std::size_t r = 0; r < p; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c];
        for (std::size_t k = 0; k < 2 * p; ++k) a[r][k] -= f * a[c][k];
      }
    }
    out.inv.assign(p, std::vector<Rational>(p));
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c) out.inv[r][c] = a[r][p + c];
    return out;
  }

  std::vector<std::vector<std::int64_t>> cyclotomic_;
  std::vector<ConductorTable> tables_;
};

inline const CyclotomicTables& tables() {
  static const CyclotomicTables instance;
  return instance;
}

inline int checked_lcm(int a, int b) {
  const long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > kMaxConductor)
    throw ConductorTooLarge("conductor " + std::to_string(l) + " exceeds maximum " +
                            std::to_string(kMaxConductor));
  return static_cast<int>(l);
}

}  // namespace detail

/// An exact element of Q(zeta_n), n <= kMaxConductor. Immutable value type.
class CycNumber {
 public:
  CycNumber() : conductor_(1), coeffs_{Rational(0)} {}
  CycNumber(long long v) : conductor_(1), coeffs_{Rational(Integer(v))} {}  // NOLINT
  CycNumber(int v) : CycNumber(static_cast<long long>(v)) {}                // NOLINT
  CycNumber(const Rational& q) : conductor_(1), coeffs_{q} {}               // NOLINT

  /// Builds sum_i coeffs[i] * zeta_n^i for any number of coefficients and
  /// returns the canonical representative.
  static CycNumber from_powers(int n, const std::vector<Rational>& coeffs) {
    check_conductor(n);
    const auto& t = detail::tables().at(n);
    std::vector<Rational> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < coeffs.size(); ++i) acc[i % static_cast<std::size_t>(n)] += coeffs[i];
    return CycNumber(n, reduce(t, acc));
  }

  /// Builds a value from a reduced coefficient vector of length phi(n).
  static CycNumber from_reduced(int n, std::vector<Rational> coeffs) {
    check_conductor(n);
    if (coeffs.size() != static_cast<std::size_t>(detail::tables().at(n).phi))
      throw ParseError("conductor " + std::to_string(n) + " needs " +
                       std::to_string(detail::tables().at(n).phi) + " coefficients");
    return CycNumber(n, std::move(coeffs));
  }

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_value() const { return coeffs_[0]; }

  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  /// Total order on representations, only for deterministic sorting.
  friend bool canonical_less(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
  }

  CycNumber operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ == 1 && b.conductor_ == 1) return CycNumber(a.coeffs_[0] + b.coeffs_[0]);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int n = detail::checked_lcm(a.conductor_, b.conductor_);
    auto x = a.lift(n);
    auto y = b.lift(n);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return CycNumber(n, std::move(x));
  }
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.conductor_ == 1 && b.conductor_ == 1) return CycNumber(a.coeffs_[0] * b.coeffs_[0]);
    if (a.conductor_ == 1) return b.scaled(a.coeffs_[0]);
    if (b.conductor_ == 1) return a.scaled(b.coeffs_[0]);
    const int n = detail::checked_lcm(a.conductor_, b.conductor_);
    const auto& t = detail::tables().at(n);
    auto x = a.lift(n);
    auto y = b.lift(n);
    std::vector<Rational> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        acc[(i + j) % static_cast<std::size_t>(n)] += x[i] * y[j];
      }
    }
    return CycNumber(n, reduce(t, acc));
  }

  CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
  CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  /// Multiplicative inverse; raises DivisionByZero for 0.
  CycNumber inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (conductor_ == 1) return CycNumber(Rational(1) / coeffs_[0]);
    // Solve (multiplication by *this) x = 1 in the power basis of Q(zeta_n).
    const int n = conductor_;
    const auto p = coeffs_.size();
    std::vector<std::vector<Rational>> m(p, std::vector<Rational>(p + 1));
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<Rational> basis(p);
      basis[j] = 1;
      CycNumber col = *this * CycNumber(n, basis, raw_tag{});
      auto colv = col.lift(n);
      for (std::size_t i = 0; i < p; ++i) m[i][j] = colv[i];
    }
    m[0][p] = 1;
    for (std::size_t c = 0; c < p; ++c) {
      std::size_t piv = c;
      while (piv < p && m[piv][c] == 0) ++piv;
      std::swap(m[piv], m[c]);
      Rational inv = Rational(1) / m[c][c];
      for (auto& v : m[c]) v *= inv;
      for (std::size_t r = 0; r < p; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational f = m[r][c];
        for (std::size_t k = 0; k <= p; ++k) m[r][k] -= f * m[c][k];
      }
    }
    std::vector<Rational> x(p);
    for (std::size_t i = 0; i < p; ++i) x[i] = m[i][p];
    return CycNumber(n, std::move(x));
  }

  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

  /// Image under the Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  CycNumber galois(long long k) const {
    if (conductor_ == 1) return *this;
    const int n = conductor_;
    long long kk = ((k % n) + n) % n;
    if (std::gcd(kk, static_cast<long long>(n)) != 1)
      throw Error("galois exponent not coprime to conductor");
    std::vector<Rational> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      acc[static_cast<std::size_t>((static_cast<long long>(i) * kk) % n)] += coeffs_[i];
    return CycNumber(n, reduce(detail::tables().at(n), acc));
  }

  /// Complex conjugation, zeta -> zeta^{-1}.
  CycNumber conjugate() const { return galois(-1); }

  CycNumber pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber result(1);
    CycNumber base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Multiplicative order if this is a root of unity, else 0.
  int root_order() const {
    const int bound = std::lcm(2, conductor_);
    CycNumber acc = *this;
    for (int k = 1; k <= bound; ++k) {
      if (acc == CycNumber(1)) return bound % k == 0 ? k : 0;
      acc *= *this;
    }
    return 0;
  }

  std::string to_string() const {
    if (conductor_ == 1) return rational_to_string(coeffs_[0]);
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      std::string mono = i == 0 ? "" : "z" + std::to_string(conductor_) + (i == 1 ? "" : "^" + std::to_string(i));
      Rational mag = c < 0 ? -c : c;
      std::string term;
      if (mono.empty()) term = rational_to_string(mag);
      else if (mag == 1) term = mono;
      else term = rational_to_string(mag) + "*" + mono;
      if (out.empty()) out = (c < 0 ? "-" : "") + term;
      else out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycNumber& a) { return os << a.to_string(); }

 private:
  struct raw_tag {};
  CycNumber(int n, std::vector<Rational> coeffs, raw_tag) : conductor_(n), coeffs_(std::move(coeffs)) {}
  CycNumber(int n, std::vector<Rational> coeffs) { canonicalize(n, std::move(coeffs)); }

  static void check_conductor(int n) {
    if (n < 1) throw Error("conductor must be positive");
    if (n > kMaxConductor)
      throw ConductorTooLarge("conductor " + std::to_string(n) + " exceeds maximum " +
                              std::to_string(kMaxConductor));
  }

  static std::vector<Rational> reduce(const detail::ConductorTable& t, const std::vector<Rational>& acc) {
    std::vector<Rational> out(static_cast<std::size_t>(t.phi));
    for (std::size_t e = 0; e < acc.size(); ++e) {
      if (acc[e] == 0) continue;
      const auto& pw = t.powers[e];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (pw[k] != 0) out[k] += acc[e] * Rational(Integer(pw[k]));
    }
    return out;
  }

  CycNumber scaled(const Rational& q) const {
    if (q == 0) return CycNumber();
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c *= q;
    return r;
  }

  /// Coefficients of this value viewed in Q(zeta_n), conductor_ | n.
  std::vector<Rational> lift(int n) const {
    if (n == conductor_) return coeffs_;
    const auto& t = detail::tables().at(n);
    const int step = n / conductor_;
    std::vector<Rational> out(static_cast<std::size_t>(t.phi));
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& pw = t.powers[j * static_cast<std::size_t>(step)];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (pw[k] != 0) out[k] += coeffs_[j] * Rational(Integer(pw[k]));
    }
    return out;
  }

  void canonicalize(int n, std::vector<Rational> coeffs) {
    conductor_ = n;
    coeffs_ = std::move(coeffs);
    if (n == 1) return;
    if (std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q == 0; })) {
      Rational r = coeffs_[0];
      conductor_ = 1;
      coeffs_.assign(1, r);
      return;
    }
    const auto& t = detail::tables().at(n);
    for (const auto& ds : t.descents) {
      if (ds.d == 1 || ds.d % 4 == 2) continue;
      const auto p = ds.pivot_rows.size();
      std::vector<Rational> c(p);
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t k = 0; k < p; ++k) {
          const Rational& a = coeffs_[static_cast<std::size_t>(ds.pivot_rows[k])];
          if (a != 0 && ds.inv[r][k] != 0) c[r] += ds.inv[r][k] * a;
        }
      CycNumber candidate(ds.d, c, raw_tag{});
      if (candidate.lift(n) == coeffs_) {
        conductor_ = ds.d;
        coeffs_ = std::move(c);
        return;
      }
    }
  }

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// zeta_n^k. The result is canonical, so root_of_unity(6, 3) == -1.
inline CycNumber root_of_unity(int n, long long k) {
  if (n < 1) throw Error("root_of_unity: n must be positive");
  long long kk = ((k % n) + n) % n;
  const long long g = std::gcd(kk, static_cast<long long>(n));
  const int order = static_cast<int>(n / (g == 0 ? n : g));
  const long long e = g == 0 ? 0 : kk / g;
  if (order == 1) return CycNumber(1);
  if (order % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    const int m = order / 2;
    CycNumber r = root_of_unity(m, e * ((m + 1) / 2));
    return e % 2 == 0 ? r : -r;
  }
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return CycNumber::from_powers(order, c);
}

inline CycNumber conjugate(const CycNumber& a) { return a.conjugate(); }

}  // namespace hopfcalc
