#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hopfcalc/errors.hpp"
#include "hopfcalc/fusion_search.hpp"
#include "hopfcalc/signature.hpp"

namespace hopfcalc {

/// A filter on candidate types. `check` returns a reason when the rule
/// applies to (N, type) and eliminates it, nullopt otherwise.
struct CensusRule {
  std::string id;
  std::string statement;
  std::string citation;
  std::function<bool(int, const AlgebraTypeSignature&)> applies;
  std::function<std::optional<std::string>(int, const AlgebraTypeSignature&)> check;
};

namespace detail {

inline std::string str(int v) { return std::to_string(v); }

inline bool divides(int a, int b) { return a != 0 && b % a == 0; }

inline bool none_of_12_24_60(int n) { return n % 12 != 0 && n % 24 != 0 && n % 60 != 0; }

/// Whether v is a nonnegative integer combination of gens.
inline bool in_span(int v, const std::vector<int>& gens) {
  if (v < 0) return false;
  std::vector<char> ok(static_cast<std::size_t>(v) + 1, 0);
  ok[0] = 1;
  for (int x = 1; x <= v; ++x)
    for (int g : gens)
      if (g <= x && ok[static_cast<std::size_t>(x - g)]) {
        ok[static_cast<std::size_t>(x)] = 1;
        break;
      }
  return ok[static_cast<std::size_t>(v)] != 0;
}

inline bool primes_divide(int s, int d) {
  for (int p = 2; p <= s; ++p) {
    if (s % p != 0) continue;
    if (d % p != 0) return false;
    while (s % p == 0) s /= p;
  }
  return true;
}

}  // namespace detail

inline const std::vector<CensusRule>& census_rules() {
  using detail::divides;
  using detail::str;
  using Sig = AlgebraTypeSignature;
  auto always = [](int, const Sig&) { return true; };
  static const std::vector<CensusRule> rules{
      {"R1", "n + sum n_i d_i^2 = N", "Wedderburn decomposition of a semisimple algebra", always,
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (t.dimension() == N) return std::nullopt;
         return "dimension " + str(t.dimension()) + " is not " + str(N);
       }},
      {"R2", "n divides N", "Nichols-Zoeller: the group algebra of G(H*) is a Hopf subalgebra of H*", always,
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (divides(t.n, N)) return std::nullopt;
         return str(t.n) + " does not divide " + str(N);
       }},
      {"R3", "n divides n_i d_i^2 for every i",
       "Nichols-Zoeller: each isotypic block is a free module over the group algebra of G(H*)", always,
       [](int, const Sig& t) -> std::optional<std::string> {
         for (auto [d, m] : t.entries)
           if (!divides(t.n, m * d * d)) return str(t.n) + " does not divide " + str(m) + "*" + str(d) + "^2";
         return std::nullopt;
       }},
      {"R4", "if n = 1 there are at least three distinct degrees d_i > 1",
       "Zhu's theorem on Hopf algebras without nontrivial one-dimensional representations",
       [](int, const Sig& t) { return t.n == 1; },
       [](int, const Sig& t) -> std::optional<std::string> {
         if (t.n != 1 || t.entries.size() >= 3) return std::nullopt;
         return "n = 1 with only " + str(static_cast<int>(t.entries.size())) + " distinct degrees > 1";
       }},
      {"R5", "if some d_i = 2 then N is even", "Nichols-Richmond: a degree-2 irreducible forces even dimension",
       [](int, const Sig& t) { return t.has_degree(2); },
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (!t.has_degree(2) || N % 2 == 0) return std::nullopt;
         return "degree 2 present and " + str(N) + " is odd";
       }},
      {"R6", "if n = 1 and some d_i = 2 then 60 divides N",
       "Nichols-Richmond: with no nontrivial group-likes a degree-2 character yields a quotient of dimension 60",
       [](int, const Sig& t) { return t.n == 1 && t.has_degree(2); },
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (t.n != 1 || !t.has_degree(2) || N % 60 == 0) return std::nullopt;
         return "n = 1 with degree 2 and 60 does not divide " + str(N);
       }},
      {"R7", "if n = 2, n_2 > 0 and none of 12, 24, 60 divides N then 2 + 4 n_2 divides N",
       "Nichols-Richmond stabilizer dichotomy, quotient of type (1,|G|;2,|X_2|), Nichols-Zoeller",
       [](int N, const Sig& t) { return t.n == 2 && t.has_degree(2) && detail::none_of_12_24_60(N); },
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (t.n != 2 || !t.has_degree(2) || !detail::none_of_12_24_60(N)) return std::nullopt;
         const int q = 2 + 4 * t.multiplicity(2);
         if (divides(q, N)) return std::nullopt;
         return "2+4*" + str(t.multiplicity(2)) + "=" + str(q) + " does not divide " + str(N);
       }},
      {"R8", "if n_2 > 0 and none of 12, 24, 60 divides N then n is even",
       "Nichols-Richmond stabilizer dichotomy with stabilizer exponent dividing the degree",
       [](int N, const Sig& t) { return t.has_degree(2) && detail::none_of_12_24_60(N); },
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (!t.has_degree(2) || !detail::none_of_12_24_60(N) || t.n % 2 == 0) return std::nullopt;
         return "degree 2 present, n = " + str(t.n) + " is odd and none of 12, 24, 60 divides " + str(N);
       }},
      {"R9", "if 12 does not divide N, no d_i = 4 and n_2 > 0 then n + 4 n_2 divides N",
       "quotient Hopf algebra spanned by the characters of degree at most 2, Nichols-Zoeller",
       [](int N, const Sig& t) { return N % 12 != 0 && !t.has_degree(4) && t.has_degree(2); },
       [](int N, const Sig& t) -> std::optional<std::string> {
         if (N % 12 == 0 || t.has_degree(4) || !t.has_degree(2)) return std::nullopt;
         const int q = t.n + 4 * t.multiplicity(2);
         if (divides(q, N)) return std::nullopt;
         return str(t.n) + "+4*" + str(t.multiplicity(2)) + "=" + str(q) + " does not divide " + str(N);
       }},
      {"R10",
       "for each degree d present some s divides gcd(n, d^2), has only primes dividing d, and d^2 - s is an "
       "N-combination of the degrees > 1 present",
       "decomposition of chi chi* into the stabilizer plus characters of degree > 1, stabilizer order and exponent",
       [](int, const Sig& t) { return !t.entries.empty(); },
       [](int, const Sig& t) -> std::optional<std::string> {
         std::vector<int> gens;
         for (auto [d, m] : t.entries) gens.push_back(d);
         for (int d : gens) {
           const int g = std::gcd(t.n, d * d);
           bool ok = false;
           for (int s = 1; s <= g && !ok; ++s)
             ok = g % s == 0 && detail::primes_divide(s, d) && detail::in_span(d * d - s, gens);
           if (!ok) return "no admissible decomposition of chi chi* for degree " + str(d);
         }
         return std::nullopt;
       }},
  };
  return rules;
}

inline const CensusRule& census_rule(const std::string& id) {
  for (const auto& r : census_rules())
    if (r.id == id) return r;
  throw ParseError("unknown rule '" + id + "'");
}

/// Parses "all", "R1-R8", "R1..R10" or "R1,R4,R5" into rule ids in canonical order.
inline std::vector<std::string> parse_rule_set(const std::string& text) {
  const auto& all = census_rules();
  auto index_of = [&](const std::string& id) {
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].id == id) return static_cast<int>(i);
    throw ParseError("unknown rule '" + id + "'");
  };
  std::set<int> chosen;
  if (text == "all") {
    for (std::size_t i = 0; i < all.size(); ++i) chosen.insert(static_cast<int>(i));
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string item = text.substr(pos, comma - pos);
      const std::size_t dash = item.find('-'), dots = item.find("..");
      if (dash != std::string::npos || dots != std::string::npos) {
        const std::size_t cut = dash != std::string::npos ? dash : dots;
        const int a = index_of(item.substr(0, cut));
        const int b = index_of(item.substr(cut + (dash != std::string::npos ? 1 : 2)));
        if (a > b) throw ParseError("empty rule range '" + item + "'");
        for (int i = a; i <= b; ++i) chosen.insert(i);
      } else {
        chosen.insert(index_of(item));
      }
      pos = comma + 1;
    }
  }
  std::vector<std::string> out;
  for (int i : chosen) out.push_back(all[static_cast<std::size_t>(i)].id);
  if (std::find(out.begin(), out.end(), "R1") == out.end()) throw ParseError("rule set must contain R1");
  return out;
}

struct Elimination {
  AlgebraTypeSignature type;
  std::string rule;
  std::string detail;
};

struct OracleVerdict {
  AlgebraTypeSignature type;
  std::string status;  // feasible, infeasible, inconclusive, skipped
  long long nodes = 0;
  std::string detail;
};

struct CensusOptions {
  std::vector<std::string> rules = parse_rule_set("all");
  bool proper_only = true;
  std::optional<int> n_filter;
  bool oracle = false;
  std::vector<AlgebraTypeSignature> oracle_targets;  // empty: every survivor
  SearchOptions search;
};

struct CensusResult {
  int dim = 0;
  std::vector<AlgebraTypeSignature> survivors;
  std::vector<Elimination> eliminated;
  std::vector<OracleVerdict> oracle;

  /// Survivors not refuted by the oracle.
  std::vector<AlgebraTypeSignature> final_types() const {
    std::vector<AlgebraTypeSignature> out;
    for (const auto& t : survivors) {
      const bool refuted = std::any_of(oracle.begin(), oracle.end(),
                                       [&](const OracleVerdict& v) { return v.type == t && v.status == "infeasible"; });
      if (!refuted) out.push_back(t);
    }
    return out;
  }
};

/// All types (1,n; d_1,n_1; ...) of total dimension N with n in 1..N, in
/// canonical order (by n, then by entries).
inline std::vector<AlgebraTypeSignature> all_types(int N) {
  std::vector<AlgebraTypeSignature> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(int, int, int)> rec = [&](int n, int d, int rest) {
    if (rest == 0) {
      out.emplace_back(n, cur);
      return;
    }
    for (; d * d <= rest; ++d)
      for (int m = 1; m * d * d <= rest; ++m) {
        cur.emplace_back(d, m);
        rec(n, d + 1, rest - m * d * d);
        cur.pop_back();
      }
  };
  for (int n = 1; n <= N; ++n) rec(n, 2, N - n);
  std::sort(out.begin(), out.end());
  return out;
}

inline CensusResult enumerate_types(int N, const CensusOptions& opt = {}) {
  if (N < 1) throw InvalidSignature("dimension must be positive");
  CensusResult res;
  res.dim = N;
  std::vector<const CensusRule*> rules;
  for (const auto& id : opt.rules) rules.push_back(&census_rule(id));
  for (const auto& t : all_types(N)) {
    if (opt.proper_only && t.entries.empty()) continue;
    if (opt.n_filter && t.n != *opt.n_filter) continue;
    bool killed = false;
    for (const auto* r : rules) {
      if (auto why = r->check(N, t)) {
        res.eliminated.push_back({t, r->id, *why});
        killed = true;
        break;
      }
    }
    if (!killed) res.survivors.push_back(t);
  }
  if (opt.oracle) {
    for (const auto& t : res.survivors) {
      if (!opt.oracle_targets.empty() &&
          std::find(opt.oracle_targets.begin(), opt.oracle_targets.end(), t) == opt.oracle_targets.end())
        continue;
      OracleVerdict v{t, "", 0, ""};
      try {
        const auto out = search_fusion(t, opt.search);
        v.status = out.status_name();
        v.nodes = out.nodes;
        v.detail = out.status == SearchOutcome::Status::Infeasible ? out.first_failure : "";
      } catch (const SearchBoundExceeded& e) {
        v.status = "skipped";
        v.detail = e.what();
      }
      res.oracle.push_back(std::move(v));
    }
  }
  return res;
}

/// Algebra type of a tensor product: degrees multiply pairwise.
inline AlgebraTypeSignature tensor_type(const AlgebraTypeSignature& a, const AlgebraTypeSignature& b) {
  std::map<int, int> agg;
  auto entries = [](const AlgebraTypeSignature& t) {
    std::vector<std::pair<int, int>> e{{1, t.n}};
    e.insert(e.end(), t.entries.begin(), t.entries.end());
    return e;
  };
  for (auto [d, m] : entries(a))
    for (auto [e, k] : entries(b)) agg[d * e] += m * k;
  const int n = agg[1];
  agg.erase(1);
  return AlgebraTypeSignature(n, {agg.begin(), agg.end()});
}

struct Completion {
  std::vector<AlgebraTypeSignature> solutions;
  bool ambiguous() const { return solutions.size() > 1; }
  const AlgebraTypeSignature& unique() const {
    if (solutions.size() != 1) throw Error("completion is ambiguous");
    return solutions.front();
  }
};

/// Types of dimension N with n group-likes whose other degrees lie in `allowed`.
inline Completion complete_type(int N, int n, const std::vector<int>& allowed) {
  if (n < 1 || N % n != 0) throw InvalidSignature("n must divide N");
  std::vector<int> degs;
  for (int d : allowed)
    if (d >= 2) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  Completion c;
  std::vector<std::pair<int, int>> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (rest == 0) {
      c.solutions.emplace_back(n, cur);
      return;
    }
    if (i == degs.size()) return;
    rec(i + 1, rest);
    const int d = degs[i];
    for (int m = 1; m * d * d <= rest; ++m) {
      cur.emplace_back(d, m);
      rec(i + 1, rest - m * d * d);
      cur.pop_back();
    }
  };
  rec(0, N - n);
  if (c.solutions.empty()) throw NoSolution("no type of dimension " + std::to_string(N) + " with " + std::to_string(n) +
                                            " group-likes and the allowed degrees");
  std::sort(c.solutions.begin(), c.solutions.end());
  return c;
}

}  // namespace hopfcalc
