#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

/// An algebra type (1,n; d_1,n_1; ...; d_r,n_r), entries sorted by degree.
struct AlgebraTypeSignature {
  int n = 1;
  std::vector<std::pair<int, int>> entries;  // (degree >= 2, multiplicity >= 1)

  AlgebraTypeSignature() = default;
  AlgebraTypeSignature(int ones, std::vector<std::pair<int, int>> e) : n(ones), entries(std::move(e)) { normalize(); }

  int dimension() const {
    int total = n;
    for (auto [d, m] : entries) total += m * d * d;
    return total;
  }

  /// Number of basis elements (irreducibles) of the type.
  int basis_size() const {
    int total = n;
    for (auto [d, m] : entries) total += m;
    return total;
  }

  int multiplicity(int d) const {
    if (d == 1) return n;
    for (auto [e, m] : entries)
      if (e == d) return m;
    return 0;
  }

  bool has_degree(int d) const { return multiplicity(d) > 0; }

  /// Degree of every basis element: n ones, then ascending degrees.
  std::vector<int> degree_list() const {
    std::vector<int> out(static_cast<std::size_t>(n), 1);
    for (auto [d, m] : entries) out.insert(out.end(), static_cast<std::size_t>(m), d);
    return out;
  }

  std::string to_string() const {
    std::string s = "1," + std::to_string(n);
    for (auto [d, m] : entries) s += ";" + std::to_string(d) + "," + std::to_string(m);
    return s;
  }

  friend bool operator==(const AlgebraTypeSignature& a, const AlgebraTypeSignature& b) {
    return a.n == b.n && a.entries == b.entries;
  }
  friend bool operator<(const AlgebraTypeSignature& a, const AlgebraTypeSignature& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.entries < b.entries;
  }

  static AlgebraTypeSignature from_degrees(const std::vector<int>& degrees) {
    AlgebraTypeSignature s;
    s.n = 0;
    for (int d : degrees) {
      if (d < 1) throw InvalidSignature("degrees must be positive");
      if (d == 1) {
        ++s.n;
        continue;
      }
      auto it = std::find_if(s.entries.begin(), s.entries.end(), [d](const auto& e) { return e.first == d; });
      if (it == s.entries.end()) s.entries.emplace_back(d, 1);
      else ++it->second;
    }
    s.normalize();
    return s;
  }

 private:
  void normalize() {
    if (n < 1) throw InvalidSignature("a type needs at least one degree-1 component");
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].first < 2) throw InvalidSignature("entry degrees must be at least 2");
      if (entries[i].second < 1) throw InvalidSignature("entry multiplicities must be positive");
      if (i > 0 && entries[i].first == entries[i - 1].first) throw InvalidSignature("repeated degree in type");
    }
  }
};

/// Parses "1,n;d1,n1;d2,n2". Entries may come in any order.
inline AlgebraTypeSignature parse_signature(const std::string& text) {
  std::vector<std::pair<int, int>> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("bad type entry '" + item + "'");
    try {
      std::size_t p1 = 0, p2 = 0;
      const std::string a = item.substr(0, comma), b = item.substr(comma + 1);
      int d = std::stoi(a, &p1), m = std::stoi(b, &p2);
      auto trimmed = [](const std::string& s, std::size_t p) {
        return s.find_first_not_of(" \t", p) == std::string::npos;
      };
      if (!trimmed(a, p1) || !trimmed(b, p2)) throw ParseError("bad type entry '" + item + "'");
      parts.emplace_back(d, m);
    } catch (const std::logic_error&) {
      throw ParseError("bad type entry '" + item + "'");
    }
  }
  if (parts.empty() || parts[0].first != 1) throw ParseError("type must start with 1,n");
  const int n = parts[0].second;
  parts.erase(parts.begin());
  return AlgebraTypeSignature(n, std::move(parts));
}

}  // namespace hopfcalc
