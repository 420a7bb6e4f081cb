#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfcalc/abelian.hpp"
#include "hopfcalc/group.hpp"

namespace hopfcalc {

/// F x| Gamma with F = Z_3, Gamma = <s> x <t> = Z_2 x Z_2, s.a = t.a = a^2.
/// Index f + 3*(2*i + j) for a^f s^i t^j.
inline FiniteGroup build_g12() {
  const FiniteGroup f = build_cyclic(3);
  const FiniteGroup gamma = build_product(build_cyclic(2), build_cyclic(2));
  const auto inv = power_map(f, 2);
  return build_semidirect(f, gamma, action_from_generators(gamma, {2, 1}, {inv, inv}, f));
}

/// Gamma x| F with Gamma = <s> x <t> = Z_3 x Z_3, F = <a> = Z_2, a.s = s^2,
/// a.t = t. Index 3*i + j + 9*f for s^i t^j a^f.
inline FiniteGroup build_g18() {
  const FiniteGroup gamma = build_product(build_cyclic(3), build_cyclic(3));
  const FiniteGroup f = build_cyclic(2);
  std::vector<int> img(9);
  for (int x = 0; x < 9; ++x) img[static_cast<std::size_t>(x)] = ((2 * (x / 3)) % 3) * 3 + x % 3;
  return build_semidirect(gamma, f, action_from_generators(f, {1}, {img}, gamma));
}

/// (Z_3 x Z_3) x| Z_2 with the generator acting by inversion.
inline FiniteGroup build_generalized_dihedral_18() {
  const FiniteGroup a = build_product(build_cyclic(3), build_cyclic(3));
  const FiniteGroup f = build_cyclic(2);
  return build_semidirect(a, f, action_from_generators(f, {1}, {power_map(a, -1)}, a));
}

inline const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names{"Z2", "Z3", "Z4", "Z2xZ2", "Z3xZ3", "S3", "D4",
                                              "Q8", "D3xD3", "G12", "G18", "GD18"};
  return names;
}

inline FiniteGroup builtin_group(const std::string& name) {
  if (name == "Z2") return build_cyclic(2);
  if (name == "Z3") return build_cyclic(3);
  if (name == "Z4") return build_cyclic(4);
  if (name == "Z2xZ2") return build_product(build_cyclic(2), build_cyclic(2));
  if (name == "Z3xZ3") return build_product(build_cyclic(3), build_cyclic(3));
  if (name == "S3") return build_symmetric(3);
  if (name == "D4") return build_dihedral(4);
  if (name == "Q8") return build_quaternion();
  if (name == "D3xD3") return build_product(build_dihedral(3), build_dihedral(3));
  if (name == "G12") return build_g12();
  if (name == "G18") return build_g18();
  if (name == "GD18") return build_generalized_dihedral_18();
  throw InvalidGroup("unknown group '" + name + "'");
}

/// Named subgroups of the built-ins, plus "all" and "center" for any group.
inline Subgroup named_subgroup(const std::string& group, const FiniteGroup& g, const std::string& name) {
  if (name == "all") return all_elements(g);
  if (name == "center") return center(g);
  if (name == "trivial") return {g.identity()};
  if (group == "G12" && name == "Gamma") return {0, 3, 6, 9};
  if (group == "G18" && name == "Gamma") return {0, 1, 2, 3, 4, 5, 6, 7, 8};
  if (group == "GD18" && name == "A") return {0, 1, 2, 3, 4, 5, 6, 7, 8};
  if (group == "D3xD3" && name == "Klein") return {0, 3, 18, 21};
  if (group == "D4" && name == "Klein") return generated_subgroup(g, {2, 4});
  if (group == "D4" && name == "C4") return generated_subgroup(g, {1});
  throw InvalidGroup("unknown subgroup '" + name + "' of " + group);
}

}  // namespace hopfcalc
