#pragma once

#include <string>
#include <vector>

#include "hopfcalc/abelian.hpp"
#include "hopfcalc/check.hpp"
#include "hopfcalc/group.hpp"
#include "hopfcalc/hopf.hpp"

namespace hopfcalc {

/// phi in H (x) H with its inverse.
struct TwistElement {
  Tensor2 value;
  Tensor2 inverse;
};

inline TwistElement trivial_twist(const HopfData& h) {
  return {h.unit_tensor(), h.unit_tensor()};
}

namespace detail {

inline CharacterGroup subgroup_characters(const FiniteGroup& g, const Subgroup& a) {
  try {
    return character_group(g, a);
  } catch (const NotAbelian& e) {
    throw NotAbelianSubgroup(e.what());
  } catch (const InvalidGroup& e) {
    throw NotAbelianSubgroup(e.what());
  }
}

inline void check_bicharacter_on(const CharacterGroup& chars, const AltBicharacter& b) {
  if (b.structure() != chars.basis.structure)
    throw InvalidBicharacter("bicharacter is defined on " + b.structure().to_string() + " but the dual of A is " +
                             chars.basis.structure.to_string());
}

}  // namespace detail

/// phi = sum_{x,y} omega(x,y) delta_x (x) delta_y in kA (x) kA, with
/// delta_x = |A|^-1 sum_a x(a) a and omega the upper-triangular cocycle of B.
inline TwistElement build_lifted_twist(const FiniteGroup& g, const Subgroup& a, const AltBicharacter& b) {
  const CharacterGroup chars = detail::subgroup_characters(g, a);
  detail::check_bicharacter_on(chars, b);
  const int n = chars.order();
  const int big = std::lcm(chars.exponent(), b.modulus());
  const Rational scale(1, n * n);
  TwistElement t;
  for (int sign : {1, -1}) {
    Tensor2& out = sign == 1 ? t.value : t.inverse;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const int ea = chars.basis.element_at[static_cast<std::size_t>(p)];
        const int eb = chars.basis.element_at[static_cast<std::size_t>(q)];
        std::vector<int> count(static_cast<std::size_t>(big), 0);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const long long e = sign * static_cast<long long>(b.cocycle_exponent(x, y)) * (big / b.modulus()) +
                                static_cast<long long>(chars.value_exponent(x, ea) + chars.value_exponent(y, eb)) *
                                    (big / chars.exponent());
            ++count[static_cast<std::size_t>(((e % big) + big) % big)];
          }
        CycNumber c;
        for (int e = 0; e < big; ++e)
          if (count[static_cast<std::size_t>(e)]) c += root_of_unity(big, e) * CycNumber(count[static_cast<std::size_t>(e)]);
        add_term(out, {ea, eb}, c * CycNumber(scale));
      }
  }
  return t;
}

namespace detail {

inline Tensor3 tensor_left(const Tensor2& t, const Vec& u) {  // t (x) u
  Tensor3 out;
  for (const auto& [k, c] : t)
    for (const auto& [i, x] : u) add_term(out, {k.first, k.second, i}, c * x);
  return out;
}

inline Tensor3 tensor_right(const Vec& u, const Tensor2& t) {  // u (x) t
  Tensor3 out;
  for (const auto& [i, x] : u)
    for (const auto& [k, c] : t) add_term(out, {i, k.first, k.second}, c * x);
  return out;
}

}  // namespace detail

/// Normalization, invertibility and the 2-cocycle identity
/// (phi (x) 1)(Delta (x) id)(phi) = (1 (x) phi)(id (x) Delta)(phi).
inline CheckList verify_twist(const HopfData& h, const TwistElement& phi) {
  CheckList rep;
  auto add = [&](const std::string& name, const std::string& d) { rep.checks.push_back({name, d.empty(), d}); };
  {
    Vec l, r;
    for (const auto& [k, c] : phi.value) {
      add_term(l, k.second, c * h.counit[static_cast<std::size_t>(k.first)]);
      add_term(r, k.first, c * h.counit[static_cast<std::size_t>(k.second)]);
    }
    add("normalization", l != h.unit ? "(epsilon (x) id)(phi) = " + vec_to_string(h, l)
                         : r != h.unit ? "(id (x) epsilon)(phi) = " + vec_to_string(h, r)
                                       : "");
  }
  {
    const Tensor2 one = h.unit_tensor();
    add("invertibility", h.multiply(phi.value, phi.inverse) != one   ? "phi phi^-1 != 1 (x) 1"
                         : h.multiply(phi.inverse, phi.value) != one ? "phi^-1 phi != 1 (x) 1"
                                                                     : "");
  }
  {
    const Tensor3 lhs = h.multiply(detail::tensor_left(phi.value, h.unit), comultiply_left(h, phi.value));
    const Tensor3 rhs = h.multiply(detail::tensor_right(h.unit, phi.value), comultiply_right(h, phi.value));
    add("cocycle", lhs != rhs ? "left and right sides differ in H(x)H(x)H" : "");
  }
  return rep;
}

/// H with Delta_phi(h) = phi Delta(h) phi^-1 and S_phi(h) = U S(h) U^-1,
/// U = sum phi^1 S(phi^2). The result is re-verified when reverify is set.
inline HopfData twist_hopf(const HopfData& h, const TwistElement& phi, bool reverify = true) {
  const CheckList tv = verify_twist(h, phi);
  if (!tv.passed()) throw TwistInvalid(tv.first_failure());
  HopfData out = h;
  for (int i = 0; i < h.dim; ++i)
    out.comult[static_cast<std::size_t>(i)] = h.multiply(h.multiply(phi.value, h.comult[static_cast<std::size_t>(i)]), phi.inverse);
  const Vec u = contract(h, phi.value, Leg::right);
  const Vec u_inv = contract(h, phi.inverse, Leg::left);
  if (h.multiply(u, u_inv) != h.unit || h.multiply(u_inv, u) != h.unit)
    throw TwistInvalid("U = sum phi^1 S(phi^2) is not inverted by sum S(phi^-1,1) phi^-1,2");
  for (int i = 0; i < h.dim; ++i)
    out.antipode[static_cast<std::size_t>(i)] = h.multiply(h.multiply(u, h.antipode[static_cast<std::size_t>(i)]), u_inv);
  if (reverify) {
    const HopfReport r = verify_hopf_axioms(out);
    if (!r.passed()) throw TwistInvalid("twisted data fails " + r.first_failure());
  }
  return out;
}

/// ad G-invariance of B under the contragredient action on the dual of the normal abelian subgroup A.
inline bool cocommutativity_criterion(const FiniteGroup& g, const Subgroup& a, const AltBicharacter& b) {
  const CharacterGroup chars = detail::subgroup_characters(g, a);
  detail::check_bicharacter_on(chars, b);
  const GroupAction act = dual_action(g, chars);
  for (int x = 0; x < g.order(); ++x) {
    const auto t = bichar_action_scalar(b, g, act, x);
    if (!t || *t % b.order() != 1 % b.order()) return false;
  }
  return true;
}

/// Elements g of G with (g (x) g) phi = phi (g (x) g), i.e. Delta_phi(g) = g (x) g.
inline std::vector<int> surviving_group_likes(const FiniteGroup& g, const TwistElement& phi) {
  const HopfData h = from_group(g);
  const CheckList tv = verify_twist(h, phi);
  if (!tv.passed()) throw TwistInvalid(tv.first_failure());
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    const Tensor2 gg{{{x, x}, CycNumber(1)}};
    if (h.multiply(gg, phi.value) == h.multiply(phi.value, gg)) out.push_back(x);
  }
  return out;
}

}  // namespace hopfcalc
