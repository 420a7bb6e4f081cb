#pragma once

#include <map>
#include <string>

#include "hopfcalc/errors.hpp"

namespace hopfcalc {

/// Citation strings for every named axiom or check that can appear in a report.
inline const std::map<std::string, std::string>& axiom_citations() {
  static const std::map<std::string, std::string> table{
      // fusion data
      {"unit", "the trivial representation is the unit of the character ring"},
      {"duality", "m(eps, chi_i chi_j) = 1 exactly when chi_j is the dual of chi_i"},
      {"frobenius", "Frobenius reciprocity for characters of a semisimple Hopf algebra"},
      {"degree", "degree identity d_i d_j = sum_k N(i,j,k) d_k"},
      {"bounds", "degree identity bounds: N(i,j,k) d_k <= d_i d_j"},
      {"group-like-multiplicity", "a degree-1 character times an irreducible is irreducible"},
      {"group-like-closure", "degree-1 characters form the group G(H*)"},
      {"associativity", "associativity of the character ring"},
      {"stabilizer-order", "Nichols-Zoeller: the order of the stabilizer G[chi] divides deg(chi)^2"},
      {"stabilizer-exponent", "the exponent of the stabilizer G[chi] divides deg(chi)"},
      {"closure-divisibility",
       "Nichols-Zoeller: a standard subalgebra gives a quotient Hopf algebra whose dimension divides dim H"},
      {"nr-dichotomy",
       "Nichols-Richmond: a degree-2 character has nontrivial stabilizer or chi chi* = eps + psi with deg psi = 3"},
      // Hopf algebras
      {"hopf:associativity", "algebra axiom: (ab)c = a(bc)"},
      {"hopf:unit", "algebra axiom: 1a = a = a1"},
      {"hopf:coassociativity", "coalgebra axiom: (Delta (x) id)Delta = (id (x) Delta)Delta"},
      {"hopf:counit", "coalgebra axiom: (eps (x) id)Delta = id = (id (x) eps)Delta"},
      {"hopf:comultiplication-multiplicative", "bialgebra axiom: Delta(ab) = Delta(a)Delta(b)"},
      {"hopf:counit-multiplicative", "bialgebra axiom: eps(ab) = eps(a)eps(b)"},
      {"hopf:unit-coalgebra-map", "bialgebra axiom: Delta(1) = 1 (x) 1 and eps(1) = 1"},
      {"hopf:antipode", "antipode axiom: m(S (x) id)Delta = u eps = m(id (x) S)Delta"},
      {"hopf:s-squared-identity", "semisimplicity in characteristic zero is equivalent to S^2 = id"},
      // twists
      {"twist:normalization", "a twist is counital: (eps (x) id)phi = 1 = (id (x) eps)phi"},
      {"twist:invertibility", "a twist is invertible in H (x) H"},
      {"twist:cocycle", "2-cocycle identity (phi (x) 1)(Delta (x) id)phi = (1 (x) phi)(id (x) Delta)phi"},
      {"twist:cocommutativity-criterion",
       "a twist lifted from a normal abelian subgroup A gives a cocommutative algebra exactly when the class of "
       "its cocycle on the dual of A is ad G-invariant"},
      {"twist:surviving-group-likes", "g stays group-like after twisting iff g (x) g commutes with phi"},
      // doubles and Yetter-Drinfeld modules
      {"yd:one-dimensional", "V(g,eta) is a Yetter-Drinfeld module iff (eta -> h)g = g(h <- eta) for all h"},
      {"double:group-type", "irreducible D(G)-modules are induced from irreducibles of centralizers C_G(g)"},
      {"double:coalgebra", "D(H) is H*cop (x) H as a coalgebra"},
      {"double:algebra", "the dimension identity with the degree-1 count given by the Yetter-Drinfeld pairs"},
      {"hit:left", "left hit action f -> h = <f, h_2> h_1"},
      {"hit:right", "right hit action h <- f = <f, h_1> h_2"},
  };
  return table;
}

inline const std::string& citation(const std::string& key) {
  const auto& t = axiom_citations();
  const auto it = t.find(key);
  if (it == t.end()) throw Error("no citation for '" + key + "'");
  return it->second;
}

}  // namespace hopfcalc
