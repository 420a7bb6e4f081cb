#include "hopfcalc/builtins.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/twist.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hopfcalc;

namespace {

const Rational kHalf(1, 2);

Vec vec(std::initializer_list<std::pair<int, CycNumber>> terms) {
  Vec v;
  for (const auto& [k, c] : terms) add_term(v, k, c);
  return v;
}

// H_8 basis indices
constexpr int kOne = 0, kX = 1, kY = 2, kXY = 3, kZ = 4, kXZ = 5, kYZ = 6, kXYZ = 7;

Vec h8_power(const HopfData& h, int i, int n) {
  Vec p = h.unit;
  for (int k = 0; k < n; ++k) p = h.multiply(p, basis_vector(i));
  return p;
}

AltBicharacter bichar(const FiniteGroup& g, const Subgroup& a, std::vector<std::vector<int>> exps) {
  return AltBicharacter::from_exponents(character_group(g, a).basis.structure, std::move(exps));
}

}  // namespace

TEST(Hopf, GroupAlgebrasAndDuals) {
  for (const char* name : {"Z2", "S3", "D4", "Q8", "G12"}) {
    const HopfData h = from_group(builtin_group(name));
    const auto r = verify_hopf_axioms(h);
    EXPECT_TRUE(r.passed()) << name << " " << r.first_failure();
    EXPECT_TRUE(r.s_squared_identity) << name;
    EXPECT_TRUE(is_cocommutative(h));
    const HopfData d = dual(h);
    EXPECT_TRUE(verify_hopf_axioms(d).passed()) << name;
    EXPECT_TRUE(is_commutative(d));
    EXPECT_EQ(dual(d), h) << name;
  }
  const HopfData z2 = from_group(build_cyclic(2));
  EXPECT_EQ(z2.dim, 2);
  EXPECT_TRUE(is_commutative(z2));
}

TEST(Hopf, H8Axioms) {
  const HopfData h = build_h8();
  const auto r = verify_hopf_axioms(h);
  EXPECT_TRUE(r.passed()) << r.first_failure();
  EXPECT_TRUE(r.s_squared_identity);
  EXPECT_EQ(r.checks.size(), 8u);
  EXPECT_TRUE(verify_hopf_axioms(dual(h)).passed());
}

TEST(Hopf, H8Presentation) {
  const HopfData h = build_h8();
  const Vec w = vec({{kOne, kHalf}, {kX, kHalf}, {kY, kHalf}, {kXY, -CycNumber(kHalf)}});
  EXPECT_EQ(h8_power(h, kX, 2), h.unit);
  EXPECT_EQ(h8_power(h, kY, 2), h.unit);
  EXPECT_EQ(h.product(kX, kY), h.product(kY, kX));
  EXPECT_EQ(h.product(kZ, kX), h.product(kY, kZ));
  EXPECT_EQ(h.product(kZ, kY), h.product(kX, kZ));
  EXPECT_EQ(h8_power(h, kZ, 2), w);
  EXPECT_EQ(h8_power(h, kZ, 4), h.unit);
  EXPECT_NE(h.product(kZ, kX), h.product(kX, kZ));
  EXPECT_FALSE(is_commutative(h));
  EXPECT_FALSE(is_cocommutative(h));
  // Delta(z) = ((1 + y) (x) 1 + (1 - y) (x) x)(z (x) z)/2, expanded by hand
  const Tensor2 dz{{{kZ, kZ}, CycNumber(kHalf)},
                   {{kYZ, kZ}, CycNumber(kHalf)},
                   {{kZ, kXZ}, CycNumber(kHalf)},
                   {{kYZ, kXZ}, -CycNumber(kHalf)}};
  EXPECT_EQ(h.comult[kZ], dz);
  EXPECT_EQ(h.counit_of(basis_vector(kZ)), CycNumber(1));
  for (int i = 0; i < 8; ++i) EXPECT_EQ(h.product(i, kXYZ), h.multiply(basis_vector(i), h.product(kXY, kZ)));
}

TEST(Hopf, H8AntipodeIsZ) {
  const HopfData h = build_h8();
  EXPECT_EQ(h.antipode[kZ], basis_vector(kZ));
  // S(z) = z^-1 = z^3 breaks the antipode axiom for this coproduct
  HopfData bad = h;
  const Vec z3 = h8_power(h, kZ, 3);
  for (int g = 0; g < 4; ++g)
    bad.antipode[static_cast<std::size_t>(g + 4)] = h.multiply(z3, bad.antipode[static_cast<std::size_t>(g)]);
  const auto r = verify_hopf_axioms(bad);
  EXPECT_FALSE(r.check("antipode").passed);
  EXPECT_EQ(r.check("antipode").detail, "(z)");
}

TEST(Hopf, BrokenComultiplicationDetected) {
  HopfData h = build_h8();
  h.comult[kZ] = Tensor2{{{kZ, kZ}, CycNumber(1)}};
  const auto r = verify_hopf_axioms(h);
  EXPECT_FALSE(r.check("comultiplication-multiplicative").passed);
  EXPECT_TRUE(r.check("associativity").passed);
}

TEST(Hopf, ShapeErrors) {
  HopfData h = build_h8();
  h.counit.pop_back();
  EXPECT_THROW(verify_hopf_axioms(h), InvalidHopfData);
}

TEST(Characters, H8) {
  const HopfData h = build_h8();
  const auto chars = algebra_characters(h, {kX, kY, kZ});
  ASSERT_EQ(chars.size(), 4u);
  const CycNumber i = root_of_unity(4, 1);
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& eta : chars) {
    EXPECT_EQ(eta[kX], eta[kY]);
    const CycNumber ex = eta[kX];
    ASSERT_TRUE(ex == CycNumber(1) || ex == CycNumber(-1));
    if (ex == CycNumber(1))
      EXPECT_TRUE(eta[kZ] == CycNumber(1) || eta[kZ] == CycNumber(-1));
    else
      EXPECT_TRUE(eta[kZ] == i || eta[kZ] == -i);
    seen.emplace(ex.to_string(), eta[kZ].to_string());
  }
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(algebra_characters(h), chars);
  EXPECT_THROW(algebra_characters(h, {kX, kY}), GeneratorsDoNotSpan);
}

TEST(Characters, SmallAlgebras) {
  EXPECT_EQ(algebra_characters(from_group(build_symmetric(3))).size(), 2u);
  EXPECT_EQ(algebra_characters(from_group(build_dihedral(4))).size(), 4u);
  EXPECT_EQ(algebra_characters(from_group(build_cyclic(3))).size(), 3u);
  EXPECT_EQ(algebra_characters(dual(from_group(build_cyclic(2)))).size(), 2u);
}

TEST(Characters, OutsideField) {
  // k[Z_5]: the generator's minimal polynomial has primitive fifth roots
  EXPECT_THROW(algebra_characters(from_group(build_cyclic(5)), {1}), CandidateOutsideField);
}

TEST(GroupLikes, Basics) {
  const HopfData h = build_h8();
  const auto g = group_like_elements(h);
  ASSERT_EQ(g.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_EQ(g[static_cast<std::size_t>(k)], basis_vector(k));
  const auto c = central_group_likes(h);
  EXPECT_EQ(c, (std::vector<Vec>{basis_vector(kOne), basis_vector(kXY)}));

  const FiniteGroup s3 = build_symmetric(3);
  const auto gs = group_like_elements(from_group(s3));
  ASSERT_EQ(gs.size(), 6u);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(gs[static_cast<std::size_t>(k)], basis_vector(k));
  EXPECT_EQ(group_like_elements(dual(from_group(s3))).size(), 2u);

  const FiniteGroup d4 = build_dihedral(4);
  const auto cz = central_group_likes(from_group(d4));
  std::vector<Vec> expected;
  for (int z : center(d4)) expected.push_back(basis_vector(z));
  EXPECT_EQ(cz, expected);
}

TEST(GroupLikes, OrderDividesDimension) {
  std::vector<HopfData> algebras{build_h8(), dual(build_h8())};
  for (const char* name : {"S3", "D4", "Q8"}) {
    algebras.push_back(from_group(builtin_group(name)));
    algebras.push_back(dual(from_group(builtin_group(name))));
  }
  for (const auto& h : algebras) {
    const auto r = verify_hopf_axioms(h);
    ASSERT_TRUE(r.passed() && r.s_squared_identity);
    EXPECT_EQ(h.dim % static_cast<int>(group_like_elements(h).size()), 0);
  }
}

TEST(Hit, H8MatchesClosedForm) {
  const HopfData h = build_h8();
  const Vec z = basis_vector(kZ);
  for (const auto& eta : algebra_characters(h, {kX, kY, kZ})) {
    // (1 + y + eta(x)(1 - y)) eta(z) z / 2
    const CycNumber ex = eta[kX], ez = eta[kZ];
    const Vec factor = vec({{kOne, (CycNumber(1) + ex) * kHalf}, {kY, (CycNumber(1) - ex) * kHalf}});
    EXPECT_EQ(hit_left(eta, z, h), scaled(h.multiply(factor, z), ez));
    // (eta(1 + y) 1 + eta(1 - y) x) eta(z) z / 2
    const Vec factor_r = vec({{kOne, (CycNumber(1) + eta[kY]) * kHalf}, {kX, (CycNumber(1) - eta[kY]) * kHalf}});
    EXPECT_EQ(hit_right(z, eta, h), scaled(h.multiply(factor_r, z), ez));
    if (ex == CycNumber(-1)) EXPECT_EQ(hit_left(eta, z, h), scaled(basis_vector(kYZ), ez));
  }
}

TEST(Hit, Identities) {
  for (const HopfData& h : {build_h8(), from_group(build_symmetric(3)), dual(from_group(build_dihedral(4)))}) {
    const auto chars = algebra_characters(h);
    const auto eps_it = std::find_if(chars.begin(), chars.end(), [&](const auto& c) { return c.values == h.counit; });
    ASSERT_NE(eps_it, chars.end());
    const auto& eps = *eps_it;
    for (int k = 0; k < h.dim; ++k) {
      const Vec e = basis_vector(k);
      EXPECT_EQ(hit_left(eps, e, h), e);
      EXPECT_EQ(hit_right(e, eps, h), e);
      for (const auto& a : chars)
        for (const auto& b : chars) {
          EXPECT_EQ(hit_left(a, hit_left(b, e, h), h), hit_left(convolve(h, a, b), e, h));
          EXPECT_EQ(hit_right(hit_right(e, a, h), b, h), hit_right(e, convolve(h, a, b), h));
        }
    }
  }
  const FiniteGroup s3 = build_symmetric(3);
  const HopfData ks3 = from_group(s3);
  for (const auto& eta : algebra_characters(ks3))
    for (int g = 0; g < 6; ++g) EXPECT_EQ(hit_left(eta, basis_vector(g), ks3), scaled(basis_vector(g), eta[g]));
}

TEST(YetterDrinfeld, H8) {
  const HopfData h = build_h8();
  const auto r = yd_one_dim_pairs(h);
  ASSERT_EQ(r.pairs.size(), 8u);
  EXPECT_EQ(r.structure, "Z2 x Z2 x Z2");
  for (int a = 0; a < r.group.order(); ++a) EXPECT_LE(r.group.element_order(a), 2);
  // characters by (eta(x), eta(z)): epsilon = (1,1), central = (1,-1), non-central = (-1, +-i)
  auto char_index = [&](const CycNumber& x, const CycNumber& z) {
    for (std::size_t i = 0; i < r.characters.size(); ++i)
      if (r.characters[i][kX] == x && r.characters[i][kZ] == z) return static_cast<int>(i);
    return -1;
  };
  const int eps = char_index(1, 1), ab = char_index(1, -1), alpha = char_index(-1, root_of_unity(4, 1));
  auto pair_index = [&](int g, int e) {
    const auto it = std::find(r.pairs.begin(), r.pairs.end(), YDPair{g, e});
    return it == r.pairs.end() ? -1 : static_cast<int>(it - r.pairs.begin());
  };
  const int p1 = pair_index(kXY, eps), p2 = pair_index(kOne, ab), p3 = pair_index(kX, alpha);
  ASSERT_GE(p1, 0);
  ASSERT_GE(p2, 0);
  ASSERT_GE(p3, 0);
  EXPECT_EQ(generated_subgroup(r.group, {p1, p2, p3}).size(), 8u);
  // g in {x, y} pairs only with non-central characters; g in {1, xy} only with central ones
  for (const auto& p : r.pairs) {
    const bool g_central = p.g == kOne || p.g == kXY;
    const bool eta_central = r.characters[static_cast<std::size_t>(p.eta)][kX] == CycNumber(1);
    EXPECT_EQ(g_central, eta_central);
  }
}

TEST(YetterDrinfeld, GroupAlgebras) {
  const FiniteGroup s3 = build_symmetric(3);
  const auto r = yd_one_dim_pairs(from_group(s3));
  ASSERT_EQ(r.pairs.size(), 2u);
  for (const auto& p : r.pairs) EXPECT_EQ(r.group_likes[static_cast<std::size_t>(p.g)], basis_vector(s3.identity()));
  for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3", "D4", "Q8", "G12", "Z3xZ3"}) {
    const FiniteGroup g = builtin_group(name);
    const auto y = yd_one_dim_pairs(from_group(g));
    EXPECT_EQ(y.pairs.size(), center(g).size() * static_cast<std::size_t>(abelianization(g).order())) << name;
    EXPECT_EQ(drinfeld_double_group_type(g).multiplicity(1), static_cast<int>(y.pairs.size())) << name;
  }
  const FiniteGroup z4 = build_cyclic(4);
  EXPECT_EQ(yd_one_dim_pairs(from_group(z4)).pairs.size(), 16u);
}

TEST(Double, Types) {
  const FiniteGroup s3 = build_symmetric(3);
  EXPECT_EQ(oracle::double_type(s3).to_string(), "1,2;2,4;3,2");
  EXPECT_EQ(drinfeld_double_group_type(s3), oracle::double_type(s3));
  EXPECT_EQ(drinfeld_double_group_type(build_dihedral(4)).to_string(), "1,8;2,14");
  EXPECT_EQ(drinfeld_double_group_type(build_quaternion()).to_string(), "1,8;2,14");
  EXPECT_EQ(drinfeld_double_group_type(build_cyclic(2)).to_string(), "1,4");
  for (const char* name : {"Z2", "S3", "D4", "Q8", "G12", "G18", "GD18", "Z3xZ3"}) {
    const FiniteGroup g = builtin_group(name);
    const auto t = drinfeld_double_group_type(g);
    EXPECT_EQ(t, oracle::double_type(g)) << name;
    EXPECT_EQ(t.dimension(), g.order() * g.order()) << name;
  }
}

TEST(Twist, Trivial) {
  const FiniteGroup g = build_g12();
  const HopfData h = from_group(g);
  const Subgroup gamma = named_subgroup("G12", g, "Gamma");
  const auto phi = build_lifted_twist(g, gamma, AltBicharacter::trivial(character_group(g, gamma).basis.structure));
  EXPECT_EQ(phi.value, h.unit_tensor());
  EXPECT_EQ(phi.inverse, h.unit_tensor());
  EXPECT_TRUE(verify_twist(h, phi).passed());
  EXPECT_EQ(twist_hopf(h, phi), h);
  EXPECT_TRUE(is_cocommutative(twist_hopf(h, phi)));
  EXPECT_EQ(surviving_group_likes(g, phi).size(), 12u);
  EXPECT_EQ(twist_hopf(h, trivial_twist(h)), h);
}

TEST(Twist, G12) {
  const FiniteGroup g = build_g12();
  const HopfData h = from_group(g);
  const Subgroup gamma = named_subgroup("G12", g, "Gamma");
  const auto b = bichar(g, gamma, {{0, 1}, {1, 0}});
  ASSERT_TRUE(b.is_nondegenerate());
  const auto phi = build_lifted_twist(g, gamma, b);
  const auto tv = verify_twist(h, phi);
  EXPECT_TRUE(tv.passed()) << tv.first_failure();
  const HopfData t = twist_hopf(h, phi);
  const auto r = verify_hopf_axioms(t);
  EXPECT_TRUE(r.passed()) << r.first_failure();
  EXPECT_TRUE(r.s_squared_identity);
  EXPECT_FALSE(is_cocommutative(t));
  EXPECT_FALSE(is_commutative(t));
  EXPECT_EQ(t.mult, h.mult);
  EXPECT_EQ(surviving_group_likes(g, phi), gamma);
  // the full group-like computation agrees on this algebra
  std::vector<Vec> expected;
  for (int x : gamma) expected.push_back(basis_vector(x));
  EXPECT_EQ(group_like_elements(t), expected);
  EXPECT_EQ(central_group_likes(t), (std::vector<Vec>{basis_vector(0), basis_vector(9)}));
}

TEST(Twist, G18Criterion) {
  const FiniteGroup g = build_g18();
  const Subgroup gamma = named_subgroup("G18", g, "Gamma");
  const auto omega = bichar(g, gamma, {{0, 1}, {2, 0}});
  EXPECT_FALSE(cocommutativity_criterion(g, gamma, omega));
  const HopfData t = twist_hopf(from_group(g), build_lifted_twist(g, gamma, omega));
  EXPECT_FALSE(is_cocommutative(t));
  EXPECT_TRUE(cocommutativity_criterion(g, gamma, AltBicharacter::trivial(omega.structure())));
}

TEST(Twist, D3xD3) {
  const FiniteGroup g = builtin_group("D3xD3");
  const Subgroup klein = named_subgroup("D3xD3", g, "Klein");
  const auto b = bichar(g, klein, {{0, 1}, {1, 0}});
  const auto phi = build_lifted_twist(g, klein, b);
  const HopfData h = from_group(g);
  EXPECT_TRUE(verify_twist(h, phi).passed());
  const HopfData t = twist_hopf(h, phi);
  EXPECT_EQ(t.dim, 36);
  EXPECT_TRUE(verify_hopf_axioms(t).passed());
  EXPECT_FALSE(is_cocommutative(t));
  EXPECT_EQ(surviving_group_likes(g, phi).size(), 4u);
}

TEST(Twist, BrokenCocycleDetected) {
  const FiniteGroup g = build_g12();
  const HopfData h = from_group(g);
  const Subgroup gamma = named_subgroup("G12", g, "Gamma");
  const auto chars = character_group(g, gamma);
  // omega(x, y) = -1 only at x = y = e_1 is normalized but not a 2-cocycle
  TwistElement phi;
  const int n = chars.order();
  for (int sign : {1, -1}) {
    Tensor2& out = sign == 1 ? phi.value : phi.inverse;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        CycNumber c;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const CycNumber w = (x == 1 && y == 1) ? CycNumber(-1) : CycNumber(1);
            c += w * chars.value(x, chars.basis.element_at[static_cast<std::size_t>(p)]) *
                 chars.value(y, chars.basis.element_at[static_cast<std::size_t>(q)]);
          }
        add_term(out, {chars.basis.element_at[static_cast<std::size_t>(p)], chars.basis.element_at[static_cast<std::size_t>(q)]},
                 c * CycNumber(Rational(1, n * n)));
      }
  }
  const auto r = verify_twist(h, phi);
  EXPECT_TRUE(r.check("normalization").passed);
  EXPECT_TRUE(r.check("invertibility").passed);
  EXPECT_FALSE(r.check("cocycle").passed);
  EXPECT_THROW(twist_hopf(h, phi), TwistInvalid);
  EXPECT_THROW(surviving_group_likes(g, phi), TwistInvalid);
}

TEST(Twist, Errors) {
  const FiniteGroup s3 = build_symmetric(3);
  const FiniteGroup g12 = build_g12();
  const Subgroup gamma = named_subgroup("G12", g12, "Gamma");
  const auto b = bichar(g12, gamma, {{0, 1}, {1, 0}});
  EXPECT_THROW(build_lifted_twist(s3, all_elements(s3), b), NotAbelianSubgroup);
  EXPECT_THROW(cocommutativity_criterion(g12, gamma, b), NotNormal);
  const FiniteGroup g18 = build_g18();
  EXPECT_THROW(build_lifted_twist(g18, named_subgroup("G18", g18, "Gamma"), b), InvalidBicharacter);
}

TEST(Twist, CentralSurvivors) {
  // center elements centralizing A pointwise always survive
  struct Case {
    FiniteGroup g;
    Subgroup a;
    std::vector<std::vector<int>> b;
  };
  const FiniteGroup g12 = build_g12();
  const FiniteGroup d4 = build_dihedral(4);
  const FiniteGroup d33 = builtin_group("D3xD3");
  std::vector<Case> cases{{g12, named_subgroup("G12", g12, "Gamma"), {{0, 1}, {1, 0}}},
                          {d4, named_subgroup("D4", d4, "Klein"), {{0, 1}, {1, 0}}},
                          {d33, named_subgroup("D3xD3", d33, "Klein"), {{0, 1}, {1, 0}}}};
  for (const auto& c : cases) {
    const auto phi = build_lifted_twist(c.g, c.a, bichar(c.g, c.a, c.b));
    const auto surv = surviving_group_likes(c.g, phi);
    for (int z : center(c.g)) {
      bool fixes = true;
      for (int x : c.a) fixes = fixes && c.g.mul(z, x) == c.g.mul(x, z);
      if (fixes) EXPECT_TRUE(std::count(surv.begin(), surv.end(), z)) << z;
    }
  }
}

TEST(Twist, CrossValidation) {
  struct Triple {
    std::string name;
    FiniteGroup g;
    Subgroup a;
    std::vector<std::vector<int>> b;
    bool expected;
  };
  const FiniteGroup z22 = builtin_group("Z2xZ2");
  const FiniteGroup d4 = build_dihedral(4);
  const FiniteGroup z33 = builtin_group("Z3xZ3");
  const FiniteGroup g18 = build_g18();
  const FiniteGroup gd18 = build_generalized_dihedral_18();
  const FiniteGroup sw18 = oracle::swap_semidirect_18();
  const FiniteGroup z2cube = build_product(z22, build_cyclic(2));
  const Subgroup first9{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const std::vector<Triple> triples{
      {"Z2xZ2", z22, all_elements(z22), {{0, 1}, {1, 0}}, true},
      {"D4/Klein", d4, named_subgroup("D4", d4, "Klein"), {{0, 1}, {1, 0}}, true},
      {"D4/Klein trivial", d4, named_subgroup("D4", d4, "Klein"), {{0, 0}, {0, 0}}, true},
      {"Z2^3", z2cube, all_elements(z2cube), {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}, true},
      {"Z3xZ3", z33, all_elements(z33), {{0, 1}, {2, 0}}, true},
      {"G18/Omega", g18, first9, {{0, 1}, {2, 0}}, false},
      {"G18/Omega^2", g18, first9, {{0, 2}, {1, 0}}, false},
      {"GD18", gd18, first9, {{0, 1}, {2, 0}}, true},
      {"swap18", sw18, first9, {{0, 1}, {2, 0}}, false},
  };
  for (const auto& t : triples) {
    const auto b = bichar(t.g, t.a, t.b);
    const bool criterion = cocommutativity_criterion(t.g, t.a, b);
    const bool direct = is_cocommutative(twist_hopf(from_group(t.g), build_lifted_twist(t.g, t.a, b)));
    EXPECT_EQ(criterion, direct) << t.name;
    EXPECT_EQ(criterion, t.expected) << t.name;
  }
}
