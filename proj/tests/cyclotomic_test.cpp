#include "hopfcalc/cyclotomic.hpp"

#include <random>

#include <gtest/gtest.h>

using namespace hopfcalc;

namespace {

CycNumber z(int n, long long k = 1) { return root_of_unity(n, k); }

}  // namespace

TEST(Cyclotomic, AddExamples) {
  EXPECT_EQ(CycNumber(Rational(1, 2)) + CycNumber(Rational(1, 2)), CycNumber(1));
  EXPECT_EQ(z(3) + z(3, 2), CycNumber(-1));
  EXPECT_EQ(z(4) + CycNumber(0), z(4));
}

TEST(Cyclotomic, MulAndInverseExamples) {
  EXPECT_EQ(z(4) * z(4), CycNumber(-1));
  EXPECT_EQ(CycNumber(2).inverse(), CycNumber(Rational(1, 2)));
  EXPECT_EQ(z(3) * z(3, 2), CycNumber(1));
  EXPECT_THROW(CycNumber(0).inverse(), DivisionByZero);
}

TEST(Cyclotomic, RootOfUnityExamples) {
  EXPECT_EQ(root_of_unity(1, 0), CycNumber(1));
  EXPECT_EQ(root_of_unity(2, 1), CycNumber(-1));
  EXPECT_EQ(root_of_unity(4, 2), CycNumber(-1));
  EXPECT_EQ(root_of_unity(6, 3), CycNumber(-1));
}

TEST(Cyclotomic, SixthRootIdentityFromSquaring) {
  // zeta_6 = -zeta_3^2: both sides square to zeta_3.
  EXPECT_EQ(z(6), -z(3, 2));
  EXPECT_EQ(z(6) * z(6), z(3));
  EXPECT_EQ(z(6).conductor(), 3);
}

TEST(Cyclotomic, ConjugateExamples) {
  EXPECT_EQ(z(4).conjugate(), -z(4));
  EXPECT_EQ(CycNumber(Rational(3, 7)).conjugate(), CycNumber(Rational(3, 7)));
  EXPECT_EQ(z(3).conjugate(), z(3, 2));
}

TEST(Cyclotomic, CanonicalConductorIsMinimal) {
  // zeta_8 + zeta_8^{-1} = sqrt(2) lives in Q(zeta_8) but i = zeta_8^2 drops to 4.
  EXPECT_EQ(z(8, 2).conductor(), 4);
  EXPECT_EQ((z(12) * z(12, 3)).conductor(), 3);
  EXPECT_EQ((z(24, 8) + z(24, 16)), CycNumber(-1));
  EXPECT_EQ(z(26).conductor(), 13);
  EXPECT_THROW(z(5) * z(8), ConductorTooLarge);
}

TEST(Cyclotomic, RootsOfUnityHaveExpectedOrder) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(z(n, k).pow(n), CycNumber(1)) << n << " " << k;
      EXPECT_EQ(z(n, k).root_order(), n / std::gcd(n, k == 0 ? n : k));
    }
  EXPECT_EQ(CycNumber(2).root_order(), 0);
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(12345);
  const int conductors[] = {1, 3, 4, 5, 8, 12};
  auto random_value = [&](int n) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (auto& q : c) q = Rational(Integer(num(rng)), Integer(den(rng)));
    return CycNumber::from_powers(n, c);
  };
  for (int trial = 0; trial < 60; ++trial) {
    int n = conductors[trial % 6];
    int m = conductors[(trial / 6) % 6];
    if (std::lcm(n, m) > kMaxConductor) continue;
    CycNumber a = random_value(n), b = random_value(m), c = random_value(n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycNumber(1));
    EXPECT_EQ(a.conjugate().conjugate(), a);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ(a - a, CycNumber(0));
  }
}

TEST(Cyclotomic, StringForms) {
  EXPECT_EQ(CycNumber(Rational(-3, 4)).to_string(), "-3/4");
  EXPECT_EQ(z(4).to_string(), "z4");
  EXPECT_EQ((CycNumber(1) - z(4, 1) * CycNumber(2)).to_string(), "1 - 2*z4");
  EXPECT_EQ(parse_rational("6/-4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/x"), ParseError);
}
