#include <gtest/gtest.h>

#include <algorithm>

#include "grossen/quadfield.hpp"

using namespace grossen;

TEST(Fundamental, SmallDiscriminants) {
  for (long d : {-3, -4, -7, -8, -15, -20, -24, -5460}) EXPECT_TRUE(is_fundamental(d)) << d;
  for (long d : {-12, -16, -27, -28, -32, -36, -1, -2}) EXPECT_FALSE(is_fundamental(d)) << d;
  EXPECT_THROW(FieldE(-12), std::invalid_argument);
  EXPECT_THROW(FieldE(5), std::invalid_argument);
}

TEST(FieldArithmetic, NormTraceConjugate) {
  FieldE E(-23);
  QuadElem a(3, 2), b(-1, 5);
  EXPECT_EQ(E.norm(E.mul(a, b)), E.norm(a) * E.norm(b));
  EXPECT_EQ(E.trace(a + b), E.trace(a) + E.trace(b));
  EXPECT_EQ(E.mul(a, E.inv(a)), QuadElem(1));
  EXPECT_EQ(E.mul(a, E.conj(a)), QuadElem(E.norm(a), 0));
  // omega = (delta + sqrt delta)/2 has trace delta and norm (delta^2 - delta)/4
  EXPECT_EQ(E.trace(E.omega()), Rat(-23));
  EXPECT_EQ(E.norm(E.omega()), Rat((23 * 23 + 23) / 4));
  Complex w = E.embed(E.omega());
  EXPECT_NEAR(w.re.to_double(), -11.5, 1e-12);
  EXPECT_NEAR(w.im.to_double() * w.im.to_double(), 23.0 / 4, 1e-9);
}

TEST(FieldArithmetic, RootsOfUnity) {
  EXPECT_EQ(FieldE(-3).unit_count(), 6);
  EXPECT_EQ(FieldE(-4).unit_count(), 4);
  EXPECT_EQ(FieldE(-7).unit_count(), 2);
  FieldE E(-3);
  auto mu = E.roots_of_unity();
  for (long k = 0; k < 6; ++k) EXPECT_EQ(E.pow(mu[k], 6), QuadElem(1));
  EXPECT_EQ(E.pow(mu[1], 3), QuadElem(-1));
}

TEST(PrimeSplitting, GaussianIntegers) {
  FieldE E(-4);
  EXPECT_EQ(factor_prime(E, 2).kind, Splitting::Ramified);
  EXPECT_EQ(factor_prime(E, 3).kind, Splitting::Inert);
  EXPECT_EQ(factor_prime(E, 5).kind, Splitting::Split);
  auto five = factor_prime(E, 5).primes;
  ASSERT_EQ(five.size(), 2u);
  EXPECT_EQ(five[0].norm(), Rat(5));
  EXPECT_EQ(ideal_mul(E, five[0], five[1]), rational_ideal(Rat(5)));
  EXPECT_EQ(ideal_conj(E, five[0]), five[1]);
  EXPECT_EQ(factor_prime(E, 3).primes[0].norm(), Rat(9));
  auto two = factor_prime(E, 2).primes[0];
  EXPECT_EQ(ideal_pow(E, two, 2), rational_ideal(Rat(2)));
}

TEST(PrimeSplitting, KroneckerMatchesSplitting) {
  for (long D : {-7L, -15L, -20L, -23L, -24L}) {
    FieldE E(D);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      auto st = factor_prime(E, p);
      int k = kronecker(D, p);
      Splitting want = k == 1 ? Splitting::Split : k == -1 ? Splitting::Inert : Splitting::Ramified;
      EXPECT_EQ(st.kind, want) << D << " " << p;
    }
  }
}

TEST(Ideals, InverseQuotientFactor) {
  FieldE E(-23);
  QIdeal P = factor_prime(E, 2).primes[0];
  QIdeal Q = factor_prime(E, 3).primes[1];
  QIdeal I = ideal_mul(E, ideal_pow(E, P, 3), Q);
  EXPECT_EQ(I.norm(), Rat(24));
  EXPECT_TRUE(ideal_mul(E, I, ideal_inv(E, I)).is_unit());
  EXPECT_EQ(ideal_div(E, I, Q), ideal_pow(E, P, 3));
  EXPECT_TRUE(ideal_divides(E, P, I));
  EXPECT_FALSE(ideals_coprime(E, P, I));
  auto f = factor_ideal(E, I);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, P);
  EXPECT_EQ(f[0].second, 3);
  EXPECT_EQ(f[1].first, Q);
}

TEST(Ideals, PrincipalityInClassNumberThree) {
  FieldE E(-23);
  QIdeal P = factor_prime(E, 2).primes[0];
  EXPECT_FALSE(is_principal(E, P));
  EXPECT_FALSE(is_principal(E, ideal_pow(E, P, 2)));
  auto g = is_principal(E, ideal_pow(E, P, 3));
  ASSERT_TRUE(g);
  EXPECT_EQ(E.norm(*g), Rat(8));
  EXPECT_EQ(principal_ideal(E, *g), ideal_pow(E, P, 3));
}

TEST(Powers, SquaresAndCubes) {
  FieldE E(-4);
  auto r = is_square_in_E(E, QuadElem(-1));
  ASSERT_TRUE(r);
  EXPECT_EQ(E.mul(*r, *r), QuadElem(-1));
  EXPECT_FALSE(is_square_in_E(E, QuadElem(2)));
  EXPECT_TRUE(is_square_in_E(E, QuadElem(-4)));
  FieldE F(-7);
  QuadElem z(2, 1);
  auto c = is_cube_in_E(F, F.pow(z, 3));
  ASSERT_TRUE(c);
  EXPECT_EQ(F.pow(*c, 3), F.pow(z, 3));
  EXPECT_FALSE(is_cube_in_E(F, QuadElem(2)));
}

TEST(Forms, CompositionGroupLaw) {
  const long D = -23;
  auto forms = reduced_forms(D);
  ASSERT_EQ(forms.size(), 3u);
  Form e = principal_form(D);
  for (const auto& f : forms) {
    EXPECT_EQ(form_discriminant(f), D);
    EXPECT_EQ(reduce_form(compose_forms(f, inverse_form(f))), e);
    EXPECT_EQ(reduce_form(compose_forms(f, e)), f);
  }
  Form g = forms[1];
  EXPECT_EQ(reduce_form(compose_forms(g, compose_forms(g, g))), e);
}

TEST(Forms, IdealCorrespondence) {
  FieldE E(-84);
  for (const auto& f : reduced_forms(-84)) EXPECT_EQ(form_of_ideal(E, ideal_of_form(E, f)), f);
}

// Heegner: exactly nine imaginary quadratic fields of class number one.
TEST(ClassNumber, ClassNumberOne) {
  std::vector<long> h1;
  for (long D : enumerate_discriminants(200))
    if (class_number(D) == 1) h1.push_back(D);
  std::sort(h1.begin(), h1.end(), [](long a, long b) { return a > b; });
  EXPECT_EQ(h1, (std::vector<long>{-3, -4, -7, -8, -11, -19, -43, -67, -163}));
}

TEST(ClassNumber, ClassNumberTwo) {
  std::vector<long> h2;
  for (long D : enumerate_discriminants(500))
    if (class_number(D) == 2) h2.push_back(D);
  std::sort(h2.begin(), h2.end(), [](long a, long b) { return a > b; });
  EXPECT_EQ(h2, (std::vector<long>{-15, -20, -24, -35, -40, -51, -52, -88, -91, -115, -123, -148, -187, -232, -235,
                                   -267, -403, -427}));
}

TEST(ClassGroup, Structures) {
  struct Case {
    long D;
    std::vector<long> orders;
  };
  for (const auto& c : std::vector<Case>{{-23, {3}},
                                         {-47, {5}},
                                         {-71, {7}},
                                         {-56, {4}},
                                         {-84, {2, 2}},
                                         {-420, {2, 2, 2}},
                                         {-5460, {2, 2, 2, 2}},
                                         {-4027, {3, 3}}}) {
    FieldE E(c.D);
    ClassGroup G = class_group(E);
    EXPECT_EQ(G.orders, c.orders) << c.D;
    long h = 1;
    for (long o : c.orders) h *= o;
    EXPECT_EQ(G.h, h);
    EXPECT_EQ(class_group_relations(c.D).order, Int(h));
    for (std::size_t i = 0; i < G.gens.size(); ++i) {
      EXPECT_EQ(ideal_pow(E, G.gens[i], G.orders[i]), principal_ideal(E, G.thetas[i])) << c.D;
      EXPECT_FALSE(is_principal(E, G.gens[i]));
    }
  }
}

TEST(ClassGroup, DlogIsAHomomorphism) {
  FieldE E(-420);
  ClassGroup G = class_group(E);
  auto P = factor_prime(E, 11).primes[0];
  auto Q = factor_prime(E, 13).primes[0];
  auto a = class_dlog(E, P, G), b = class_dlog(E, Q, G), ab = class_dlog(E, ideal_mul(E, P, Q), G);
  for (std::size_t i = 0; i < G.orders.size(); ++i) EXPECT_EQ(ab[i], (a[i] + b[i]) % G.orders[i]);
  auto th = class_dlog(E, principal_ideal(E, QuadElem(3, 7)), G);
  for (long e : th) EXPECT_EQ(e, 0);
}

TEST(ClassGroup, GeneratorsAvoidModulus) {
  FieldE E(-23);
  QIdeal m = rational_ideal(Rat(6));
  ClassGroup G = class_group(E, m);
  for (const auto& t : G.gens) EXPECT_TRUE(ideals_coprime(E, t, m));
}

TEST(Enumeration, ExponentLists) {
  EXPECT_EQ(enumerate_discriminants(5460, 2).size(), 56u);
  EXPECT_EQ(enumerate_discriminants(5460, 3).size(), 17u);
  EXPECT_EQ(class_group_exponent(-5460), 2);
  EXPECT_EQ(class_group_exponent(-4027), 3);
}
