#include <gtest/gtest.h>

#include <random>

#include "grossen/cmform.hpp"
#include "grossen/grossenchar.hpp"

using namespace grossen;

namespace {

Grossenchar first_char(long D, const QIdeal& m, long ell) {
  FieldE E(D);
  EtaQuery q;
  q.weight = ell;
  auto etas = enumerate_eta(E, m, q);
  if (etas.empty()) throw std::runtime_error("no eta");
  return build(E, m, ell, etas[0]);
}

QIdeal conductor_for(const FieldE& E, long ell) {
  return E.delta() == -3 && ell % 3 != 0 ? rational_ideal(Rat(3)) : minimal_conductor(E).d;
}

Grossenchar minimal_char(long D, long ell = 1) { return first_char(D, conductor_for(FieldE(D), ell), ell); }

}  // namespace

// Conductors of the CM elliptic curves over Q, one per class number one field.
TEST(MinimalConductor, CMEllipticCurveLevels) {
  std::vector<std::pair<long, long>> cases = {{-3, 27},   {-4, 32},    {-7, 49},    {-8, 256},   {-11, 121},
                                              {-19, 361}, {-43, 1849}, {-67, 4489}, {-163, 26569}};
  for (auto [D, N] : cases) {
    if (D != -3) EXPECT_EQ(minimal_conductor(FieldE(D)).N, N) << D;
    EXPECT_EQ(minimal_char(D).level(), N) << D;
  }
  // d_E = (sqrt -3) only carries characters with 3 | ell
  EXPECT_EQ(minimal_conductor(FieldE(-3)).N, 9);
  EXPECT_EQ(minimal_char(-3, 3).level(), 9);
}

TEST(Build, PrincipalIdealsGiveEtaTimesPower) {
  for (long ell : {1L, 3L}) {
    Grossenchar psi = minimal_char(-23, ell);
    const FieldE& E = psi.field();
    const ValueAlgebra& A = psi.algebra();
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-30, 30);
    int done = 0;
    while (done < 40) {
      QuadElem a(c(rng), c(rng));
      if (a.is_zero() || !ideals_coprime(E, principal_ideal(E, a), psi.modulus())) continue;
      ++done;
      AlgElem want = A.mul(A.from_quad(E.pow(a, ell)), A.zeta(psi.eta_exponent(a)));
      EXPECT_EQ(psi.evaluate(principal_ideal(E, a)), want);
      EXPECT_EQ(psi.on_principal(a), want);
    }
  }
}

TEST(Build, Multiplicative) {
  Grossenchar psi = minimal_char(-47);
  const FieldE& E = psi.field();
  const ValueAlgebra& A = psi.algebra();
  QIdeal P = factor_prime(E, 2).primes[0], Q = factor_prime(E, 3).primes[1], R = factor_prime(E, 7).primes[0];
  EXPECT_EQ(psi.evaluate(ideal_mul(E, P, Q)), A.mul(psi.evaluate(P), psi.evaluate(Q)));
  EXPECT_EQ(psi.evaluate(ideal_mul(E, ideal_pow(E, P, 3), R)), A.mul(A.pow(psi.evaluate(P), 3), psi.evaluate(R)));
  // psi(a) psi(conj a) = N(a)^ell
  EXPECT_EQ(A.mul(psi.evaluate(P), psi.evaluate(ideal_conj(E, P))), A.from_rational(Rat(2)));
}

TEST(Build, NonCoprimeIdealIsZero) {
  Grossenchar psi = minimal_char(-7);
  QIdeal P7 = factor_prime(psi.field(), 7).primes[0];
  EXPECT_TRUE(psi.evaluate(P7).is_zero());
}

TEST(Build, Errors) {
  FieldE E(-3);
  UnitsStructure S = units_structure(E, unit_ideal());
  EXPECT_THROW(build(E, unit_ideal(), 1, trivial_char(S)), NoGrossencharacter);
  FieldE F(-4);
  QIdeal P = factor_prime(F, 2).primes[0];
  EXPECT_THROW(build(F, P, 1, trivial_char(units_structure(F, P))), NoGrossencharacter);
  // even weight with a trivial-nebentypus request
  QIdeal dE = minimal_conductor(F).d;
  EXPECT_THROW(build(F, dE, 1, trivial_char(units_structure(F, dE))), IncompatibleEta);
}

TEST(Build, AlternateRootsAreDifferentCharacters) {
  FieldE E(-23);
  QIdeal m = minimal_conductor(E).d;
  EtaQuery q;
  q.weight = 1;
  auto eta = enumerate_eta(E, m, q).at(0);
  BuildOptions o0, o1;
  o1.root_choices = {1};
  Grossenchar a = build(E, m, 1, eta, o0), b = build(E, m, 1, eta, o1);
  EXPECT_TRUE(same_character(a, a));
  EXPECT_FALSE(same_character(a, b));
}

TEST(Conductor, ExtendToSmallerModulus) {
  FieldE E(-7);
  QIdeal dE = minimal_conductor(E).d;
  QIdeal big = ideal_mul(E, dE, rational_ideal(Rat(3)));
  Grossenchar small = minimal_char(-7);
  Grossenchar wide = build(E, big, 1, inflate(small.eta(), big));
  EXPECT_EQ(wide.level(), 7 * 7 * 9);
  Grossenchar back = extend_to_conductor(wide, dE);
  EXPECT_TRUE(same_character(back, small));
}

TEST(Twist, CoefficientsPickUpChi) {
  Grossenchar psi = minimal_char(-7);
  DirichletChar chi = kronecker_char(-4);
  Grossenchar tw = twist(psi, chi);
  CMForm f = q_expansion(psi, 200), g = q_expansion(tw, 200);
  for (long p : {3L, 5L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 43L, 53L}) {
    double want = chi.sign(p) * f.complex_coeffs[p].re.to_double();
    EXPECT_NEAR(g.complex_coeffs[p].re.to_double(), want, 1e-20) << p;
  }
  EXPECT_EQ(tw.level(), 49 * 16);
}
