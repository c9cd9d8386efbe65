#include <gtest/gtest.h>

#include <random>

#include "grossen/acceptance.hpp"
#include "grossen/resunits.hpp"

using namespace grossen;

namespace {

long phi_ideal(const FieldE& E, const QIdeal& m) {
  long out = 1;
  for (const auto& [P, e] : factor_ideal(E, m)) {
    long q = to_long(to_int(P.norm()));
    long v = q - 1;
    for (int i = 1; i < e; ++i) v *= q;
    out *= v;
  }
  return out;
}

std::vector<int> two_exponents(const std::vector<long>& orders, long& odd) {
  std::vector<int> out;
  odd = 1;
  for (long o : orders) {
    int v = 0;
    while (o % 2 == 0) o /= 2, ++v;
    odd *= o;
    if (v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(UnitGroup, OrderFormula) {
  for (long D : {-3L, -4L, -7L, -23L, -40L}) {
    FieldE E(D);
    for (long n : {2L, 3L, 6L, 12L, 25L, 35L}) {
      QIdeal m = rational_ideal(Rat(n));
      UnitsStructure S = units_structure(E, m);
      EXPECT_EQ(S.total_order, phi_ideal(E, m)) << D << " " << n;
      EXPECT_EQ(unit_group_order(E, m), S.total_order);
      long prod = 1;
      for (long o : S.orders()) prod *= o;
      EXPECT_EQ(prod, S.total_order);
    }
  }
}

TEST(UnitGroup, DlogRoundTrip) {
  FieldE E(-23);
  QIdeal m = ideal_mul(E, rational_ideal(Rat(12)), factor_prime(E, 13).primes[0]);
  UnitsStructure S = units_structure(E, m);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-500, 500);
  int tried = 0;
  while (tried < 200) {
    QuadElem z(c(rng), c(rng));
    if (!is_unit_mod(z, S)) continue;
    ++tried;
    auto e = dlog(z, S);
    EXPECT_TRUE(congruent_mod(rebuild(e, S), z, S));
    QuadElem w(c(rng), c(rng));
    if (!is_unit_mod(w, S)) continue;
    auto f = dlog(w, S), g = dlog(E.mul(z, w), S);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g[i], (e[i] + f[i]) % S.factors[i].order);
  }
}

TEST(UnitGroup, GeneratorOrdersAreExact) {
  FieldE E(-20);
  UnitsStructure S = units_structure(E, rational_ideal(Rat(30)));
  ResidueRing R(E, S.m);
  for (const auto& f : S.factors) {
    auto g = R.reduce(f.gen);
    EXPECT_EQ(R.pow(g, f.order), R.one());
    for (long q = 2; q <= f.order; ++q)
      if (f.order % q == 0 && is_prime(q)) EXPECT_NE(R.pow(g, f.order / q), R.one());
  }
}

TEST(UnitGroup, MatchesEnumerationAtOddPrimePowers) {
  for (long D : {-4L, -7L, -15L, -24L}) {
    FieldE E(D);
    for (long p : {3L, 5L, 7L})
      for (int e = 1; e <= 3; ++e) {
        QIdeal m = ideal_pow(E, factor_prime(E, p).primes[0], e);
        if (m.norm() > 20000) continue;
        BruteDyadic b = brute_dyadic_units(E, m);
        long odd = 1;
        auto ex = two_exponents(units_structure(E, m).orders(), odd);
        EXPECT_EQ(ex, b.two_exponents) << D << " p=" << p << " e=" << e;
        EXPECT_EQ(odd, b.odd_order) << D << " p=" << p << " e=" << e;
      }
  }
}

// Ramified dyadic prime with 4 || delta. For Q(i), <i> splits off as a C4
// factor once n >= 7, so there is no C2 factor: (o/p^7)^x = C4^3.
TEST(Dyadic, GaussianSevenIsC4Cubed) {
  FieldE E(-4);
  QIdeal P = factor_prime(E, 2).primes[0];
  QIdeal P7 = ideal_pow(E, P, 7);
  long odd = 1;
  auto ex = two_exponents(units_structure(E, P7).orders(), odd);
  EXPECT_EQ(ex, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(brute_dyadic_units(E, P7).two_exponents, ex);
}

TEST(Dyadic, SmallRamifiedCases) {
  for (long D : {-4L, -20L}) {
    FieldE E(D);
    QIdeal P = factor_prime(E, 2).primes[0];
    long odd = 1;
    // n = 3: cyclic of order 4
    EXPECT_EQ(two_exponents(units_structure(E, ideal_pow(E, P, 3)).orders(), odd), std::vector<int>{2});
    // n = 5: C2^2 x C4
    EXPECT_EQ(two_exponents(units_structure(E, ideal_pow(E, P, 5)).orders(), odd), (std::vector<int>{1, 1, 2}));
  }
}

TEST(Dyadic, InertTwo) {
  FieldE E(-3);
  QIdeal m = rational_ideal(Rat(16));  // (2)^4, inert
  long odd = 1;
  auto ex = two_exponents(units_structure(E, m).orders(), odd);
  EXPECT_EQ(odd, 3);
  EXPECT_EQ(ex, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(brute_dyadic_units(E, m).two_exponents, ex);
}

// -1 mod p^n (4 || delta) stays a square for every n >= 3 exactly when
// delta/4 = 7 mod 8; for delta/4 = 3 mod 8 it stops at n = 5.
TEST(Dyadic, MinusOneSquarePattern) {
  for (long D : {-4L, -20L, -52L, -68L}) {
    FieldE E(D);
    QIdeal P = factor_prime(E, 2).primes[0];
    bool stable = mod_floor(D / 4, 8) == 7;
    for (int n = 3; n <= 9; ++n)
      EXPECT_EQ(brute_is_square(E, ideal_pow(E, P, n), -1), n <= 4 || stable) << D << " n=" << n;
  }
}

// 8 || delta: for n >= 5 none of -1, 3, 5 is a square mod p^n.
TEST(Dyadic, EightDividesDeltaSquares) {
  for (long D : {-8L, -24L, -40L}) {
    FieldE E(D);
    QIdeal P = factor_prime(E, 2).primes[0];
    EXPECT_TRUE(brute_is_square(E, ideal_pow(E, P, 4), 5));
    for (int n = 5; n <= 10; ++n)
      for (long a : {-1L, 3L, 5L}) EXPECT_FALSE(brute_is_square(E, ideal_pow(E, P, n), a)) << D << " " << n << " " << a;
  }
}

TEST(RationalImage, InjectivityThresholds) {
  FieldE E(-20);
  QIdeal P = factor_prime(E, 2).primes[0];
  EXPECT_FALSE(rational_image(units_structure(E, ideal_pow(E, P, 2)), 4).injective);
  EXPECT_TRUE(rational_image(units_structure(E, ideal_pow(E, P, 3)), 4).injective);
  FieldE F(-8);
  QIdeal Q = factor_prime(F, 2).primes[0];
  EXPECT_FALSE(rational_image(units_structure(F, ideal_pow(F, Q, 4)), 8).injective);
  EXPECT_TRUE(rational_image(units_structure(F, ideal_pow(F, Q, 5)), 8).injective);
}

TEST(IntegerUnits, Structure) {
  IntegerUnits U = integer_units(40);
  EXPECT_EQ(U.order(), 16);
  auto d = U.dlog(39);
  long nontrivial = 0;
  for (long e : d) nontrivial += e != 0;
  EXPECT_GT(nontrivial, 0);
}

TEST(TorsionMeet, RootsOfUnityCongruentToOne) {
  // zeta_3 = 1 mod (sqrt -3), so only the trivial root survives from 3 on
  FieldE E(-3);
  EXPECT_EQ(torsion_meet(E, unit_ideal()).size(), 6u);
  EXPECT_EQ(torsion_meet(E, factor_prime(E, 3).primes[0]).size(), 3u);
  EXPECT_EQ(torsion_meet(E, rational_ideal(Rat(3))).size(), 1u);
  FieldE F(-4);
  EXPECT_EQ(torsion_meet(F, factor_prime(F, 2).primes[0]).size(), 4u);
  EXPECT_EQ(torsion_meet(F, rational_ideal(Rat(2))).size(), 2u);
}
