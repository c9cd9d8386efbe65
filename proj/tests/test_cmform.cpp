#include <gtest/gtest.h>

#include <cmath>

#include "grossen/cmform.hpp"

using namespace grossen;

namespace {

QIdeal conductor_for(const FieldE& E, long ell) {
  return E.delta() == -3 && ell % 3 != 0 ? rational_ideal(Rat(3)) : minimal_conductor(E).d;
}

Grossenchar minimal_char(long D, long ell = 1) {
  FieldE E(D);
  EtaQuery q;
  q.weight = ell;
  QIdeal m = conductor_for(E, ell);
  return build(E, m, ell, enumerate_eta(E, m, q).at(0));
}

struct Weierstrass {
  long a1, a2, a3, a4, a6;
};

// a_p = p - #{(x, y) in F_p^2 on the affine model}
long trace_of_frobenius(const Weierstrass& c, long p) {
  auto md = [p](long v) { return ((v % p) + p) % p; };
  long count = 0;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) {
      long lhs = md(y * y + c.a1 * x * y + c.a3 * y);
      long rhs = md(md(x * x % p * x) + c.a2 * x % p * x + c.a4 * x + c.a6);
      if (md(lhs - rhs) == 0) ++count;
    }
  return p - count;
}

long rational_coeff(const CMForm& f, long n) {
  double v = f.complex_coeffs[n].re.to_double();
  return std::lround(v);
}

}  // namespace

TEST(IdealsOfNorm, GaussianUpToFive) {
  auto v = ideals_of_norm_up_to(FieldE(-4), 5);
  std::vector<long> norms;
  for (const auto& x : v) norms.push_back(x.norm);
  EXPECT_EQ(norms, (std::vector<long>{1, 2, 4, 5, 5}));
}

TEST(IdealsOfNorm, CountsMatchDivisorSums) {
  // number of ideals of norm n is sum_{d | n} chi_E(d)
  FieldE E(-23);
  auto v = ideals_of_norm_up_to(E, 300);
  std::vector<long> count(301, 0);
  for (const auto& x : v) ++count[x.norm];
  for (long n = 1; n <= 300; ++n) {
    long want = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) want += kronecker(-23, d);
    EXPECT_EQ(count[n], want) << n;
  }
}

// CM elliptic curves: y^2 + y = x^3 (27), y^2 = x^3 - x (32),
// y^2 + xy = x^3 - x^2 - 2x - 1 (49), y^2 + y = x^3 - x^2 - 7x + 10 (121).
TEST(QExpansion, MatchesPointCounts) {
  struct Case {
    long D, N;
    Weierstrass c;
  };
  for (const auto& cs : std::vector<Case>{{-3, 27, {0, 0, 1, 0, 0}},
                                          {-4, 32, {0, 0, 0, -1, 0}},
                                          {-7, 49, {1, -1, 0, -2, -1}},
                                          {-11, 121, {0, -1, 1, -7, 10}}}) {
    FieldE E(cs.D);
    EtaQuery q;
    q.weight = 1;
    ASSERT_EQ(enumerate_eta(E, conductor_for(E, 1), q).size(), 1u) << cs.D;
    CMForm f = q_expansion(minimal_char(cs.D), 400);
    EXPECT_EQ(f.level, cs.N);
    EXPECT_EQ(f.weight, 2);
    for (long p = 2; p <= 400; ++p) {
      if (!is_prime(p) || cs.N % p == 0) continue;
      EXPECT_EQ(rational_coeff(f, p), trace_of_frobenius(cs.c, p)) << cs.D << " p=" << p;
    }
  }
}

TEST(QExpansion, LevelThirtyTwoStart) {
  CMForm f = q_expansion(minimal_char(-4), 10);
  std::vector<long> want = {1, 0, 0, 0, -2, 0, 0, 0, -3, 0};
  for (long n = 1; n <= 10; ++n) EXPECT_EQ(rational_coeff(f, n), want[n - 1]) << n;
}

TEST(QExpansion, InertPrimesVanish) {
  Grossenchar psi = minimal_char(-23);
  CMForm f = q_expansion(psi, 300);
  for (long p = 3; p <= 300; ++p)
    if (is_prime(p) && kronecker(-23, p) == -1) EXPECT_TRUE(f.coeffs[p].is_zero()) << p;
}

TEST(Hecke, PassesOnGenuineForms) {
  for (long D : {-3L, -4L, -7L, -23L, -47L}) {
    for (long ell : {1L, 3L}) {
      HeckeReport r = hecke_verify(q_expansion(minimal_char(D, ell), 600));
      EXPECT_TRUE(r.ok) << D << " ell=" << ell << ": " << r.failure;
      EXPECT_TRUE(r.real);
      EXPECT_LT(r.max_imag, 1e-9);
    }
  }
}

TEST(Hecke, CorruptedSixIsCaughtAtTwoThree) {
  CMForm f = q_expansion(minimal_char(-23), 100);
  const ValueAlgebra& A = f.psi->algebra();
  f.coeffs[6] = A.add(f.coeffs[6], A.one());
  f.complex_coeffs[6] = A.embed(f.coeffs[6]);
  HeckeReport r = hecke_verify(f);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.w1, 2);
  EXPECT_EQ(r.w2, 3);
}

// B = 12 leaves no coprime pair through 9, so the prime-power recursion at 3
// has to catch it.
TEST(Hecke, CorruptedNineIsCaught) {
  CMForm f = q_expansion(minimal_char(-4), 12);
  const ValueAlgebra& A = f.psi->algebra();
  f.coeffs[9] = A.add(f.coeffs[9], A.one());
  f.complex_coeffs[9] = A.embed(f.coeffs[9]);
  HeckeReport r = hecke_verify(f);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.w1, 3);
}

TEST(Probe, CoefficientFieldDegree) {
  EXPECT_EQ(coefficient_field_probe(q_expansion(minimal_char(-7), 200)).degree, 1);
  EXPECT_EQ(coefficient_field_probe(q_expansion(minimal_char(-23), 200)).degree, 3);
  EXPECT_THROW(coefficient_field_probe(q_expansion(minimal_char(-7), 50)), std::invalid_argument);
}
