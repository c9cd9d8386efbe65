#include <gtest/gtest.h>

#include <set>

#include "grossen/chargroup.hpp"
#include "grossen/grossenchar.hpp"

using namespace grossen;

TEST(Angle, Normalisation) {
  EXPECT_EQ(Angle(2, 4), Angle(1, 2));
  EXPECT_EQ(Angle(-1, 4), Angle(3, 4));
  EXPECT_EQ(Angle(1, 3) + Angle(2, 3), Angle(0, 1));
  EXPECT_EQ(3 * Angle(1, 6), Angle(1, 2));
  EXPECT_EQ((Angle(5, 12)).order(), 12);
}

TEST(Characters, CountAndGroupLaw) {
  FieldE E(-7);
  UnitsStructure S = units_structure(E, rational_ideal(Rat(6)));
  auto all = all_characters(S);
  ASSERT_EQ(static_cast<long>(all.size()), S.total_order);
  std::set<std::vector<long>> seen;
  for (const auto& c : all) seen.insert(c.exps);
  EXPECT_EQ(seen.size(), all.size());
  ASSERT_EQ(all.size(), 8u);  // 2 splits, 3 is inert: 1 * 8
  const auto& a = all[5];
  const auto& b = all[6];
  QuadElem z(1, 2);  // norm 43
  ASSERT_TRUE(is_unit_mod(z, S));
  EXPECT_EQ(char_mul(a, b)(z), a(z) + b(z));
  EXPECT_TRUE(char_pow(a, a.order()).is_trivial());
  EXPECT_TRUE(same_char(char_mul(a, trivial_char(S)), a));
}

TEST(Characters, Multiplicative) {
  FieldE E(-20);
  UnitsStructure S = units_structure(E, rational_ideal(Rat(15)));
  auto all = all_characters(S);
  QuadElem x(4, 1), y(7, 3);
  ASSERT_TRUE(is_unit_mod(x, S) && is_unit_mod(y, S));
  for (std::size_t i = 0; i < all.size(); i += 7) EXPECT_EQ(all[i](E.mul(x, y)), all[i](x) + all[i](y));
}

TEST(Characters, NonUnitThrows) {
  FieldE E(-7);
  UnitsStructure S = units_structure(E, rational_ideal(Rat(6)));
  GroupChar c = all_characters(S)[1];
  EXPECT_THROW(c(QuadElem(2)), std::domain_error);
}

TEST(Dirichlet, KroneckerValues) {
  DirichletChar chi = kronecker_char(-4);
  EXPECT_EQ(chi.sign(1), 1);
  EXPECT_EQ(chi.sign(3), -1);
  EXPECT_EQ(chi.sign(5), 1);
  EXPECT_EQ(chi.sign(2), 0);
  DirichletChar psi = kronecker_char(-23);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) EXPECT_EQ(psi.sign(p), kronecker(-23, p)) << p;
  EXPECT_EQ(psi.conductor(), 23);
  EXPECT_EQ(trivial_dirichlet(12).order(), 1);
}

TEST(Eta, RestrictionAndWeight) {
  FieldE E(-23);
  QIdeal m = minimal_conductor(E).d;
  EtaQuery q;
  q.weight = 1;
  auto etas = enumerate_eta(E, m, q);
  ASSERT_FALSE(etas.empty());
  for (const auto& eta : etas) {
    EXPECT_TRUE(dirichlet_equal(restrict_to_Z(eta), kronecker_char(-23)));
    EXPECT_EQ(eta(QuadElem(-1)), Angle(1, 2));
  }
}

TEST(Eta, ConductorDescendInflate) {
  FieldE E(-4);
  QIdeal dE = minimal_conductor(E).d;
  QIdeal big = ideal_mul(E, dE, rational_ideal(Rat(3)));
  EtaQuery q;
  q.weight = 1;
  auto small = enumerate_eta(E, dE, q);
  ASSERT_EQ(small.size(), 1u);
  GroupChar up = inflate(small[0], big);
  EXPECT_TRUE(factors_through(up, dE));
  EXPECT_EQ(conductor_of(up), dE);
  EXPECT_TRUE(same_char(descend(up, dE), small[0]));
  // a primitive order-8 eta on 7 d_E does not factor through d_E
  EtaQuery q8;
  q8.weight = 1;
  q8.order_equals = 8;
  QIdeal m7 = ideal_mul(E, dE, rational_ideal(Rat(7)));
  bool any_primitive = false;
  for (const auto& eta : enumerate_eta(E, m7, q8)) {
    EXPECT_FALSE(factors_through(eta, dE));
    any_primitive = any_primitive || conductor_of(eta) == m7;
  }
  EXPECT_TRUE(any_primitive);
}

TEST(Eta, QuadraticDirichletSupport) {
  auto chars = quad_dirichlet_chars({3, 5});
  // the quadratic characters with conductor supported on {3, 5}: 1, chi_-3, chi_5, chi_-15
  EXPECT_EQ(chars.size(), 4u);
  // at 2 there are three nontrivial ones: chi_-4, chi_8, chi_-8
  EXPECT_EQ(quad_dirichlet_chars({2}).size(), 4u);
  EXPECT_EQ(quad_dirichlet_chars({2, 7}).size(), 8u);
}
