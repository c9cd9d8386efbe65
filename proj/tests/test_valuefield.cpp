#include <gtest/gtest.h>

#include <algorithm>

#include "grossen/acceptance.hpp"
#include "grossen/valuefield.hpp"

using namespace grossen;

namespace {

// d_E, except for Q(sqrt -3) with 3 not dividing ell, where zeta_3 = 1 mod d_E
// forces 3 o_E.
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

ZPoly zp(std::initializer_list<long> c) {
  ZPoly p;
  for (long v : c) p.push_back(Int(v));
  return p;
}

}  // namespace

TEST(Discriminant, QuadraticFields) {
  EXPECT_EQ(quadratic_field_discriminant(Int(5)), 5);
  EXPECT_EQ(quadratic_field_discriminant(Int(2)), 8);
  EXPECT_EQ(quadratic_field_discriminant(Int(3)), 12);
  EXPECT_EQ(quadratic_field_discriminant(Int(12)), 12);
  EXPECT_EQ(quadratic_field_discriminant(Int(18)), 8);
  EXPECT_EQ(quadratic_field_discriminant(Int(-1)), -4);
  EXPECT_EQ(quadratic_field_discriminant(Int(-27)), -3);
}

TEST(Discriminant, CubicFields) {
  // coefficients low to high
  EXPECT_EQ(field_discriminant(zp({-1, -1, 0, 1})), Int(-23));
  EXPECT_EQ(field_discriminant(zp({-1, -2, 1, 1})), Int(49));
  EXPECT_EQ(field_discriminant(zp({-1, -3, 0, 1})), Int(81));
  EXPECT_EQ(field_discriminant(zp({-2, 0, 0, 1})), Int(-108));
  // Z[x]/(x^3 - 6x - 3) has discriminant 621 = 27 * 23 and is maximal
  EXPECT_EQ(field_discriminant(zp({-3, -6, 0, 1})), Int(621));
  // x^3 - 12 x - 8 = 8 ((x/2)^3 - 3 (x/2) - 1): index 8 order in the 81 field
  EXPECT_EQ(field_discriminant(zp({-8, -12, 0, 1})), Int(81));
}

TEST(Discriminant, DedekindCriterion) {
  EXPECT_TRUE(dedekind_maximal(zp({-2, 0, 0, 1}), 2));
  EXPECT_TRUE(dedekind_maximal(zp({-2, 0, 0, 1}), 3));
  EXPECT_FALSE(dedekind_maximal(zp({-5, 0, 1}), 2));
  EXPECT_FALSE(dedekind_maximal(zp({3, 0, 1}), 2));
  EXPECT_TRUE(dedekind_maximal(zp({1, 0, 1}), 2));
}

TEST(ValueField, ClassNumberOneIsTrivial) {
  for (long D : {-3L, -4L, -7L, -8L, -11L}) {
    Grossenchar psi = minimal_char(D);
    EXPECT_EQ(value_field_degree(psi), 1) << D;
    EXPECT_EQ(rationality_field(psi).degree, 1);
  }
}

TEST(ValueField, ClassNumberThree) {
  Grossenchar psi = minimal_char(-23);
  EXPECT_EQ(value_field_degree(psi), 3);
  RationalityField K = rationality_field(psi);
  EXPECT_EQ(K.degree, 3);
  EXPECT_GT(K.disc, 0);  // totally real
}

// With 3 | ell the radicand is already a cube in E, and the character picks
// one of its three cube roots; anything but the one in E brings in zeta_3.
TEST(ValueField, CubeRootChoiceAtEllThree) {
  FieldE E(-23);
  QIdeal m = minimal_conductor(E).d;
  EtaQuery q;
  q.weight = 3;
  auto eta = enumerate_eta(E, m, q).at(0);
  std::vector<long> degrees;
  for (long k = 0; k < 3; ++k) {
    BuildOptions o;
    o.root_choices = {k};
    degrees.push_back(value_field_degree(build(E, m, 3, eta, o)));
  }
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<long>{1, 2, 2}));
}

TEST(ValueField, UnsupportedOrder) {
  EXPECT_THROW(value_field_degree(minimal_char(-47)), std::domain_error);
}

TEST(Q1, NonCyclicFieldsFail) {
  EXPECT_FALSE(check_Q1(FieldE(-84), 1).holds);
  EXPECT_FALSE(check_Q1(FieldE(-5460), 1).holds);
  EXPECT_FALSE(check_Q1(FieldE(-4027), 1).holds);
  EXPECT_FALSE(check_Q1(FieldE(-4027), 2).holds);
  EXPECT_THROW(check_Q1(FieldE(-23), 1), std::invalid_argument);
}

TEST(R1, ClassNumberTwoLists) {
  std::vector<long> r4, r6;
  for (long D : enumerate_discriminants(5460, 2)) {
    if (class_number(D) != 2) continue;
    FieldE E(D);
    if (check_R1(E, 1, 4).holds) r4.push_back(D);
    if (check_R1(E, 1, 6).holds) r6.push_back(D);
  }
  auto desc = [](std::vector<long>& v) { std::sort(v.begin(), v.end(), [](long a, long b) { return a > b; }); };
  desc(r4);
  desc(r6);
  EXPECT_EQ(r4, (std::vector<long>{-20, -24, -40, -52, -88, -148, -232}));
  EXPECT_EQ(r6, (std::vector<long>{-15, -24, -51, -123, -267}));
}
