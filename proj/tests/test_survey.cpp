#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "grossen/acceptance.hpp"
#include "grossen/survey.hpp"

using namespace grossen;

TEST(ClassNumberOneSurvey, WeightTwoLevels) {
  auto rows = survey_h1(1, 1);
  std::set<std::pair<long, long>> got;
  for (const auto& r : rows) {
    EXPECT_EQ(r.degree, 1);
    got.insert({r.delta_E, r.level});
  }
  std::set<std::pair<long, long>> want = {{-3, 27},    {-4, 32},    {-7, 49},     {-8, 256},      {-11, 121},
                                          {-19, 361},  {-43, 1849}, {-67, 4489}, {-163, 26569}};
  EXPECT_EQ(got, want);
}

TEST(ClassNumberOneSurvey, CubicLevels) {
  std::set<std::pair<long, long>> got;
  for (const auto& r : survey_h1(1, 3)) got.insert({r.delta_E, r.level});
  EXPECT_EQ(got, (std::set<std::pair<long, long>>{{-3, 2187}, {-7, 343}}));
}

TEST(ClassNumberOneSurvey, QuadraticRowsFor163) {
  std::set<std::pair<long, long>> got;
  for (const auto& r : survey_h1(1, 2))
    if (r.delta_E == -163) got.insert({to_long(r.delta_K), r.level});
  EXPECT_EQ(got, (std::set<std::pair<long, long>>{{489, 106276}, {652, 239121}}));
}

TEST(ClassNumberOneSurvey, HigherWeightRunsForAllDegrees) {
  for (long ell : {3L, 5L})
    for (int d = 1; d <= 3; ++d) {
      auto rows = survey_h1(ell, d);
      EXPECT_FALSE(rows.empty()) << ell << " " << d;
      for (const auto& r : rows) EXPECT_EQ(r.degree, d);
    }
}

TEST(OrderFourSearch, PositiveControl) {
  for (long D : {-20L, -52L}) {
    BoundedSearch s = order4_search(FieldE(D), 2000);
    EXPECT_TRUE(s.found) << D;
    ASSERT_TRUE(s.example);
    FieldE E(D);
    EtaQuery q;
    q.order_equals = 4;
    q.weight = 1;
    auto etas = enumerate_eta(E, *s.example, q);
    ASSERT_FALSE(etas.empty());
    EXPECT_EQ(build(E, *s.example, 1, etas[0]).eta_order(), 4);
  }
}

TEST(OrderFourSearch, EightDividesDelta) {
  BoundedSearch s = order4_search(FieldE(-24), 2000);
  EXPECT_FALSE(s.found);
  EXPECT_GT(s.moduli_examined, 0);
}

TEST(QuadraticModulus, GeneratorChoiceDoesNotMatter) {
  auto pairs = [](const SurveyResult& s) {
    std::set<std::pair<long, std::string>> out;
    for (const auto& r : s.rows) out.insert({r.delta_E, r.delta_K.get_str()});
    return out;
  };
  for (int e : {2, 3}) EXPECT_EQ(pairs(survey_quadratic_modulus(e, 1, 0)), pairs(survey_quadratic_modulus(e, 1, 1))) << e;
}

TEST(QuadraticModulus, SkipsAndRejections) {
  SurveyResult s = survey_quadratic_modulus(2, 1);
  EXPECT_EQ(s.skipped, (std::vector<long>{-20, -52, -148}));
  EXPECT_EQ(s.rejections.size(), 38u);
  EXPECT_ANY_THROW(survey_quadratic_modulus(3, 3));
}

TEST(QuadraticModulus, HilbertClassFieldAnnotation) {
  SurveyResult s = survey_quadratic_modulus(2, 1);
  bool seen = false;
  for (const auto& r : s.rows)
    if (r.delta_E == -15) {
      EXPECT_TRUE(r.hilbert_class_field);  // -15 = 5 * -3
      seen = true;
    }
  EXPECT_TRUE(seen);
}

TEST(Tables, GroupedEntriesMatchPublishedTables) {
  ClassificationTables t = classification_tables();
  ASSERT_EQ(t.quadratic.size(), quadratic_table_oracle().size());
  ASSERT_EQ(t.cubic.size(), cubic_table_oracle().size());
  auto first = std::find_if(t.quadratic.begin(), t.quadratic.end(), [](const TableEntry& e) { return e.delta_K == 5; });
  ASSERT_NE(first, t.quadratic.end());
  EXPECT_EQ(first->delta_E, (std::vector<long>{-15, -20, -35, -40, -115, -235}));
  EXPECT_EQ(group_rows(t.rows, 2).size(), t.quadratic.size());
}
