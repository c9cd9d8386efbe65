#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grossen/survey.hpp"

namespace grossen {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Published tables used as oracles.
struct QuadraticOracle {
  long delta_K;
  std::vector<long> delta_E;
};
const std::vector<QuadraticOracle>& quadratic_table_oracle();          // 23 entries
const std::vector<std::pair<long, long>>& cubic_table_oracle();    // (Delta_K, Delta_E), 18
const std::vector<std::pair<long, long>>& quadodd_oracle();   // (Delta_E, Delta_K), 11
const std::vector<std::pair<long, long>>& quadeven_oracle();  // 4
const std::vector<std::pair<long, long>>& quade3_oracle();    // 16

// Dyadic structure of (o_E/P^n)^x by exhaustive enumeration: sorted
// exponents of the 2-primary invariants, and the odd part of the order.
struct BruteDyadic {
  std::vector<int> two_exponents;
  long odd_order = 1;
};
BruteDyadic brute_dyadic_units(const FieldE& E, const QIdeal& Pn);
// Is a (a rational integer) a square in (o_E/I)^x, by enumeration.
bool brute_is_square(const FieldE& E, const QIdeal& I, long a);

std::vector<int> all_criteria();
CriterionResult run_criterion(int id);
// Runs the requested criteria in order; `report` sees each result as it lands.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& report = {});

}  // namespace grossen
