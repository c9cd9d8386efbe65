#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grossen/grossenchar.hpp"
#include "grossen/poly.hpp"

namespace grossen {

enum class Provenance { H1D1, H1D2, H1D3, QuadmodE2, QuadmodE3, HighordR4, HighordR6 };
std::string provenance_name(Provenance p);  // "h1-d1", "quadmod-e2", ...

struct TableRow {
  long delta_E = 0;
  int degree = 1;       // [K : Q]
  Int delta_K{1};
  ZPoly poly;           // defining polynomial of K
  long level = 0;
  long eta_order = 1;
  Provenance provenance = Provenance::H1D1;
  // h_E = 2 and EK is the genus field of E (Delta_K | Delta_E with
  // fundamental cofactor); computed, not proved.
  bool hilbert_class_field = false;
  std::shared_ptr<const Grossenchar> witness;
};

struct Rejection {
  long delta_E;
  long ell;
  std::string reason;  // "Q1"
};

// Search for an order-4 eta on (o/m)^x, N(m) <= bound, restricting to chi_E
// and with eta(theta) = +-i. Bounded evidence only.
struct BoundedSearch {
  long delta_E = 0;
  long r = 4;
  long bound = 0;
  long local_moduli = 0;     // prime-power-supported moduli examined
  long moduli_examined = 0;  // global moduli assembled from them
  bool found = false;
  std::optional<QIdeal> example;
};

struct SurveyResult {
  std::vector<TableRow> rows;
  std::vector<Rejection> rejections;
  std::vector<long> skipped;     // Delta = 4 mod 8, handled by twisting
  std::vector<BoundedSearch> searches;
  std::vector<long> swept;       // every discriminant touched
  std::vector<long> r1_holds_r4, r1_holds_r6;
  std::vector<long> eta_choices_agree;  // 8 | Delta fields where every eta gives one K
};

// Class number one fields: d = 1, 2, 3 constructions. ell odd.
std::vector<TableRow> survey_h1(long ell, int d);

// Exponent 2 or 3 class groups with quadratic eta at m = d_E. `alternate`
// selects different class group generators (the rows must not change).
SurveyResult survey_quadratic_modulus(int exponent, long ell, int alternate = 0);

// Order 4 and 6 eta over exponent-2 fields.
SurveyResult survey_higher_order(long ell, long conductor_norm_bound = 10000, int alternate = 0);

// The bounded search on its own, for one field.
BoundedSearch order4_search(const FieldE& E, long bound);

struct TableEntry {
  Int delta_K;
  int degree = 2;
  ZPoly poly;
  std::vector<long> delta_E;  // by increasing |Delta_E|
};

struct ClassificationTables {
  std::vector<TableEntry> quadratic, cubic;
  std::vector<TableRow> rows;  // every witness behind the entries
};

// Weight 2 (ell = 1) union of all sweeps, grouped by Delta_K.
ClassificationTables classification_tables(long conductor_norm_bound = 10000);

std::vector<TableEntry> group_rows(const std::vector<TableRow>& rows, int degree);

}  // namespace grossen
