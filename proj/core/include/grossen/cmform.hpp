#pragma once

#include <memory>
#include <string>
#include <vector>

#include "grossen/grossenchar.hpp"

namespace grossen {

struct IdealOfNorm {
  long norm;
  QIdeal ideal;
};

// Every integral ideal of norm <= B exactly once, sorted by (norm, ideal).
std::vector<IdealOfNorm> ideals_of_norm_up_to(const FieldE& E, long B);

struct CMForm {
  std::shared_ptr<const Grossenchar> psi;
  long level = 0;
  long weight = 0;
  long bound = 0;
  std::vector<AlgElem> coeffs;          // coeffs[n] = a_n for 0 <= n <= B (a_0 = 0)
  std::vector<Complex> complex_coeffs;  // distinguished embedding
};

CMForm q_expansion(const Grossenchar& psi, long B = 2000);

struct HeckeReport {
  bool ok = true;
  std::string failure;   // which identity failed
  long w1 = 0, w2 = 0;   // witness (m, n) or (p, j)
  long checks = 0;
  bool real = true;
  double max_imag = 0;
};

// Exact checks: a_1 = 1; a_m a_n = a_mn for coprime m, n; the prime-power
// recursion with nebentypus chi_E(p) eta(p); a_p = 0 at inert p; plus the
// numeric reality and Ramanujan checks.
HeckeReport hecke_verify(const CMForm& f);

struct ProbeResult {
  long degree = 0;
  bool real = true;
  double max_imag = 0;
};

ProbeResult coefficient_field_probe(const CMForm& f);

}  // namespace grossen
