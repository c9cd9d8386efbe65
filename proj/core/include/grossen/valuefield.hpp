#pragma once

#include <optional>
#include <vector>

#include "grossen/grossenchar.hpp"
#include "grossen/poly.hpp"

namespace grossen {

struct RationalityField {
  int degree = 1;
  ZPoly poly;  // monic, irreducible, totally real
  Int disc{1};
};

// [L_psi : E]. Supports radicals over E(zeta_r) for r in {1, 2, 3, 4, 6}
// with all class group orders equal to 2 or 3; throws std::domain_error
// ("unsupported ...") outside that range.
long value_field_degree(const Grossenchar& psi);

struct Q1Verdict {
  bool holds = false;
  std::vector<int> signs;  // one per generator when holds (all +1 for cubes)
};

// Throws std::invalid_argument("Q1 not applicable") for cyclic class groups.
Q1Verdict check_Q1(const FieldE& E, long ell);
Q1Verdict check_Q1(const FieldE& E, const ClassGroup& cg, long ell);
// Same test on explicit data theta_i with common order n in {2, 3}.
Q1Verdict check_Q1_data(const FieldE& E, const std::vector<QuadElem>& thetas, long n, long ell);

struct R1Verdict {
  bool holds = false;
  // Per generator: the k with zeta_r^k theta_i^ell an n_i-th power in E(zeta_r).
  std::vector<std::vector<long>> witnesses;
};
R1Verdict check_R1(const FieldE& E, long ell, long r);
R1Verdict check_R1(const FieldE& E, const ClassGroup& cg, long ell, long r);

// Throws std::domain_error("unsupported degree") when [L:E] > 3.
RationalityField rationality_field(const Grossenchar& psi);

// Fundamental discriminant of Q(sqrt(n)), n not a square.
long quadratic_field_discriminant(const Int& n);
// Discriminant of the number field defined by a monic irreducible integer
// polynomial of degree 2 or 3.
Int field_discriminant(const ZPoly& f);
// Dedekind's criterion for Z[x]/(f) at p (f monic, degree <= 3).
bool dedekind_maximal(const ZPoly& f, long p);
// True when no element of (1/p)O \ O is integral, O the maximal order
// computed by field_discriminant; used to re-check maximality.
bool order_is_p_maximal(const ZPoly& f, long p);

// Exact arithmetic in E(sqrt c), c in {-1, -3}; exposed for tests.
struct QuadExt {
  QuadElem a, b;  // a + b sqrt(c)
};
QuadExt ext_mul(const FieldE& E, long c, const QuadExt& x, const QuadExt& y);
std::optional<QuadExt> ext_sqrt(const FieldE& E, long c, const QuadExt& x);
// zeta_r^k in E(sqrt c) for r in {1, 2, 3, 4, 6} (c = -1 for r = 4, -3 for 3, 6).
QuadExt ext_root_of_unity(long r, long k);

}  // namespace grossen
