#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grossen/arith.hpp"

namespace grossen {

// Dense polynomials, coefficient of x^i at index i. Trailing zeros trimmed.
using QPoly = std::vector<Rat>;
using ZPoly = std::vector<Int>;

void trim(QPoly& f);
void trim(ZPoly& f);
long degree(const QPoly& f);
long degree(const ZPoly& f);

QPoly to_qpoly(const ZPoly& f);
// Throws unless every coefficient is integral.
ZPoly to_zpoly(const QPoly& f);

QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
// Quotient and remainder over Q; b nonzero.
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);
QPoly poly_monic(const QPoly& f);
QPoly poly_gcd(QPoly a, QPoly b);
Rat poly_eval(const QPoly& f, const Rat& x);
// f(x) -> f(x + t)
ZPoly poly_shift(const ZPoly& f, const Int& t);

// Cyclotomic polynomial Phi_r.
ZPoly cyclotomic(long r);

// Discriminant of a monic (or any) polynomial via the resultant with f'.
Rat poly_discriminant(const QPoly& f);
Int poly_discriminant(const ZPoly& f);

// Arithmetic in F_p[x], coefficients reduced to [0, p).
using FpPoly = std::vector<long>;
FpPoly to_fp(const ZPoly& f, long p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p);
std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b, long p);
// Factorisation of a polynomial of degree <= 3 over F_p into monic
// irreducibles with multiplicity (root finding suffices in that range).
std::vector<std::pair<FpPoly, int>> fp_factor_small(const FpPoly& f, long p);

std::string poly_to_string(const ZPoly& f, const std::string& var = "x");

}  // namespace grossen
