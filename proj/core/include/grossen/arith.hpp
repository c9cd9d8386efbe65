#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace grossen {

using Int = mpz_class;
using Rat = mpq_class;

// Small-integer helpers. Everything that touches residues, forms or group
// orders runs in int64 with 128-bit intermediates; values that can grow
// (field elements, ideal bases, polynomial coefficients) use Int/Rat.

long to_long(const Int& v);
Int to_int(const Rat& v);  // throws unless v is integral
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

long mod_floor(long a, long m);
long mulmod(long a, long b, long m);
long pow_mod(long b, long e, long m);
long inv_mod(long a, long m);  // throws std::domain_error when gcd(a, m) != 1
long gcd_l(long a, long b);
long lcm_l(long a, long b);
long ext_gcd(long a, long b, long& x, long& y);  // returns g = a*x + b*y >= 0

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
std::vector<std::pair<long, int>> factorize(long n);  // |n| >= 1, sorted primes
std::vector<long> prime_divisors(long n);
std::vector<long> divisors(long n);
long euler_phi(long n);
long squarefree_part(long n);  // keeps the sign
bool is_squarefree(long n);

// Kronecker symbol (a/n) for arbitrary integers.
int kronecker_symbol(long a, long n);
// Square root of a modulo an odd prime, if a is a square.
std::optional<long> sqrt_mod_prime(long a, long p);
// Chinese remaindering for pairwise coprime moduli.
long crt_pair(long r1, long m1, long r2, long m2);

Int ipow(const Int& b, unsigned long e);
Rat rpow(const Rat& b, long e);
std::optional<Int> exact_root(const Int& v, unsigned k);  // v >= 0 or odd k
Int isqrt(const Int& v);

// Integer matrices are row lists. Rows need not be independent.
using IntMatrix = std::vector<std::vector<Int>>;

// Hermite normal form (upper triangular, positive pivots, reduced above).
// Zero rows are dropped.
IntMatrix hnf_rows(IntMatrix rows, std::size_t ncols);
// Elementary divisors of the lattice spanned by rows (full rank expected);
// entries equal to 1 are dropped, output is sorted so each divides the next.
std::vector<Int> smith_invariants(IntMatrix rows, std::size_t ncols);
// Index of the row lattice in Z^ncols, or 0 when it is not of full rank.
Int lattice_index(const IntMatrix& rows, std::size_t ncols);

}  // namespace grossen
