#pragma once

#include <optional>
#include <vector>

#include "grossen/resunits.hpp"

namespace grossen {

// exp(2 pi i num/den), normalised to 0 <= num < den, gcd(num, den) = 1.
struct Angle {
  long num = 0, den = 1;

  Angle() = default;
  Angle(long n, long d);
  long order() const { return den; }
  bool is_zero() const { return num == 0; }
  bool operator==(const Angle&) const = default;
};

Angle operator+(const Angle& a, const Angle& b);
Angle operator-(const Angle& a);
Angle operator-(const Angle& a, const Angle& b);
Angle operator*(long k, const Angle& a);

struct GroupChar {
  UnitsStructure structure;
  std::vector<long> exps;

  long order() const;
  bool is_trivial() const;
  Angle on_generator(std::size_t i) const;
  // Throws std::domain_error for non-units.
  Angle operator()(const QuadElem& z) const;
};

GroupChar trivial_char(const UnitsStructure& S);
GroupChar char_mul(const GroupChar& a, const GroupChar& b);
GroupChar char_pow(const GroupChar& a, long k);
bool same_char(const GroupChar& a, const GroupChar& b);
std::vector<GroupChar> all_characters(const UnitsStructure& S);

struct DirichletChar {
  IntegerUnits units;
  std::vector<long> exps;

  long modulus() const { return units.Q; }
  long order() const;
  bool is_trivial() const;
  // Empty when gcd(a, Q) > 1.
  std::optional<Angle> operator()(long a) const;
  // For quadratic characters: -1, 0 or 1.
  int sign(long a) const;
  long conductor() const;
};

DirichletChar trivial_dirichlet(long Q);
// The Kronecker character of a fundamental discriminant, mod |delta|.
DirichletChar kronecker_char(long delta);
DirichletChar restrict_to_Z(const GroupChar& eta);
bool dirichlet_equal(const DirichletChar& a, const DirichletChar& b);

struct EtaQuery {
  std::optional<long> order_equals;
  std::optional<long> order_divides;
  // When set, also require eta(u) = u^{-weight} for every root of unity u.
  std::optional<long> weight;
  // Require eta restricted to Z to be chi_E.
  bool match_chi_E = true;
};

std::vector<GroupChar> enumerate_eta(const FieldE& E, const QIdeal& m, const EtaQuery& q);
std::vector<GroupChar> enumerate_eta(const FieldE& E, const UnitsStructure& S, const EtaQuery& q);

// Characters of (o/m)^x trivial on the kernel of reduction to (o/m')^x.
bool factors_through(const GroupChar& eta, const QIdeal& m_small);
GroupChar descend(const GroupChar& eta, const QIdeal& m_small);
GroupChar inflate(const GroupChar& eta, const QIdeal& m_big);
QIdeal conductor_of(const GroupChar& eta);

// All quadratic Dirichlet characters (trivial included) whose conductor is
// supported on the given primes, as characters mod prod(p odd) * 8^[2 in support].
std::vector<DirichletChar> quad_dirichlet_chars(const std::vector<long>& support);

}  // namespace grossen
