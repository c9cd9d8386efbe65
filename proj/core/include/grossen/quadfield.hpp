#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grossen/arith.hpp"
#include "grossen/numeric.hpp"

namespace grossen {

// x + y*omega with omega = (delta + sqrt(delta))/2.
struct QuadElem {
  Rat x, y;

  QuadElem() = default;
  QuadElem(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}
  QuadElem(long v) : x(v), y(0) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return x == 0 && y == 0; }
  bool is_rational() const { return y == 0; }
  bool is_integral() const { return x.get_den() == 1 && y.get_den() == 1; }
};

bool operator==(const QuadElem& a, const QuadElem& b);
QuadElem operator+(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a, const QuadElem& b);
QuadElem operator-(const QuadElem& a);
QuadElem operator*(const Rat& c, const QuadElem& a);

bool is_fundamental(long delta);

class FieldE {
 public:
  // Throws std::invalid_argument unless delta is a negative fundamental
  // discriminant with |delta| < 2^31.
  explicit FieldE(long delta);

  long delta() const { return delta_; }
  const Int& omega_trace() const { return tr_; }
  const Int& omega_norm() const { return nm_; }
  long omega_norm_l() const { return nm_l_; }

  QuadElem omega() const { return QuadElem(0, 1); }
  QuadElem sqrt_delta() const;  // 2*omega - delta

  QuadElem mul(const QuadElem& a, const QuadElem& b) const;
  QuadElem pow(const QuadElem& a, long e) const;
  QuadElem inv(const QuadElem& a) const;
  QuadElem div(const QuadElem& a, const QuadElem& b) const { return mul(a, inv(b)); }
  QuadElem conj(const QuadElem& a) const;
  Rat norm(const QuadElem& a) const;
  Rat trace(const QuadElem& a) const;

  // Number of roots of unity w_E and the list (u_k, k) with u_k = exp(2 pi i k / w_E)
  // at the distinguished embedding.
  long unit_count() const;
  std::vector<QuadElem> roots_of_unity() const;

  // omega -> (delta + i sqrt|delta|)/2
  Complex embed(const QuadElem& a) const;

  bool operator==(const FieldE& o) const { return delta_ == o.delta_; }

 private:
  long delta_;
  Int tr_, nm_;
  long nm_l_;
};

// scale * (a Z + (b + omega) Z) with a > 0, 0 <= b < a, a | N(b + omega).
struct QIdeal {
  Int a{1}, b{0};
  Rat scale{1};

  Rat norm() const { return scale * scale * a; }
  bool is_integral() const { return scale.get_den() == 1; }
  bool is_unit() const { return a == 1 && scale == 1; }
  std::vector<QuadElem> zbasis() const;  // {scale*a, scale*(b + omega)}
  auto operator<=>(const QIdeal& o) const;
  bool operator==(const QIdeal& o) const { return a == o.a && b == o.b && scale == o.scale; }
};

inline auto QIdeal::operator<=>(const QIdeal& o) const {
  if (auto c = cmp(norm(), o.norm()); c != 0) return c <=> 0;
  if (auto c = cmp(a, o.a); c != 0) return c <=> 0;
  if (auto c = cmp(b, o.b); c != 0) return c <=> 0;
  return cmp(scale, o.scale) <=> 0;
}

QIdeal unit_ideal();
// Z-module spanned by the given elements; must be an o_E-module of rank 2.
QIdeal ideal_from_zspan(const FieldE& E, const std::vector<QuadElem>& gens);
// o_E-module generated by the given elements.
QIdeal ideal_from_generators(const FieldE& E, const std::vector<QuadElem>& gens);
QIdeal principal_ideal(const FieldE& E, const QuadElem& alpha);
QIdeal rational_ideal(const Rat& c);  // c * o_E
QIdeal hnf_reduce(const FieldE& E, const QIdeal& I);
QIdeal ideal_mul(const FieldE& E, const QIdeal& I, const QIdeal& J);
QIdeal ideal_pow(const FieldE& E, const QIdeal& I, long e);
QIdeal ideal_inv(const FieldE& E, const QIdeal& I);
QIdeal ideal_conj(const FieldE& E, const QIdeal& I);
QIdeal ideal_add(const FieldE& E, const QIdeal& I, const QIdeal& J);
QIdeal ideal_div(const FieldE& E, const QIdeal& I, const QIdeal& J);
Rat ideal_norm(const QIdeal& I);
bool ideal_contains(const FieldE& E, const QIdeal& I, const QuadElem& z);
// I | J, i.e. J is contained in I.
bool ideal_divides(const FieldE& E, const QIdeal& I, const QIdeal& J);
bool ideals_coprime(const FieldE& E, const QIdeal& I, const QIdeal& J);
// Prime factorisation with signed exponents, ordered by (norm, b).
std::vector<std::pair<QIdeal, int>> factor_ideal(const FieldE& E, const QIdeal& I);
// Smallest positive integer in I (I integral).
Int ideal_min_integer(const QIdeal& I);

enum class Splitting { Split, Inert, Ramified };

struct SplitType {
  Splitting kind;
  long p;
  std::vector<QIdeal> primes;  // split: {p, pbar} ordered by b; otherwise one ideal
};

int kronecker(long delta, long n);  // delta must be fundamental
SplitType factor_prime(const FieldE& E, long p);

// Generator of I when I is principal; canonical up to units (y > 0, then x >= 0).
std::optional<QuadElem> is_principal(const FieldE& E, const QIdeal& I);

std::optional<QuadElem> is_square_in_E(const FieldE& E, const QuadElem& z);
std::optional<QuadElem> is_cube_in_E(const FieldE& E, const QuadElem& z);
std::optional<QuadElem> nth_root_in_E(const FieldE& E, const QuadElem& z, int n);

// Positive definite binary quadratic forms a x^2 + b x y + c y^2.
struct Form {
  long a, b, c;
  auto operator<=>(const Form&) const = default;
};

Form reduce_form(const Form& f);
Form compose_forms(const Form& f, const Form& g);
Form principal_form(long delta);
Form inverse_form(const Form& f);
long form_discriminant(const Form& f);
std::vector<Form> reduced_forms(long delta);
Form form_of_ideal(const FieldE& E, const QIdeal& I);  // reduced
QIdeal ideal_of_form(const FieldE& E, const Form& f);

struct ClassGroup {
  long delta = 0;
  long h = 1;
  std::vector<long> orders;     // d_1 | d_2 | ... | d_g
  std::vector<QIdeal> gens;     // prime ideal representatives t_i
  std::vector<QuadElem> thetas; // t_i^{d_i} = theta_i o_E
  long exponent = 1;
  QIdeal coprime_to;
  std::shared_ptr<const std::map<Form, std::vector<long>>> dlog_table;

  bool is_cyclic() const { return orders.size() <= 1; }
};

// Generators avoid primes dividing N(coprime_to). `alternate` skips that many
// otherwise eligible rational primes per generator, giving a second set of
// representatives.
ClassGroup class_group(const FieldE& E, const QIdeal& coprime_to = unit_ideal(), int alternate = 0);
std::vector<long> class_dlog(const FieldE& E, const QIdeal& I, const ClassGroup& G);

struct RelationLattice {
  std::vector<Form> generators;
  IntMatrix relations;
  std::vector<Int> invariants;
  Int order;
};
RelationLattice class_group_relations(long delta);

long class_number(long delta);
long class_group_exponent(long delta);
std::vector<long> enumerate_discriminants(long bound, std::optional<long> exponent = std::nullopt);

}  // namespace grossen
