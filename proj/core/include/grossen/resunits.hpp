#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "grossen/quadfield.hpp"

namespace grossen {

// o_E / m for an integral ideal m, with residues held as int64 pairs (x, y)
// in the canonical box 0 <= x < A, 0 <= y < C of the lattice basis
// {(A, 0), (B, C)} of m.
class ResidueRing {
 public:
  struct Elt {
    long x = 0, y = 0;
    bool operator==(const Elt&) const = default;
  };

  ResidueRing(const FieldE& E, const QIdeal& m);

  long size() const { return A_ * C_; }
  const QIdeal& modulus() const { return m_; }

  Elt one() const { return reduce(1, 0); }
  Elt reduce(long x, long y) const;
  // Denominators must be coprime to N(m).
  Elt reduce(const QuadElem& z) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(Elt a, long e) const;
  Elt sub(const Elt& a, const Elt& b) const { return reduce(a.x - b.x, a.y - b.y); }
  Elt add(const Elt& a, const Elt& b) const { return reduce(a.x + b.x, a.y + b.y); }
  bool is_zero(const Elt& a) const { return a.x == 0 && a.y == 0; }

  long index(const Elt& a) const { return a.y * A_ + a.x; }
  Elt from_index(long i) const { return Elt{i % A_, i / A_}; }
  QuadElem lift(const Elt& a) const { return QuadElem(a.x, a.y); }

 private:
  QIdeal m_;
  long A_, B_, C_;
  long delta_, nm_;
  long norm_;
};

struct UnitFactor {
  QuadElem gen;  // residue representative mod m
  long order;
};

struct UnitsComponent {
  QIdeal prime;
  int exponent;
  QIdeal modulus;  // prime^exponent
  long order;
  std::size_t first_factor, factor_count;
};

namespace detail {
struct UnitsData;
}

struct UnitsStructure {
  long delta;
  QIdeal m;
  std::vector<UnitFactor> factors;
  long total_order = 1;
  std::vector<QuadElem> torsion_meet;
  std::vector<UnitsComponent> components;
  std::shared_ptr<const detail::UnitsData> data;

  std::vector<long> orders() const;
  FieldE field() const { return FieldE(delta); }
};

// Order of (o_E/m)^x from the prime factorisation of m.
long unit_group_order(const FieldE& E, const QIdeal& m);

UnitsStructure units_structure(const FieldE& E, const QIdeal& m);
bool is_unit_mod(const QuadElem& z, const UnitsStructure& S);
// Throws std::domain_error("not a unit") when z is not coprime to m.
std::vector<long> dlog(const QuadElem& z, const UnitsStructure& S);
QuadElem rebuild(const std::vector<long>& exps, const UnitsStructure& S);
// Residue of z mod m as a canonical representative.
QuadElem reduce_mod(const QuadElem& z, const UnitsStructure& S);
bool congruent_mod(const QuadElem& a, const QuadElem& b, const UnitsStructure& S);

std::vector<QuadElem> torsion_meet(const FieldE& E, const QIdeal& m);

// (Z/QZ)^x as a product of cyclic groups with CRT-lifted generators.
struct IntegerUnits {
  long Q = 1;
  std::vector<long> gens;
  std::vector<long> orders;
  std::vector<std::pair<long, int>> prime_powers;
  std::vector<std::size_t> component_of_gen;

  long order() const;
  std::vector<long> dlog(long a) const;  // a coprime to Q
};

IntegerUnits integer_units(long Q);

// Image of integers in (o_E/m)^x. The domain is (Z/LZ)^x with
// L = lcm(Q, N(m)); `injective` means the kernel of this map is contained
// in the kernel of reduction to (Z/QZ)^x, i.e. (Z/QZ)^x embeds.
struct RationalImage {
  long Q, L;
  std::vector<long> domain_gens;
  std::vector<std::vector<long>> images;
  long image_order;
  long kernel_order;
  bool injective;
  bool surjective;
};

RationalImage rational_image(const UnitsStructure& S, std::optional<long> Q = std::nullopt);

// Order of the subgroup of prod Z/orders[i] generated by the given vectors.
long subgroup_order(const std::vector<long>& orders, const std::vector<std::vector<long>>& vecs);

// CRT idempotent: e = 1 mod a, e = 0 mod b, for coprime integral a, b.
QuadElem crt_idempotent(const FieldE& E, const QIdeal& a, const QIdeal& b);

}  // namespace grossen
