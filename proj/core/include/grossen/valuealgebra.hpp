#pragma once

#include <memory>
#include <vector>

#include "grossen/poly.hpp"
#include "grossen/quadfield.hpp"

namespace grossen {

// Element of a ValueAlgebra: coordinates num[i] / den on the monomial basis.
struct AlgElem {
  std::vector<Int> num;
  Int den{1};

  bool is_zero() const;
  bool operator==(const AlgElem& o) const;
  Rat coord(std::size_t i) const { return Rat(num[i], den); }
};

// beta^n = zeta_r^zeta_exp * e, with e an integral element of E.
struct RadicalSpec {
  long n = 1;
  long zeta_exp = 0;
  QuadElem e{1};
  long root_index = 0;  // which n-th root the distinguished embedding picks
};

// Q-algebra generated over E by a primitive r-th root of unity zeta and
// radicals beta_i. The base ring is E (x) Q(zeta_r); for delta = -3, -4 it is
// Q(zeta_R) with R = lcm(r, w_E) so that the roots of unity of E and the
// powers of zeta are identified exactly. The algebra need not be a field.
//
// Basis: base monomials (omega^a zeta^b, or zeta_R^b) times beta^c, index
// base + base_dim * (c_1 + n_1 (c_2 + ...)).
class ValueAlgebra {
 public:
  ValueAlgebra(long delta, long r, std::vector<RadicalSpec> radicals);

  long delta() const { return delta_; }
  long r() const { return r_; }
  std::size_t dim() const { return dim_; }
  std::size_t base_dim() const { return base_dim_; }
  bool cyclotomic_base() const { return cyclo_base_; }
  long base_root_order() const { return R_; }
  const std::vector<RadicalSpec>& radicals() const { return rads_; }

  AlgElem zero() const;
  AlgElem one() const;
  AlgElem from_rational(const Rat& q) const;
  AlgElem from_quad(const QuadElem& z) const;
  AlgElem zeta(long k) const;  // zeta_r^k
  AlgElem beta(std::size_t i) const;
  AlgElem basis(std::size_t i) const;

  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem sub(const AlgElem& a, const AlgElem& b) const;
  AlgElem neg(const AlgElem& a) const;
  AlgElem scale(const AlgElem& a, const Rat& q) const;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const;
  AlgElem pow(const AlgElem& a, long e) const;  // e >= 0
  // Throws std::domain_error when a is a zero divisor.
  AlgElem inverse(const AlgElem& a) const;

  // Embeddings: base embedding index in [0, base_dim) and one root digit per
  // radical. Index 0 with the stored root indices is the distinguished one.
  std::size_t base_embedding_count() const { return base_dim_; }
  std::size_t embedding_count() const { return dim_; }
  Complex embed(const AlgElem& a) const;
  Complex embed(const AlgElem& a, std::size_t emb) const;

  // Monic minimal polynomial of a over Q inside the algebra.
  QPoly minimal_polynomial(const AlgElem& a) const;

 private:
  using IVec = std::vector<Int>;
  IVec base_mul(const IVec& a, const IVec& b) const;
  AlgElem normalize(IVec num, Int den) const;
  std::vector<Complex> basis_images(std::size_t emb) const;

  long delta_, r_, R_, phi_;
  bool cyclo_base_;
  std::size_t base_dim_, dim_, blocks_;
  std::vector<RadicalSpec> rads_;
  std::vector<IVec> gamma_;                               // base coordinates
  std::vector<std::vector<std::vector<std::pair<std::size_t, Int>>>> table_;
  std::vector<IVec> zpow_;                                // zeta_R^k in base coords
  IVec omega_;
  std::vector<std::size_t> radix_;
  std::vector<Complex> dist_images_;
};

using ValueAlgebraPtr = std::shared_ptr<const ValueAlgebra>;

}  // namespace grossen
