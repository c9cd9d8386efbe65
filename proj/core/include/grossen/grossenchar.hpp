#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "grossen/chargroup.hpp"
#include "grossen/valuealgebra.hpp"

namespace grossen {

// No character of weight ell exists for the modulus: some root of unity
// congruent to 1 mod m has u^ell != 1.
struct NoGrossencharacter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// eta does not restrict correctly to the roots of unity of E, or to chi_E.
struct IncompatibleEta : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BuildOptions {
  // Require eta on Z to be chi_E (trivial nebentypus for f_psi).
  bool trivial_nebentypus = true;
  // Class group with generators coprime to m; computed when absent.
  std::optional<ClassGroup> class_group;
  // Root index per class group generator (default 0).
  std::vector<long> root_choices;
  // Alternatively pick each root so psi(t_i) is nearest to the given value.
  std::vector<Complex> root_targets;
  // Random self-checks run at build time (each of two kinds).
  int self_checks = 25;
};

class Grossenchar {
 public:
  const FieldE& field() const { return E_; }
  long delta() const { return E_.delta(); }
  const QIdeal& modulus() const { return m_; }
  long ell() const { return ell_; }
  long weight() const { return ell_ + 1; }
  const GroupChar& eta() const { return eta_; }
  const ClassGroup& class_group() const { return cg_; }
  const ValueAlgebra& algebra() const { return *alg_; }
  ValueAlgebraPtr algebra_ptr() const { return alg_; }
  const std::vector<long>& root_indices() const { return roots_; }
  long eta_order() const { return alg_->r(); }
  // |delta| * N(m)
  long level() const;

  // psi(a) for a fractional ideal; zero when a is integral and not coprime to m.
  AlgElem evaluate(const QIdeal& a) const;
  Complex evaluate_numeric(const QIdeal& a) const { return alg_->embed(evaluate(a)); }
  // eta(alpha) alpha^ell for alpha coprime to m.
  AlgElem on_principal(const QuadElem& alpha) const;
  // eta as a power of zeta_r.
  long eta_exponent(const QuadElem& alpha) const;

 private:
  friend Grossenchar build(const FieldE&, const QIdeal&, long, const GroupChar&, const BuildOptions&);
  Grossenchar(FieldE E) : E_(std::move(E)) {}
  AlgElem evaluate_integral(const QIdeal& a) const;

  FieldE E_;
  QIdeal m_;
  long ell_ = 1;
  GroupChar eta_;
  ClassGroup cg_;
  std::vector<long> roots_;
  ValueAlgebraPtr alg_;
};

Grossenchar build(const FieldE& E, const QIdeal& m, long ell, const GroupChar& eta,
                  const BuildOptions& opts = {});

struct MinimalConductor {
  QIdeal d;  // d_E
  long N;    // |delta| * N(d_E)
};
MinimalConductor minimal_conductor(const FieldE& E);

// The primitive character inducing a -> chi(N a) psi(a).
Grossenchar twist(const Grossenchar& psi, const DirichletChar& chi);
// psi extended to a character of conductor m' | m with the same eta.
Grossenchar extend_to_conductor(const Grossenchar& psi, const QIdeal& m_small);

// Same field, weight, modulus, eta, and the same values on class group
// generators (compared at the distinguished embeddings).
bool same_character(const Grossenchar& a, const Grossenchar& b);

}  // namespace grossen
