#include "grossen/grossenchar.hpp"

#include <cmath>
#include <random>

namespace grossen {

long Grossenchar::level() const { return -E_.delta() * to_long(to_int(m_.norm())); }

long Grossenchar::eta_exponent(const QuadElem& alpha) const {
  Angle a = eta_(alpha);
  return a.num * (alg_->r() / a.den);
}

AlgElem Grossenchar::on_principal(const QuadElem& alpha) const {
  return alg_->mul(alg_->zeta(eta_exponent(alpha)), alg_->from_quad(E_.pow(alpha, ell_)));
}

AlgElem Grossenchar::evaluate_integral(const QIdeal& a) const {
  if (!ideals_coprime(E_, a, m_)) return alg_->zero();
  std::vector<long> j = class_dlog(E_, a, cg_);
  QIdeal J = a;
  QuadElem div(1);
  AlgElem val = alg_->one();
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] == 0) continue;
    J = ideal_mul(E_, J, ideal_pow(E_, cg_.gens[i], cg_.orders[i] - j[i]));
    div = E_.mul(div, cg_.thetas[i]);
    val = alg_->mul(val, alg_->pow(alg_->beta(i), j[i]));
  }
  auto gen = is_principal(E_, J);
  if (!gen) throw std::logic_error("evaluate: class group decomposition did not give a principal ideal");
  long k = eta_exponent(*gen) - eta_exponent(div);
  QuadElem alpha = E_.div(*gen, div);
  val = alg_->mul(val, alg_->zeta(k));
  return alg_->mul(val, alg_->from_quad(E_.pow(alpha, ell_)));
}

AlgElem Grossenchar::evaluate(const QIdeal& a) const {
  if (a.is_integral()) return evaluate_integral(a);
  QIdeal num = unit_ideal(), den = unit_ideal();
  for (auto& [P, e] : factor_ideal(E_, a)) {
    if (!ideals_coprime(E_, P, m_)) throw std::invalid_argument("evaluate: fractional ideal not coprime to the modulus");
    if (e > 0)
      num = ideal_mul(E_, num, ideal_pow(E_, P, e));
    else
      den = ideal_mul(E_, den, ideal_pow(E_, P, -e));
  }
  return alg_->mul(evaluate_integral(num), alg_->inverse(evaluate_integral(den)));
}

namespace {

std::vector<QIdeal> small_primes_coprime(const FieldE& E, const QIdeal& m, long bound) {
  std::vector<QIdeal> out;
  for (long p : primes_up_to(bound)) {
    SplitType st = factor_prime(E, p);
    for (auto& P : st.primes)
      if (ideals_coprime(E, P, m)) out.push_back(P);
  }
  return out;
}

long root_index_for(const Complex& principal, const Complex& target, long n) {
  Complex q = target / principal;
  Real a = arg(q) * Real(n) / (Real(2L) * Real::pi());
  return mod_floor(to_long(a.round()), n);
}

}  // namespace

Grossenchar build(const FieldE& E, const QIdeal& m, long ell, const GroupChar& eta, const BuildOptions& opts) {
  if (!m.is_integral() || m.norm() == 0) throw std::invalid_argument("build: modulus must be a nonzero integral ideal");
  if (ell < 0) throw std::invalid_argument("build: weight must be non-negative");
  if (!(eta.structure.m == m) || eta.structure.delta != E.delta())
    throw IncompatibleEta("eta is not a character of (o/m)^x for this modulus");

  // Existence: u^ell = 1 for roots of unity u = 1 mod m.
  long w = E.unit_count();
  auto mu = E.roots_of_unity();
  for (const auto& u : torsion_meet(E, m))
    if (!(E.pow(u, ell) == QuadElem(1)))
      throw NoGrossencharacter("no Grossencharacter for (m, ell): a root of unity congruent to 1 mod m has u^ell != 1");
  for (long k = 0; k < w; ++k)
    if (!(eta(mu[k]) == Angle(-ell * k, w))) throw IncompatibleEta("eta(u) != u^-ell on the roots of unity of E");
  if (opts.trivial_nebentypus) {
    if (ell % 2 == 0) throw std::invalid_argument("build: trivial nebentypus needs odd weight ell");
    if (!dirichlet_equal(restrict_to_Z(eta), kronecker_char(E.delta())))
      throw IncompatibleEta("eta restricted to Z is not chi_E");
  }

  Grossenchar psi(E);
  psi.m_ = m;
  psi.ell_ = ell;
  psi.eta_ = eta;
  psi.cg_ = opts.class_group ? *opts.class_group : class_group(E, m);
  for (const auto& t : psi.cg_.gens)
    if (!ideals_coprime(E, t, m)) throw std::invalid_argument("build: class group generator not coprime to m");

  long r = eta.order();
  std::size_t g = psi.cg_.gens.size();
  std::vector<RadicalSpec> rads(g);
  for (std::size_t i = 0; i < g; ++i) {
    Angle a = eta(psi.cg_.thetas[i]);
    rads[i].n = psi.cg_.orders[i];
    rads[i].zeta_exp = a.num * (r / a.den);
    rads[i].e = E.pow(psi.cg_.thetas[i], ell);
    rads[i].root_index = i < opts.root_choices.size() ? mod_floor(opts.root_choices[i], rads[i].n) : 0;
  }
  if (!opts.root_targets.empty()) {
    if (opts.root_targets.size() != g) throw std::invalid_argument("build: one root target per generator expected");
    for (auto& rad : rads) rad.root_index = 0;
    ValueAlgebra probe(E.delta(), r, rads);
    for (std::size_t i = 0; i < g; ++i)
      rads[i].root_index = root_index_for(probe.embed(probe.beta(i)), opts.root_targets[i], rads[i].n);
  }
  for (auto& rad : rads) psi.roots_.push_back(rad.root_index);
  psi.alg_ = std::make_shared<ValueAlgebra>(E.delta(), r, std::move(rads));

  // Self-checks: psi(alpha o) = eta(alpha) alpha^ell and multiplicativity.
  const ValueAlgebra& A = *psi.alg_;
  std::mt19937_64 rng(static_cast<std::uint64_t>(-E.delta()) * 1000003ULL + static_cast<std::uint64_t>(to_long(to_int(m.norm()))));
  std::uniform_int_distribution<long> coord(-40, 40);
  for (int done = 0, tries = 0; done < opts.self_checks && tries < 50 * opts.self_checks; ++tries) {
    QuadElem alpha(coord(rng), coord(rng));
    if (alpha.is_zero() || !is_unit_mod(alpha, eta.structure)) continue;
    if (!(psi.evaluate(principal_ideal(E, alpha)) == psi.on_principal(alpha)))
      throw std::logic_error("build: psi(alpha o) != eta(alpha) alpha^ell");
    ++done;
  }
  auto primes = small_primes_coprime(E, m, 60);
  if (!primes.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    auto random_ideal = [&]() {
      QIdeal I = unit_ideal();
      for (int k = len(rng); k > 0; --k) I = ideal_mul(E, I, primes[pick(rng)]);
      return I;
    };
    for (int k = 0; k < opts.self_checks; ++k) {
      QIdeal a = random_ideal(), b = random_ideal();
      if (!(psi.evaluate(ideal_mul(E, a, b)) == A.mul(psi.evaluate(a), psi.evaluate(b))))
        throw std::logic_error("build: psi is not multiplicative");
    }
  }
  return psi;
}

MinimalConductor minimal_conductor(const FieldE& E) {
  long D = E.delta();
  QIdeal sq = principal_ideal(E, E.sqrt_delta());
  if (mod_floor(D, 2) == 1) return {sq, D * D};
  if (mod_floor(D, 8) == 4) {
    QIdeal p2 = factor_prime(E, 2).primes.at(0);
    return {ideal_mul(E, p2, sq), 2 * D * D};
  }
  return {ideal_mul(E, rational_ideal(2), sq), 4 * D * D};
}

Grossenchar twist(const Grossenchar& psi, const DirichletChar& chi) {
  const FieldE& E = psi.field();
  if (chi.is_trivial()) return psi;
  long Q = chi.modulus();
  for (const auto& t : psi.class_group().gens)
    if (gcd_l(to_long(to_int(t.norm())), Q) != 1)
      throw std::invalid_argument("twist: class group generators must be coprime to the twisting modulus");

  QIdeal M = ideal_mul(E, psi.modulus(), rational_ideal(Q));
  UnitsStructure S = units_structure(E, M);
  GroupChar big{S, std::vector<long>(S.factors.size(), 0)};
  for (std::size_t i = 0; i < S.factors.size(); ++i) {
    const QuadElem& gi = S.factors[i].gen;
    long nrm = to_long(to_int(E.norm(gi)));
    auto c = chi(mod_floor(nrm, Q));
    if (!c) throw std::logic_error("twist: generator norm not coprime to the modulus");
    Angle v = *c + psi.eta()(gi);
    long o = S.factors[i].order;
    big.exps[i] = v.num * (o / v.den);
  }
  QIdeal m2 = conductor_of(big);
  GroupChar eta2 = descend(big, m2);

  BuildOptions opts;
  opts.class_group = psi.class_group();
  opts.trivial_nebentypus = psi.ell() % 2 == 1 &&
                            dirichlet_equal(restrict_to_Z(eta2), kronecker_char(E.delta()));
  const ValueAlgebra& A = psi.algebra();
  for (std::size_t i = 0; i < psi.class_group().gens.size(); ++i) {
    long nt = to_long(to_int(psi.class_group().gens[i].norm()));
    Complex v = A.embed(A.beta(i));
    if (chi.sign(nt) == -1) v = -v;
    opts.root_targets.push_back(v);
  }
  return build(E, m2, psi.ell(), eta2, opts);
}

Grossenchar extend_to_conductor(const Grossenchar& psi, const QIdeal& m_small) {
  const FieldE& E = psi.field();
  if (m_small == psi.modulus()) return psi;
  if (!ideal_divides(E, m_small, psi.modulus())) throw std::invalid_argument("not extendable: m' does not divide m");
  if (!factors_through(psi.eta(), m_small)) throw std::invalid_argument("not extendable");
  BuildOptions opts;
  opts.class_group = psi.class_group();
  opts.root_choices = psi.root_indices();
  opts.trivial_nebentypus = dirichlet_equal(restrict_to_Z(psi.eta()), kronecker_char(E.delta())) && psi.ell() % 2 == 1;
  return build(E, m_small, psi.ell(), descend(psi.eta(), m_small), opts);
}

bool same_character(const Grossenchar& a, const Grossenchar& b) {
  if (a.delta() != b.delta() || a.ell() != b.ell() || !(a.modulus() == b.modulus())) return false;
  if (!same_char(a.eta(), b.eta())) return false;
  for (const auto& t : a.class_group().gens)
    if (!near(a.evaluate_numeric(t), b.evaluate_numeric(t), 1e-40)) return false;
  return true;
}

}  // namespace grossen
