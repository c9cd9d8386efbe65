#include "grossen/chargroup.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace grossen {

Angle::Angle(long n, long d) {
  if (d <= 0) throw std::invalid_argument("Angle: denominator must be positive");
  n = mod_floor(n, d);
  long g = gcd_l(n, d);
  if (g == 0) g = d;
  num = n / g;
  den = d / g;
  if (num == 0) den = 1;
}

Angle operator+(const Angle& a, const Angle& b) {
  long d = lcm_l(a.den, b.den);
  return Angle(a.num * (d / a.den) + b.num * (d / b.den), d);
}
Angle operator-(const Angle& a) { return Angle(-a.num, a.den); }
Angle operator-(const Angle& a, const Angle& b) { return a + (-b); }
Angle operator*(long k, const Angle& a) { return Angle(mulmod(mod_floor(k, a.den), a.num, a.den), a.den); }

// ---------------------------------------------------------------- GroupChar

long GroupChar::order() const {
  long o = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) o = lcm_l(o, on_generator(i).den);
  return o;
}

bool GroupChar::is_trivial() const {
  return std::all_of(exps.begin(), exps.end(), [](long c) { return c == 0; });
}

Angle GroupChar::on_generator(std::size_t i) const { return Angle(exps[i], structure.factors[i].order); }

Angle GroupChar::operator()(const QuadElem& z) const {
  std::vector<long> v = dlog(z, structure);
  Angle a;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] && exps[i]) a = a + Angle(mulmod(v[i], exps[i], structure.factors[i].order), structure.factors[i].order);
  return a;
}

GroupChar trivial_char(const UnitsStructure& S) { return GroupChar{S, std::vector<long>(S.factors.size(), 0)}; }

GroupChar char_mul(const GroupChar& a, const GroupChar& b) {
  if (!(a.structure.m == b.structure.m)) throw std::invalid_argument("char_mul: different moduli");
  GroupChar c = a;
  for (std::size_t i = 0; i < c.exps.size(); ++i) c.exps[i] = (a.exps[i] + b.exps[i]) % a.structure.factors[i].order;
  return c;
}

GroupChar char_pow(const GroupChar& a, long k) {
  GroupChar c = a;
  for (std::size_t i = 0; i < c.exps.size(); ++i)
    c.exps[i] = mulmod(mod_floor(k, a.structure.factors[i].order), a.exps[i], a.structure.factors[i].order);
  return c;
}

bool same_char(const GroupChar& a, const GroupChar& b) {
  return a.structure.delta == b.structure.delta && a.structure.m == b.structure.m && a.exps == b.exps;
}

std::vector<GroupChar> all_characters(const UnitsStructure& S) {
  std::vector<GroupChar> out;
  std::vector<long> orders = S.orders();
  std::vector<long> c(orders.size(), 0);
  for (long idx = 0; idx < S.total_order; ++idx) {
    long t = idx;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      c[i] = t % orders[i];
      t /= orders[i];
    }
    out.push_back(GroupChar{S, c});
  }
  return out;
}

// ---------------------------------------------------------------- Dirichlet

long DirichletChar::order() const {
  long o = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) o = lcm_l(o, Angle(exps[i], units.orders[i]).den);
  return o;
}

bool DirichletChar::is_trivial() const {
  return std::all_of(exps.begin(), exps.end(), [](long c) { return c == 0; });
}

std::optional<Angle> DirichletChar::operator()(long a) const {
  if (gcd_l(a, units.Q) != 1) return std::nullopt;
  std::vector<long> v = units.dlog(mod_floor(a, units.Q));
  Angle r;
  for (std::size_t i = 0; i < v.size(); ++i) r = r + Angle(mulmod(v[i], exps[i], units.orders[i]), units.orders[i]);
  return r;
}

int DirichletChar::sign(long a) const {
  auto v = (*this)(a);
  if (!v) return 0;
  if (v->num == 0) return 1;
  if (v->den == 2) return -1;
  throw std::logic_error("DirichletChar::sign on a non-quadratic value");
}

long DirichletChar::conductor() const {
  long Q = units.Q;
  for (long d : divisors(Q)) {
    bool ok = true;
    for (long t = 0; t < Q / d && ok; ++t) {
      long a = 1 + d * t;
      if (gcd_l(a, Q) != 1) continue;
      if (!(*this)(a)->is_zero()) ok = false;
    }
    if (ok) return d;
  }
  return Q;
}

DirichletChar trivial_dirichlet(long Q) {
  DirichletChar c{integer_units(Q), {}};
  c.exps.assign(c.units.gens.size(), 0);
  return c;
}

namespace {

DirichletChar dirichlet_from_values(long Q, const std::function<Angle(long)>& value) {
  DirichletChar c = trivial_dirichlet(Q);
  for (std::size_t j = 0; j < c.units.gens.size(); ++j) {
    Angle v = value(c.units.gens[j]);
    long o = c.units.orders[j];
    if (o % v.den != 0) throw std::logic_error("character value incompatible with generator order");
    c.exps[j] = v.num * (o / v.den);
  }
  return c;
}

}  // namespace

DirichletChar kronecker_char(long delta) {
  if (!is_fundamental(delta)) throw std::invalid_argument("kronecker_char: not a fundamental discriminant");
  return dirichlet_from_values(std::labs(delta), [&](long a) { return Angle(kronecker(delta, a) == 1 ? 0 : 1, 2); });
}

DirichletChar restrict_to_Z(const GroupChar& eta) {
  long M = to_long(eta.structure.m.norm().get_num());
  return dirichlet_from_values(M, [&](long a) { return eta(QuadElem(a)); });
}

bool dirichlet_equal(const DirichletChar& a, const DirichletChar& b) {
  long L = lcm_l(a.modulus(), b.modulus());
  IntegerUnits U = integer_units(L);
  for (long g : U.gens)
    if (!(*a(g) == *b(g))) return false;
  return true;
}

// ---------------------------------------------------------------- enumeration

std::vector<GroupChar> enumerate_eta(const FieldE& E, const QIdeal& m, const EtaQuery& q) {
  return enumerate_eta(E, units_structure(E, m), q);
}

std::vector<GroupChar> enumerate_eta(const FieldE& E, const UnitsStructure& S, const EtaQuery& q) {
  std::vector<long> orders = S.orders();
  long T = 1;
  for (long o : orders) T = lcm_l(T, o);
  struct Constraint {
    std::vector<long> v;
    long target;  // multiple of 1/T
  };
  std::vector<Constraint> cons;
  bool impossible = false;
  auto add = [&](const QuadElem& z, const Angle& t) {
    std::vector<long> v = dlog(z, S);
    if (T % t.den != 0) {
      // a value of order not dividing the exponent: only possible if it is trivial
      impossible = true;
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mulmod(v[i], T / orders[i], T);
    cons.push_back(Constraint{v, t.num * (T / t.den)});
  };
  long M = to_long(S.m.norm().get_num());
  if (q.match_chi_E) {
    long L = lcm_l(M, -E.delta());
    for (long a : integer_units(L).gens) add(QuadElem(a), Angle(kronecker(E.delta(), a) == 1 ? 0 : 1, 2));
  }
  if (q.weight) {
    auto mu = E.roots_of_unity();
    long w = static_cast<long>(mu.size());
    for (long k = 1; k < w; ++k) add(mu[static_cast<std::size_t>(k)], Angle(-*q.weight * k, w));
  }
  std::vector<GroupChar> out;
  if (impossible) return out;
  std::vector<long> c(orders.size(), 0);
  for (long idx = 0; idx < S.total_order; ++idx) {
    long t = idx;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      c[i] = t % orders[i];
      t /= orders[i];
    }
    bool ok = true;
    for (auto& con : cons) {
      long s = 0;
      for (std::size_t i = 0; i < c.size(); ++i) s = (s + mulmod(c[i], con.v[i], T)) % T;
      if (s != con.target) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    GroupChar g{S, c};
    long ord = g.order();
    if (q.order_equals && ord != *q.order_equals) continue;
    if (q.order_divides && *q.order_divides % ord != 0) continue;
    out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------- conductors

namespace {

// Generators of ker((o/m)^x -> (o/m')^x) where m' = m / P for a prime P | m.
std::vector<QuadElem> kernel_generators(const FieldE& E, const UnitsStructure& S, const QIdeal& P, int e) {
  QIdeal msmall = ideal_div(E, S.m, P);
  std::vector<QuadElem> out;
  if (e >= 2) {
    for (auto& x : msmall.zbasis()) out.push_back(QuadElem(1) + x);
  } else {
    for (std::size_t ci = 0; ci < S.components.size(); ++ci) {
      auto& comp = S.components[ci];
      if (!(comp.prime == P)) continue;
      for (std::size_t i = 0; i < comp.factor_count; ++i) out.push_back(S.factors[comp.first_factor + i].gen);
    }
  }
  return out;
}

int valuation_in(const FieldE& E, const QIdeal& m, const QIdeal& P) {
  for (auto& [Q, e] : factor_ideal(E, m))
    if (Q == P) return e;
  return 0;
}

// z = g mod m_small and z = 1 mod the primes of m_big not dividing m_small.
QuadElem lift_unit(const FieldE& E, const QuadElem& g, const QIdeal& m_small, const QIdeal& m_big) {
  QIdeal R = unit_ideal();
  for (auto& [P, e] : factor_ideal(E, m_big))
    if (valuation_in(E, m_small, P) == 0) R = ideal_mul(E, R, ideal_pow(E, P, e));
  if (R.is_unit()) return g;
  if (m_small.is_unit()) return QuadElem(1);
  QuadElem idem = crt_idempotent(E, m_small, R);
  return E.mul(idem, g) + (QuadElem(1) - idem);
}

}  // namespace

bool factors_through(const GroupChar& eta, const QIdeal& m_small) {
  FieldE E = eta.structure.field();
  const QIdeal& m = eta.structure.m;
  if (!ideal_divides(E, m_small, m)) throw std::invalid_argument("factors_through: m' does not divide m");
  // kernel of m -> m' is generated by the kernels along a chain of single-prime steps
  QIdeal cur = m;
  QIdeal quotient = ideal_div(E, m, m_small);
  for (auto& [P, e] : factor_ideal(E, quotient)) {
    for (int k = 0; k < e; ++k) {
      int v = valuation_in(E, cur, P);
      UnitsStructure Scur = units_structure(E, cur);
      for (auto& z : kernel_generators(E, Scur, P, v)) {
        QuadElem lifted = lift_unit(E, z, cur, m);
        if (!eta(lifted).is_zero()) return false;
      }
      cur = ideal_div(E, cur, P);
    }
  }
  return true;
}

GroupChar descend(const GroupChar& eta, const QIdeal& m_small) {
  if (!factors_through(eta, m_small)) throw std::domain_error("descend: character does not factor through m'");
  FieldE E = eta.structure.field();
  UnitsStructure S2 = units_structure(E, m_small);
  GroupChar out = trivial_char(S2);
  for (std::size_t j = 0; j < S2.factors.size(); ++j) {
    Angle v = eta(lift_unit(E, S2.factors[j].gen, m_small, eta.structure.m));
    long o = S2.factors[j].order;
    if (o % v.den != 0) throw std::logic_error("descend: value order does not divide generator order");
    out.exps[j] = v.num * (o / v.den);
  }
  return out;
}

GroupChar inflate(const GroupChar& eta, const QIdeal& m_big) {
  FieldE E = eta.structure.field();
  if (!ideal_divides(E, eta.structure.m, m_big)) throw std::invalid_argument("inflate: m does not divide m_big");
  UnitsStructure S2 = units_structure(E, m_big);
  GroupChar out = trivial_char(S2);
  for (std::size_t j = 0; j < S2.factors.size(); ++j) {
    Angle v = eta(S2.factors[j].gen);
    long o = S2.factors[j].order;
    if (o % v.den != 0) throw std::logic_error("inflate: value order does not divide generator order");
    out.exps[j] = v.num * (o / v.den);
  }
  return out;
}

QIdeal conductor_of(const GroupChar& eta) {
  FieldE E = eta.structure.field();
  GroupChar cur = eta;
  for (auto& [P, e] : factor_ideal(E, eta.structure.m)) {
    for (int k = 0; k < e; ++k) {
      QIdeal smaller = ideal_div(E, cur.structure.m, P);
      int v = valuation_in(E, cur.structure.m, P);
      bool trivial = true;
      for (auto& z : kernel_generators(E, cur.structure, P, v))
        if (!cur(z).is_zero()) {
          trivial = false;
          break;
        }
      if (!trivial) break;
      cur = descend(cur, smaller);
    }
  }
  return cur.structure.m;
}

std::vector<DirichletChar> quad_dirichlet_chars(const std::vector<long>& support) {
  long Q = 1;
  std::vector<long> ps = support;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (long p : ps) {
    if (!is_prime(p)) throw std::invalid_argument("quad_dirichlet_chars: support must consist of primes");
    Q *= p == 2 ? 8 : p;
  }
  DirichletChar base = trivial_dirichlet(Q);
  std::vector<std::size_t> even;
  for (std::size_t j = 0; j < base.units.orders.size(); ++j)
    if (base.units.orders[j] % 2 == 0) even.push_back(j);
  std::vector<DirichletChar> out;
  for (long mask = 0; mask < (1L << even.size()); ++mask) {
    DirichletChar c = base;
    for (std::size_t i = 0; i < even.size(); ++i)
      if (mask >> i & 1) c.exps[even[i]] = c.units.orders[even[i]] / 2;
    out.push_back(c);
  }
  return out;
}

}  // namespace grossen
