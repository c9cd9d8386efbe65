#include "grossen/resunits.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace grossen {

// ---------------------------------------------------------------- residue ring

namespace {

long floor_div128(__int128 a, long b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<long>(q);
}

long mod128(__int128 a, long m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<long>(r);
}

long mod_int(const Int& v, long m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r.get_si();
}

// Integer lattice {(A, 0), (B, C)} of an integral ideal, for fast membership.
struct Lat {
  long A, B, C;
  explicit Lat(const QIdeal& I) {
    if (!I.is_integral()) throw std::domain_error("lattice of a fractional ideal");
    long s = to_long(I.scale.get_num());
    A = s * to_long(I.a);
    B = s * to_long(I.b);
    C = s;
  }
  bool contains(long x, long y) const {
    if (y % C != 0) return false;
    __int128 r = static_cast<__int128>(x) - static_cast<__int128>(y / C) * B;
    return r % A == 0;
  }
};

}  // namespace

ResidueRing::ResidueRing(const FieldE& E, const QIdeal& m) : m_(m), delta_(E.delta()), nm_(E.omega_norm_l()) {
  Lat L(m);
  A_ = L.A;
  B_ = L.B;
  C_ = L.C;
  norm_ = A_ * C_;
}

ResidueRing::Elt ResidueRing::reduce(long x, long y) const {
  long q = floor_div128(y, C_);
  __int128 yy = static_cast<__int128>(y) - static_cast<__int128>(q) * C_;
  __int128 xx = static_cast<__int128>(x) - static_cast<__int128>(q) * B_;
  return Elt{mod128(xx, A_), static_cast<long>(yy)};
}

ResidueRing::Elt ResidueRing::reduce(const QuadElem& z) const {
  auto cvt = [&](const Rat& v) {
    long num = mod_int(v.get_num(), norm_);
    long den = mod_int(v.get_den(), norm_);
    if (norm_ == 1) return 0L;
    return mulmod(num, inv_mod(den, norm_), norm_);
  };
  return reduce(cvt(z.x), cvt(z.y));
}

ResidueRing::Elt ResidueRing::mul(const Elt& a, const Elt& b) const {
  __int128 yy = static_cast<__int128>(a.y) * b.y;
  __int128 x = static_cast<__int128>(a.x) * b.x - yy * nm_;
  __int128 y = static_cast<__int128>(a.x) * b.y + static_cast<__int128>(a.y) * b.x + yy * delta_;
  long q = floor_div128(y, C_);
  __int128 ry = y - static_cast<__int128>(q) * C_;
  __int128 rx = x - static_cast<__int128>(q) * B_;
  return Elt{mod128(rx, A_), static_cast<long>(ry)};
}

ResidueRing::Elt ResidueRing::pow(Elt a, long e) const {
  Elt r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

// ---------------------------------------------------------------- components

namespace detail {

struct ComponentData {
  ResidueRing ring;
  Lat prime;
  std::vector<ResidueRing::Elt> gens;
  std::vector<long> orders;
  mutable std::once_flag once;
  mutable std::vector<std::int32_t> table;

  ComponentData(const FieldE& E, const QIdeal& q, const QIdeal& P) : ring(E, q), prime(P) {}

  void build_table() const {
    std::call_once(once, [this] {
      table.assign(static_cast<std::size_t>(ring.size()), -1);
      std::vector<ResidueRing::Elt> elems{ring.one()};
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t sz = elems.size();
        ResidueRing::Elt gk = ring.one();
        for (long k = 1; k < orders[i]; ++k) {
          gk = ring.mul(gk, gens[i]);
          for (std::size_t j = 0; j < sz; ++j) elems.push_back(ring.mul(elems[j], gk));
        }
      }
      for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        auto& slot = table[static_cast<std::size_t>(ring.index(elems[idx]))];
        if (slot != -1) throw std::logic_error("unit group generators are dependent");
        slot = static_cast<std::int32_t>(idx);
      }
    });
  }
};

struct UnitsData {
  ResidueRing ring;
  std::vector<std::unique_ptr<ComponentData>> comps;
  UnitsData(const FieldE& E, const QIdeal& m) : ring(E, m) {}
};

}  // namespace detail

namespace {

using Elt = ResidueRing::Elt;

long p_order(const ResidueRing& R, Elt x, long p) {
  long k = 1;
  Elt one = R.one();
  while (!(x == one)) {
    x = R.pow(x, p);
    k *= p;
  }
  return k;
}

bool has_exact_order(const ResidueRing& R, const Elt& g, long ord) {
  if (!(R.pow(g, ord) == R.one())) return false;
  for (long q : prime_divisors(ord))
    if (R.pow(g, ord / q) == R.one()) return false;
  return true;
}

// Exact orders plus injectivity on the socle of each primary part.
bool verify_basis(const ResidueRing& R, const std::vector<std::pair<Elt, long>>& basis, long group_order) {
  long prod = 1;
  std::vector<long> qs;
  for (auto& [g, o] : basis) {
    if (o == 1 || !has_exact_order(R, g, o)) return false;
    prod *= o;
    for (long q : prime_divisors(o))
      if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
  }
  if (prod != group_order) return false;
  for (long q : qs) {
    std::vector<Elt> soc;
    for (auto& [g, o] : basis)
      if (o % q == 0) soc.push_back(R.pow(g, o / q));
    long total = 1;
    for (std::size_t i = 0; i < soc.size(); ++i) total *= q;
    for (long c = 1; c < total; ++c) {
      Elt x = R.one();
      long t = c;
      for (auto& s : soc) {
        x = R.mul(x, R.pow(s, t % q));
        t /= q;
      }
      if (x == R.one()) return false;
    }
  }
  return true;
}

std::vector<std::pair<Elt, long>> generic_basis(const ResidueRing& R, const Lat& P, long p, long Np) {
  long N = R.size();
  long u1 = N / Np;
  long cyc = Np - 1;
  std::vector<std::pair<Elt, long>> out;
  if (cyc > 1) {
    for (long idx = 0; idx < N; ++idx) {
      Elt z = R.from_index(idx);
      if (P.contains(z.x, z.y)) continue;
      Elt t = R.pow(z, u1);
      if (has_exact_order(R, t, cyc)) {
        out.emplace_back(t, cyc);
        break;
      }
    }
  }
  if (u1 > 1) {
    std::vector<long> U1;
    for (long idx = 0; idx < N; ++idx) {
      Elt z = R.from_index(idx);
      if (P.contains(z.x - 1, z.y)) U1.push_back(idx);
    }
    std::vector<char> inH(static_cast<std::size_t>(N), 0);
    std::vector<long> H{R.index(R.one())};
    inH[static_cast<std::size_t>(H[0])] = 1;
    std::vector<long> ordH(U1.size());
    while (static_cast<long>(H.size()) < u1) {
      long need = 1;
      for (std::size_t i = 0; i < U1.size(); ++i) {
        Elt x = R.from_index(U1[i]);
        long k = 1;
        while (!inH[static_cast<std::size_t>(R.index(x))]) {
          x = R.pow(x, p);
          k *= p;
        }
        ordH[i] = k;
        need = std::max(need, k);
      }
      std::optional<Elt> pick;
      for (std::size_t i = 0; i < U1.size() && !pick; ++i) {
        if (ordH[i] != need) continue;
        Elt x = R.from_index(U1[i]);
        if (p_order(R, x, p) == need) pick = x;
      }
      if (!pick) throw std::logic_error("p-group basis search failed");
      std::size_t sz = H.size();
      Elt xk = R.one();
      for (long k = 1; k < need; ++k) {
        xk = R.mul(xk, *pick);
        for (std::size_t j = 0; j < sz; ++j) {
          long v = R.index(R.mul(R.from_index(H[j]), xk));
          if (!inH[static_cast<std::size_t>(v)]) {
            inH[static_cast<std::size_t>(v)] = 1;
            H.push_back(v);
          }
        }
      }
      out.emplace_back(*pick, need);
    }
  }
  return out;
}

// 2-adic square root of a (a = 1 mod 8) modulo 2^e.
long dyadic_sqrt(long a, int e) {
  long mod = 1L << e;
  for (long x = 1; x < mod; x += 2)
    if (mulmod(x, x, mod) == mod_floor(a, mod)) return x;
  throw std::logic_error("dyadic_sqrt: no root");
}

std::optional<std::vector<std::pair<Elt, long>>> dyadic_basis(const FieldE& E, const ResidueRing& R, Splitting kind,
                                                               int e) {
  long D = E.delta();
  std::vector<std::pair<Elt, long>> out;
  auto push = [&](const QuadElem& z, long o) {
    if (o > 1) out.emplace_back(R.reduce(z), o);
  };
  if (kind == Splitting::Split) {
    if (e >= 2) push(QuadElem(-1), 2);
    if (e >= 3) push(QuadElem(5), 1L << (e - 2));
    return out;
  }
  if (kind == Splitting::Inert) {
    if (e < 2) return std::nullopt;
    long N = R.size();
    long u1 = N / 4;
    for (long idx = 0; idx < N; ++idx) {
      Elt z = R.from_index(idx);
      if (z.x % 2 == 0 && z.y % 2 == 0) continue;
      Elt t = R.pow(z, u1);
      if (has_exact_order(R, t, 3)) {
        out.emplace_back(t, 3);
        break;
      }
    }
    push(QuadElem(-1), 2);
    // sqrt(5) = sqrt(D) * s with s^2 = 5/D in Z_2
    long mod = 1L << (e + 1);
    long s = dyadic_sqrt(mulmod(5, inv_mod(D, mod), mod), e + 1);
    QuadElem sqrtD = E.sqrt_delta();
    push(Rat(s) * sqrtD, 1L << (e - 1));
    if (e >= 3) push(QuadElem(3) + Rat(2) * sqrtD, 1L << (e - 2));
    return out;
  }
  if (mod_floor(D, 16) == 8 || mod_floor(D, 16) == 0) {  // 8 || D
    if (e < 4) return std::nullopt;
    int r = (e + 1) / 2, s = e / 2;
    push(QuadElem(-1), 2);
    push(QuadElem(5), 1L << (r - 2));
    // sqrt(D/4) = omega - D/2
    push(QuadElem(1 - D / 2, 1), 1L << s);
    return out;
  }
  return std::nullopt;
}

}  // namespace

long unit_group_order(const FieldE& E, const QIdeal& m) {
  if (!m.is_integral()) throw std::domain_error("unit_group_order: fractional modulus");
  Int order = m.norm().get_num();
  for (auto& [P, e] : factor_ideal(E, m)) {
    Int np = P.norm().get_num();
    order = order / np * (np - 1);
  }
  return to_long(order);
}

std::vector<long> UnitsStructure::orders() const {
  std::vector<long> o;
  for (auto& f : factors) o.push_back(f.order);
  return o;
}

QuadElem crt_idempotent(const FieldE& E, const QIdeal& a, const QIdeal& b) {
  std::vector<QuadElem> va = a.zbasis(), vb = b.zbasis();
  std::vector<QuadElem> all{va[0], va[1], vb[0], vb[1]};
  IntMatrix rows;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Int> row{to_int(all[i].y), to_int(all[i].x), 0, 0, 0, 0};
    row[2 + i] = 1;
    rows.push_back(row);
  }
  IntMatrix h = hnf_rows(rows, 2);
  if (h.size() != 2 || h[0][0] != 1 || h[1][1] != 1 || h[1][0] != 0)
    throw std::domain_error("crt_idempotent: ideals are not coprime");
  QuadElem e(0);
  for (std::size_t i = 2; i < 4; ++i) e = e + Rat(h[1][2 + i]) * all[i];
  (void)E;
  return e;
}

std::vector<QuadElem> torsion_meet(const FieldE& E, const QIdeal& m) {
  std::vector<QuadElem> out;
  for (auto& u : E.roots_of_unity())
    if (ideal_contains(E, m, u - QuadElem(1))) out.push_back(u);
  return out;
}

UnitsStructure units_structure(const FieldE& E, const QIdeal& m) {
  if (!m.is_integral() || m.norm() == 0) throw std::domain_error("units_structure: modulus must be a nonzero integral ideal");
  UnitsStructure S;
  S.delta = E.delta();
  S.m = m;
  auto data = std::make_shared<detail::UnitsData>(E, m);
  const ResidueRing& Rm = data->ring;
  auto fac = factor_ideal(E, m);
  for (auto& [P, e] : fac) {
    QIdeal q = ideal_pow(E, P, e);
    auto comp = std::make_unique<detail::ComponentData>(E, q, P);
    const ResidueRing& Rq = comp->ring;
    long p = to_long(ideal_min_integer(P));
    long Np = to_long(P.norm().get_num());
    long group_order = Rq.size() / Np * (Np - 1);
    std::optional<std::vector<std::pair<Elt, long>>> basis;
    if (p == 2) basis = dyadic_basis(E, Rq, factor_prime(E, 2).kind, e);
    if (basis && !verify_basis(Rq, *basis, group_order))
      throw std::logic_error("dyadic unit basis failed verification");
    if (!basis) basis = generic_basis(Rq, comp->prime, p, Np);
    if (!verify_basis(Rq, *basis, group_order)) throw std::logic_error("unit group basis failed verification");

    QIdeal rest = ideal_div(E, m, q);
    QuadElem idem = rest.is_unit() ? QuadElem(1) : crt_idempotent(E, q, rest);
    UnitsComponent info{P, e, q, group_order, S.factors.size(), basis->size()};
    for (auto& [g, o] : *basis) {
      QuadElem lifted = E.mul(idem, Rq.lift(g)) + (QuadElem(1) - idem);
      S.factors.push_back(UnitFactor{Rm.lift(Rm.reduce(lifted)), o});
      comp->gens.push_back(g);
      comp->orders.push_back(o);
    }
    S.components.push_back(info);
    data->comps.push_back(std::move(comp));
  }
  S.total_order = 1;
  for (auto& f : S.factors) S.total_order *= f.order;
  if (S.total_order != unit_group_order(E, m)) throw std::logic_error("unit group order mismatch");
  S.torsion_meet = torsion_meet(E, m);
  S.data = data;
  return S;
}

namespace {

bool denominators_ok(const QuadElem& z, const UnitsStructure& S) {
  Int n = S.m.norm().get_num();
  return gcd(z.x.get_den(), n) == 1 && gcd(z.y.get_den(), n) == 1;
}

}  // namespace

bool is_unit_mod(const QuadElem& z, const UnitsStructure& S) {
  if (!denominators_ok(z, S)) return false;
  for (auto& c : S.data->comps) {
    Elt r = c->ring.reduce(z);
    if (c->prime.contains(r.x, r.y)) return false;
  }
  return true;
}

std::vector<long> dlog(const QuadElem& z, const UnitsStructure& S) {
  if (!is_unit_mod(z, S)) throw std::domain_error("not a unit");
  std::vector<long> out(S.factors.size(), 0);
  for (std::size_t ci = 0; ci < S.data->comps.size(); ++ci) {
    auto& c = *S.data->comps[ci];
    c.build_table();
    long packed = c.table[static_cast<std::size_t>(c.ring.index(c.ring.reduce(z)))];
    if (packed < 0) throw std::logic_error("dlog: residue missing from table");
    std::size_t base = S.components[ci].first_factor;
    for (std::size_t i = 0; i < c.orders.size(); ++i) {
      out[base + i] = packed % c.orders[i];
      packed /= c.orders[i];
    }
  }
  return out;
}

QuadElem rebuild(const std::vector<long>& exps, const UnitsStructure& S) {
  const ResidueRing& R = S.data->ring;
  Elt x = R.one();
  for (std::size_t i = 0; i < exps.size(); ++i)
    x = R.mul(x, R.pow(R.reduce(S.factors[i].gen), mod_floor(exps[i], S.factors[i].order)));
  return R.lift(x);
}

QuadElem reduce_mod(const QuadElem& z, const UnitsStructure& S) {
  const ResidueRing& R = S.data->ring;
  return R.lift(R.reduce(z));
}

bool congruent_mod(const QuadElem& a, const QuadElem& b, const UnitsStructure& S) {
  return reduce_mod(a, S) == reduce_mod(b, S);
}

// ---------------------------------------------------------------- (Z/QZ)^x

long IntegerUnits::order() const {
  long o = 1;
  for (long x : orders) o *= x;
  return o;
}

IntegerUnits integer_units(long Q) {
  if (Q < 1) throw std::invalid_argument("integer_units: Q must be positive");
  IntegerUnits U;
  U.Q = Q;
  if (Q == 1) return U;
  U.prime_powers = factorize(Q);
  for (std::size_t ci = 0; ci < U.prime_powers.size(); ++ci) {
    auto [p, e] = U.prime_powers[ci];
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    std::vector<std::pair<long, long>> local;
    if (p == 2) {
      if (e >= 2) local.emplace_back(pe - 1, 2);
      if (e >= 3) local.emplace_back(5, pe / 4);
    } else {
      long g = 2;
      for (;; ++g) {
        if (g % p == 0) continue;
        bool prim = true;
        for (long q : prime_divisors(p - 1))
          if (pow_mod(g, (p - 1) / q, p) == 1) prim = false;
        if (!prim) continue;
        if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) continue;
        break;
      }
      local.emplace_back(g, pe / p * (p - 1));
    }
    long rest = Q / pe;
    for (auto& [g, o] : local) {
      U.gens.push_back(rest == 1 ? g : crt_pair(g, pe, 1, rest));
      U.orders.push_back(o);
      U.component_of_gen.push_back(ci);
    }
  }
  return U;
}

std::vector<long> IntegerUnits::dlog(long a) const {
  if (gcd_l(a, Q) != 1) throw std::domain_error("not a unit");
  std::vector<long> out(gens.size(), 0);
  for (std::size_t ci = 0; ci < prime_powers.size(); ++ci) {
    auto [p, e] = prime_powers[ci];
    long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    long target = mod_floor(a, pe);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (component_of_gen[i] == ci) idx.push_back(i);
    if (idx.empty()) continue;
    if (idx.size() == 1) {
      long g = mod_floor(gens[idx[0]], pe), x = 1;
      long k = 0;
      while (x != target) {
        x = mulmod(x, g, pe);
        ++k;
        if (k > orders[idx[0]]) throw std::logic_error("integer dlog failed");
      }
      out[idx[0]] = k;
    } else {
      long g1 = mod_floor(gens[idx[0]], pe), g2 = mod_floor(gens[idx[1]], pe);
      bool done = false;
      for (long i = 0; i < orders[idx[0]] && !done; ++i)
        for (long j = 0; j < orders[idx[1]] && !done; ++j)
          if (mulmod(pow_mod(g1, i, pe), pow_mod(g2, j, pe), pe) == target) {
            out[idx[0]] = i;
            out[idx[1]] = j;
            done = true;
          }
      if (!done) throw std::logic_error("integer dlog failed");
    }
  }
  return out;
}

long subgroup_order(const std::vector<long>& orders, const std::vector<std::vector<long>>& vecs) {
  std::size_t k = orders.size();
  if (k == 0) return 1;
  IntMatrix rows;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> r(k, 0);
    r[i] = orders[i];
    rows.push_back(r);
  }
  for (auto& v : vecs) {
    std::vector<Int> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = v[i];
    rows.push_back(r);
  }
  Int index = lattice_index(rows, k);
  Int total = 1;
  for (long o : orders) total *= o;
  return to_long(total / index);
}

RationalImage rational_image(const UnitsStructure& S, std::optional<long> Qopt) {
  FieldE E = S.field();
  long M = to_long(S.m.norm().get_num());
  long Q = Qopt.value_or(M);
  RationalImage out;
  out.Q = Q;
  out.L = lcm_l(Q, M);
  IntegerUnits U = integer_units(out.L), UQ = integer_units(Q);
  out.domain_gens = U.gens;
  std::vector<std::vector<long>> combined;
  for (long a : U.gens) {
    out.images.push_back(dlog(QuadElem(a), S));
    std::vector<long> c = out.images.back();
    for (long v : UQ.dlog(mod_floor(a, Q))) c.push_back(v);
    combined.push_back(c);
  }
  std::vector<long> orders = S.orders();
  out.image_order = subgroup_order(orders, out.images);
  std::vector<long> corders = orders;
  for (long o : UQ.orders) corders.push_back(o);
  long combined_order = subgroup_order(corders, combined);
  out.kernel_order = U.order() / out.image_order;
  out.injective = combined_order == out.image_order;
  out.surjective = out.image_order == S.total_order;
  return out;
}

}  // namespace grossen
