#include "grossen/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace grossen {

bool operator==(const QuadElem& a, const QuadElem& b) { return a.x == b.x && a.y == b.y; }
QuadElem operator+(const QuadElem& a, const QuadElem& b) { return {a.x + b.x, a.y + b.y}; }
QuadElem operator-(const QuadElem& a, const QuadElem& b) { return {a.x - b.x, a.y - b.y}; }
QuadElem operator-(const QuadElem& a) { return {-a.x, -a.y}; }
QuadElem operator*(const Rat& c, const QuadElem& a) { return {c * a.x, c * a.y}; }

bool is_fundamental(long d) {
  if (d == 0 || d == 1) return false;
  long m4 = mod_floor(d, 4);
  if (m4 == 1) return is_squarefree(d);
  if (m4 != 0) return false;
  long q = d / 4;
  long r = mod_floor(q, 4);
  return (r == 2 || r == 3) && is_squarefree(q);
}

FieldE::FieldE(long delta) : delta_(delta) {
  if (delta >= 0 || delta <= -(1L << 31) || !is_fundamental(delta))
    throw std::invalid_argument("not a negative fundamental discriminant: " + std::to_string(delta));
  tr_ = delta;
  nm_ = (Int(delta) * delta - delta) / 4;
  nm_l_ = to_long(nm_);
}

QuadElem FieldE::sqrt_delta() const { return QuadElem(-delta_, 2); }

QuadElem FieldE::mul(const QuadElem& a, const QuadElem& b) const {
  Rat yy = a.y * b.y;
  return QuadElem(a.x * b.x - Rat(nm_) * yy, a.x * b.y + a.y * b.x + Rat(tr_) * yy);
}

QuadElem FieldE::pow(const QuadElem& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  QuadElem r(1), b(a);
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

QuadElem FieldE::conj(const QuadElem& a) const { return QuadElem(a.x + a.y * tr_, -a.y); }

Rat FieldE::norm(const QuadElem& a) const { return a.x * a.x + Rat(tr_) * a.x * a.y + Rat(nm_) * a.y * a.y; }

Rat FieldE::trace(const QuadElem& a) const { return 2 * a.x + Rat(tr_) * a.y; }

QuadElem FieldE::inv(const QuadElem& a) const {
  Rat n = norm(a);
  if (n == 0) throw std::domain_error("inverse of zero");
  return (Rat(1) / n) * conj(a);
}

long FieldE::unit_count() const { return delta_ == -3 ? 6 : delta_ == -4 ? 4 : 2; }

std::vector<QuadElem> FieldE::roots_of_unity() const {
  long w = unit_count();
  QuadElem gen = w == 2 ? QuadElem(-1) : QuadElem(2, 1);
  std::vector<QuadElem> out{QuadElem(1)};
  for (long k = 1; k < w; ++k) out.push_back(mul(out.back(), gen));
  return out;
}

Complex FieldE::embed(const QuadElem& a) const {
  Real half_im = sqrt(Real(-delta_)) / Real(2L);
  Real re = Real(a.x) + Real(a.y) * Real(delta_) / Real(2L);
  Real im = Real(a.y) * half_im;
  return Complex(re, im);
}

// ---------------------------------------------------------------- ideals

std::vector<QuadElem> QIdeal::zbasis() const {
  return {QuadElem(scale * a, 0), QuadElem(scale * b, scale)};
}

QIdeal unit_ideal() { return QIdeal{}; }

QIdeal rational_ideal(const Rat& c) {
  if (c == 0) throw std::domain_error("zero ideal");
  QIdeal I;
  I.scale = abs(c);
  return I;
}

QIdeal ideal_from_zspan(const FieldE& E, const std::vector<QuadElem>& gens) {
  Int den = 1;
  for (auto& g : gens) {
    den = lcm(den, g.x.get_den());
    den = lcm(den, g.y.get_den());
  }
  IntMatrix rows;
  for (auto& g : gens) {
    Rat x = g.x * den, y = g.y * den;
    rows.push_back({to_int(y), to_int(x)});
  }
  IntMatrix h = hnf_rows(rows, 2);
  if (h.size() != 2) throw std::domain_error("module does not have rank 2");
  const Int& C = h[0][0];
  const Int& B = h[0][1];
  const Int& A = h[1][1];
  if (A % C != 0 || B % C != 0) throw std::logic_error("Z-span is not an o_E-module");
  QIdeal I;
  I.a = A / C;
  I.b = B / C;
  I.b %= I.a;
  if (I.b < 0) I.b += I.a;
  I.scale = Rat(C, den);
  I.scale.canonicalize();
  Int nb = I.b * I.b + E.omega_trace() * I.b + E.omega_norm();
  if (nb % I.a != 0) throw std::logic_error("Z-span is not closed under omega");
  return I;
}

QIdeal ideal_from_generators(const FieldE& E, const std::vector<QuadElem>& gens) {
  std::vector<QuadElem> span;
  for (auto& g : gens) {
    span.push_back(g);
    span.push_back(E.mul(g, E.omega()));
  }
  return ideal_from_zspan(E, span);
}

QIdeal principal_ideal(const FieldE& E, const QuadElem& alpha) {
  if (alpha.is_zero()) throw std::domain_error("zero ideal");
  return ideal_from_generators(E, {alpha});
}

QIdeal hnf_reduce(const FieldE& E, const QIdeal& I) { return ideal_from_zspan(E, I.zbasis()); }

QIdeal ideal_mul(const FieldE& E, const QIdeal& I, const QIdeal& J) {
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  std::vector<QuadElem> gens;
  QuadElem i0(I.a, 0), i1(I.b, 1), j0(J.a, 0), j1(J.b, 1);
  gens.push_back(E.mul(i0, j0));
  gens.push_back(E.mul(i0, j1));
  gens.push_back(E.mul(i1, j0));
  gens.push_back(E.mul(i1, j1));
  QIdeal K = ideal_from_zspan(E, gens);
  K.scale *= I.scale * J.scale;
  return K;
}

QIdeal ideal_inv(const FieldE& E, const QIdeal& I) {
  QIdeal c = ideal_conj(E, I);
  c.scale /= I.norm();
  return c;
}

QIdeal ideal_pow(const FieldE& E, const QIdeal& I, long e) {
  if (e < 0) return ideal_pow(E, ideal_inv(E, I), -e);
  QIdeal r = unit_ideal(), b = I;
  while (e > 0) {
    if (e & 1) r = ideal_mul(E, r, b);
    e >>= 1;
    if (e) b = ideal_mul(E, b, b);
  }
  return r;
}

QIdeal ideal_conj(const FieldE& E, const QIdeal& I) {
  std::vector<QuadElem> gens;
  for (auto& g : I.zbasis()) gens.push_back(E.conj(g));
  return ideal_from_zspan(E, gens);
}

QIdeal ideal_add(const FieldE& E, const QIdeal& I, const QIdeal& J) {
  std::vector<QuadElem> gens = I.zbasis();
  for (auto& g : J.zbasis()) gens.push_back(g);
  return ideal_from_zspan(E, gens);
}

QIdeal ideal_div(const FieldE& E, const QIdeal& I, const QIdeal& J) { return ideal_mul(E, I, ideal_inv(E, J)); }

Rat ideal_norm(const QIdeal& I) { return I.norm(); }

bool ideal_contains(const FieldE&, const QIdeal& I, const QuadElem& z) {
  Rat x = z.x / I.scale, y = z.y / I.scale;
  if (y.get_den() != 1) return false;
  Rat r = x - y * Rat(I.b);
  if (r.get_den() != 1) return false;
  return r.get_num() % I.a == 0;
}

bool ideal_divides(const FieldE& E, const QIdeal& I, const QIdeal& J) {
  for (auto& g : J.zbasis())
    if (!ideal_contains(E, I, g)) return false;
  return true;
}

bool ideals_coprime(const FieldE& E, const QIdeal& I, const QIdeal& J) { return ideal_add(E, I, J).is_unit(); }

Int ideal_min_integer(const QIdeal& I) {
  if (!I.is_integral()) throw std::domain_error("ideal_min_integer on a fractional ideal");
  return I.scale.get_num() * I.a;
}

namespace {

long valuation(Int n, long p) {
  long v = 0;
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::vector<std::pair<QIdeal, int>> factor_ideal(const FieldE& E, const QIdeal& I) {
  Int num = I.scale.get_num(), den = I.scale.get_den();
  std::set<long> ps;
  for (const Int* v : std::initializer_list<const Int*>{&num, &den, &I.a})
    if (*v != 1)
      for (long p : prime_divisors(to_long(*v))) ps.insert(p);
  QIdeal J;  // primitive part
  J.a = I.a;
  J.b = I.b;
  std::vector<std::pair<QIdeal, int>> out;
  for (long p : ps) {
    SplitType st = factor_prime(E, p);
    int ram = st.kind == Splitting::Ramified ? 2 : 1;
    long vs = valuation(num, p) - valuation(den, p);
    for (auto& P : st.primes) {
      int e = 0;
      if (J.a % p == 0) {
        QIdeal Pk = P;
        while (ideal_divides(E, Pk, J)) {
          ++e;
          Pk = ideal_mul(E, Pk, P);
        }
      }
      int total = e + static_cast<int>(vs) * ram;
      if (total != 0) out.emplace_back(P, total);
    }
  }
  std::sort(out.begin(), out.end(), [](auto& l, auto& r) { return l.first < r.first; });
  return out;
}

int kronecker(long delta, long n) {
  if (!is_fundamental(delta)) throw std::invalid_argument("kronecker: not a fundamental discriminant");
  return kronecker_symbol(delta, n);
}

SplitType factor_prime(const FieldE& E, long p) {
  if (!is_prime(p)) throw std::invalid_argument("factor_prime: not a prime");
  long D = E.delta();
  int k = kronecker_symbol(D, p);
  SplitType st{Splitting::Inert, p, {}};
  if (k == -1) {
    st.primes.push_back(rational_ideal(p));
    return st;
  }
  st.kind = k == 0 ? Splitting::Ramified : Splitting::Split;
  // roots b of b^2 + D b + N(omega) mod p
  std::vector<long> roots;
  long nm = mod_floor(E.omega_norm_l(), p);
  if (p == 2) {
    for (long b = 0; b < 2; ++b)
      if (mod_floor(b * b + D * b + nm, 2) == 0) roots.push_back(b);
  } else {
    long s = *sqrt_mod_prime(D, p);
    long inv2 = (p + 1) / 2;
    for (long sg : {s, p - s}) {
      long b = mulmod(mod_floor(sg - D, p), inv2, p);
      if (std::find(roots.begin(), roots.end(), b) == roots.end()) roots.push_back(b);
    }
  }
  std::sort(roots.begin(), roots.end());
  for (long b : roots) {
    QIdeal P;
    P.a = p;
    P.b = b;
    st.primes.push_back(P);
  }
  return st;
}

std::optional<QuadElem> is_principal(const FieldE& E, const QIdeal& I) {
  const Int& a = I.a;
  long D = E.delta();
  long absD = -D;
  Int Y = isqrt(4 * a / absD);
  std::vector<QuadElem> found;
  for (Int y = -Y; y <= Y; ++y) {
    Int R = 4 * a - absD * y * y;
    if (R < 0) continue;
    auto r = exact_root(R, 2);
    if (!r) continue;
    for (int sg : {1, -1}) {
      Int x2 = sg * *r - y * D;
      if (x2 % 2 != 0) continue;
      QuadElem g(Rat(x2 / 2), Rat(y));
      if (ideal_contains(E, QIdeal{I.a, I.b, Rat(1)}, g)) found.push_back(g);
      if (*r == 0) break;
    }
  }
  if (found.empty()) return std::nullopt;
  auto key = [](const QuadElem& g) {
    int cls = g.y > 0 ? 0 : (g.y == 0 && g.x > 0 ? 1 : 2);
    int xs = g.x >= 0 ? 0 : 1;
    return std::make_tuple(cls, xs, abs(g.y), abs(g.x));
  };
  auto best = std::min_element(found.begin(), found.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
  return I.scale * *best;
}

std::optional<QuadElem> nth_root_in_E(const FieldE& E, const QuadElem& z, int n) {
  if (z.is_zero()) throw std::domain_error("root of zero");
  if (n != 2 && n != 3) throw std::invalid_argument("nth_root_in_E supports n = 2, 3");
  Int c = lcm(z.x.get_den(), z.y.get_den());
  Rat cn = rpow(Rat(c), n);
  QuadElem zz = cn * z;
  Int N = to_int(E.norm(zz));
  Int T0 = to_int(E.trace(zz));
  auto nroot = exact_root(N, static_cast<unsigned>(n));
  if (!nroot) return std::nullopt;
  const Int& nw = *nroot;
  std::vector<Int> traces;
  if (n == 2) {
    auto t = exact_root(T0 + 2 * nw, 2);
    if (!t) return std::nullopt;
    traces = {*t, -*t};
  } else {
    // T^3 - 3 nw T - T0 = 0; the three real roots are 2 sqrt(nw) cos(phi/3 + 2 pi k/3)
    Real s = sqrt(Real(nw));
    Real denom = Real(2L) * s * s * s;
    Real cphi = Real(T0) / denom;
    if (cphi > Real(1L)) cphi = Real(1L);
    if (cphi < Real(-1L)) cphi = Real(-1L);
    Real phi = atan2(sqrt(Real(1L) - cphi * cphi), cphi);
    for (int k = 0; k < 3; ++k) {
      Real t = Real(2L) * s * cos((phi + Real(2L * k) * Real::pi()) / Real(3L));
      Int base = t.round();
      for (long d = -1; d <= 1; ++d) {
        Int T = base + d;
        if (T * T * T - 3 * nw * T == T0 && std::find(traces.begin(), traces.end(), T) == traces.end())
          traces.push_back(T);
      }
    }
  }
  long D = E.delta();
  for (auto& T : traces) {
    Int v2 = T * T - 4 * nw;
    if (v2 % D != 0) continue;
    v2 /= D;
    auto v = exact_root(v2, 2);
    if (!v) continue;
    for (int sg : {1, -1}) {
      Int vv = sg * *v;
      Int u2 = T - vv * D;
      if (u2 % 2 != 0) continue;
      QuadElem w(Rat(u2 / 2), Rat(vv));
      if (E.pow(w, n) == zz) return (Rat(1) / Rat(c)) * w;
    }
  }
  return std::nullopt;
}

std::optional<QuadElem> is_square_in_E(const FieldE& E, const QuadElem& z) { return nth_root_in_E(E, z, 2); }
std::optional<QuadElem> is_cube_in_E(const FieldE& E, const QuadElem& z) { return nth_root_in_E(E, z, 3); }

// ---------------------------------------------------------------- forms

long form_discriminant(const Form& f) { return f.b * f.b - 4 * f.a * f.c; }

namespace {

long floor_div_l(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void normalize(Form& f, long D) {
  long r = floor_div_l(f.a - f.b, 2 * f.a);
  f.b += 2 * r * f.a;
  f.c = static_cast<long>((static_cast<__int128>(f.b) * f.b - D) / (4 * static_cast<__int128>(f.a)));
}

}  // namespace

Form reduce_form(const Form& g) {
  Form f = g;
  long D = form_discriminant(f);
  normalize(f, D);
  while (f.a > f.c) {
    std::swap(f.a, f.c);
    f.b = -f.b;
    normalize(f, D);
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

Form compose_forms(const Form& f1in, const Form& f2in) {
  Form f1 = f1in, f2 = f2in;
  long D = form_discriminant(f1);
  if (f1.a > f2.a) std::swap(f1, f2);
  long s = (f1.b + f2.b) / 2;
  long n = f2.b - s;
  long y1, d;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    d = f1.a;
  } else {
    long u, v;
    d = ext_gcd(f2.a, f1.a, u, v);
    y1 = u;
  }
  long x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    long u, v;
    d1 = ext_gcd(s, d, u, v);
    x2 = u;
    y2 = -v;
  }
  long v1 = f1.a / d1, v2 = f2.a / d1;
  __int128 rr = (static_cast<__int128>(y1) * y2 % v1) * n - static_cast<__int128>(x2) * f2.c;
  long r = static_cast<long>(((rr % v1) + v1) % v1);
  long b3 = f2.b + 2 * v2 * r;
  long a3 = v1 * v2;
  long c3 = static_cast<long>((static_cast<__int128>(b3) * b3 - D) / (4 * static_cast<__int128>(a3)));
  return reduce_form(Form{a3, b3, c3});
}

Form principal_form(long D) {
  long b = mod_floor(D, 2);
  return Form{1, b, (b * b - D) / 4};
}

Form inverse_form(const Form& f) { return reduce_form(Form{f.a, -f.b, f.c}); }

std::vector<Form> reduced_forms(long D) {
  std::vector<Form> out;
  long absD = -D;
  for (long a = 1; 3 * a * a <= absD; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if (mod_floor(b - D, 2) != 0) continue;
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (gcd_l(gcd_l(a, b), c) != 1) continue;
      out.push_back(Form{a, b, c});
    }
  }
  return out;
}

Form form_of_ideal(const FieldE& E, const QIdeal& I) {
  long a = to_long(I.a), b = to_long(I.b), D = E.delta();
  long B = -2 * b - D;
  long C = static_cast<long>((static_cast<__int128>(B) * B - D) / (4 * static_cast<__int128>(a)));
  return reduce_form(Form{a, B, C});
}

QIdeal ideal_of_form(const FieldE& E, const Form& f) {
  long D = E.delta();
  if (form_discriminant(f) != D) throw std::invalid_argument("form discriminant mismatch");
  QIdeal I;
  I.a = f.a;
  I.b = mod_floor((-f.b - D) / 2, f.a);
  return I;
}

// ---------------------------------------------------------------- class groups

namespace {

struct FormGroup {
  long D;
  std::vector<Form> elems;
  std::map<Form, std::size_t> index;
  Form one;

  explicit FormGroup(long d) : D(d), elems(reduced_forms(d)), one(principal_form(d)) {
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  }
  std::size_t size() const { return elems.size(); }
  Form mul(const Form& a, const Form& b) const { return compose_forms(a, b); }
  long order(const Form& f) const {
    Form x = f;
    long k = 1;
    while (x != one) {
      x = mul(x, f);
      ++k;
    }
    return k;
  }
  // smallest k >= 1 with f^k in H
  long order_mod(const Form& f, const std::set<Form>& H) const {
    Form x = f;
    long k = 1;
    while (!H.count(x)) {
      x = mul(x, f);
      ++k;
    }
    return k;
  }
};

std::set<Form> extend_subgroup(const FormGroup& G, const std::set<Form>& H, const Form& g, long ord) {
  std::set<Form> out;
  for (const Form& h : H) {
    Form x = h;
    for (long i = 0; i < ord; ++i) {
      out.insert(x);
      x = G.mul(x, g);
    }
  }
  return out;
}

}  // namespace

ClassGroup class_group(const FieldE& E, const QIdeal& coprime_to, int alternate) {
  long D = E.delta();
  FormGroup G(D);
  ClassGroup cg;
  cg.delta = D;
  cg.h = static_cast<long>(G.size());
  cg.coprime_to = coprime_to;

  std::set<long> avoid;
  Rat nm = coprime_to.norm();
  for (const Int* v : {&nm.get_num(), &nm.get_den()})
    if (*v != 1)
      for (long p : prime_divisors(to_long(*v))) avoid.insert(p);

  std::set<Form> H{G.one};
  std::vector<std::pair<QIdeal, long>> chosen;
  while (static_cast<long>(H.size()) < cg.h) {
    long need = 1;
    for (const Form& f : G.elems) need = std::max(need, G.order_mod(f, H));
    std::optional<std::pair<QIdeal, Form>> pick;
    for (int pass = 0; pass < 2 && !pick; ++pass) {
      int skip = alternate;
      for (long p = 2; !pick && p < 10000000; ++p) {
        if (!is_prime(p) || avoid.count(p)) continue;
        int k = kronecker_symbol(D, p);
        if (k == -1 || (k == 0 && pass == 0)) continue;
        SplitType st = factor_prime(E, p);
        bool eligible_here = false;
        for (auto& P : st.primes) {
          Form f = form_of_ideal(E, P);
          if (G.order_mod(f, H) == need && G.order(f) == need) {
            eligible_here = true;
            if (skip == 0) {
              pick = std::make_pair(P, f);
              break;
            }
          }
        }
        if (eligible_here && !pick) --skip;
      }
    }
    if (!pick) throw std::runtime_error("class_group: no prime generator found");
    H = extend_subgroup(G, H, pick->second, need);
    chosen.emplace_back(pick->first, need);
  }
  std::reverse(chosen.begin(), chosen.end());
  for (auto& [P, n] : chosen) {
    cg.gens.push_back(P);
    cg.orders.push_back(n);
    auto theta = is_principal(E, ideal_pow(E, P, n));
    if (!theta) throw std::logic_error("class_group: t^n not principal");
    cg.thetas.push_back(*theta);
  }
  cg.exponent = cg.orders.empty() ? 1 : cg.orders.back();

  auto table = std::make_shared<std::map<Form, std::vector<long>>>();
  std::vector<Form> gf;
  for (auto& P : cg.gens) gf.push_back(form_of_ideal(E, P));
  std::vector<long> exps(cg.gens.size(), 0);
  // mixed-radix walk over all exponent vectors
  for (long idx = 0; idx < cg.h; ++idx) {
    long t = idx;
    Form x = G.one;
    for (std::size_t i = 0; i < gf.size(); ++i) {
      exps[i] = t % cg.orders[i];
      t /= cg.orders[i];
      for (long k = 0; k < exps[i]; ++k) x = G.mul(x, gf[i]);
    }
    if (!table->emplace(x, exps).second) throw std::logic_error("class_group: generators are not independent");
  }
  if (static_cast<long>(table->size()) != cg.h) throw std::logic_error("class_group: generators do not span");
  cg.dlog_table = table;
  return cg;
}

std::vector<long> class_dlog(const FieldE& E, const QIdeal& I, const ClassGroup& G) {
  if (G.gens.empty()) return {};
  Form f = form_of_ideal(E, I);
  auto it = G.dlog_table->find(f);
  if (it == G.dlog_table->end()) throw std::logic_error("class_dlog: form not in table");
  return it->second;
}

RelationLattice class_group_relations(long D) {
  FieldE E(D);
  RelationLattice out;
  for (long p = 2; 3 * p * p <= -D; ++p) {
    if (!is_prime(p) || kronecker_symbol(D, p) == -1) continue;
    out.generators.push_back(form_of_ideal(E, factor_prime(E, p).primes.front()));
  }
  std::size_t k = out.generators.size();
  Form one = principal_form(D);
  std::map<Form, std::vector<Int>> seen;
  std::deque<Form> queue;
  seen[one] = std::vector<Int>(k, 0);
  queue.push_back(one);
  while (!queue.empty()) {
    Form x = queue.front();
    queue.pop_front();
    std::vector<Int> vx = seen[x];
    for (std::size_t j = 0; j < k; ++j) {
      Form y = compose_forms(x, out.generators[j]);
      std::vector<Int> vy = vx;
      vy[j] += 1;
      auto it = seen.find(y);
      if (it == seen.end()) {
        seen.emplace(y, vy);
        queue.push_back(y);
      } else {
        std::vector<Int> rel(k);
        for (std::size_t i = 0; i < k; ++i) rel[i] = vy[i] - it->second[i];
        bool zero = std::all_of(rel.begin(), rel.end(), [](const Int& v) { return v == 0; });
        if (!zero) out.relations.push_back(rel);
      }
    }
  }
  if (k == 0) {
    out.order = 1;
    return out;
  }
  out.relations = hnf_rows(out.relations, k);
  out.invariants = smith_invariants(out.relations, k);
  out.order = lattice_index(out.relations, k);
  return out;
}

long class_number(long D) { return static_cast<long>(reduced_forms(D).size()); }

long class_group_exponent(long D) {
  FormGroup G(D);
  long e = 1;
  for (const Form& f : G.elems) e = lcm_l(e, G.order(f));
  return e;
}

std::vector<long> enumerate_discriminants(long bound, std::optional<long> exponent) {
  if (bound < 3) throw std::invalid_argument("enumerate_discriminants: bound must be >= 3");
  std::vector<long> out;
  for (long n = 3; n <= bound; ++n) {
    long D = -n;
    if (!is_fundamental(D)) continue;
    if (exponent && class_group_exponent(D) != *exponent) continue;
    out.push_back(D);
  }
  return out;
}

}  // namespace grossen
