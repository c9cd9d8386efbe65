#include "grossen/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace grossen {

void trim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const QPoly& f) {
  QPoly g = f;
  trim(g);
  return static_cast<long>(g.size()) - 1;
}

long degree(const ZPoly& f) {
  ZPoly g = f;
  trim(g);
  return static_cast<long>(g.size()) - 1;
}

QPoly to_qpoly(const ZPoly& f) {
  QPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = Rat(f[i]);
  return g;
}

ZPoly to_zpoly(const QPoly& f) {
  ZPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = to_int(f[i]);
  trim(g);
  return g;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly c(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
  QPoly r = a, d = b;
  trim(r);
  trim(d);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  QPoly q(r.size() - d.size() + 1, Rat(0));
  const Rat& lead = d.back();
  for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(d.size()) - 1; --i) {
    Rat c = r[i] / lead;
    if (c == 0) continue;
    std::size_t shift = i - (d.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] -= c * d[j];
  }
  trim(q);
  trim(r);
  return {q, r};
}

QPoly poly_monic(const QPoly& f) {
  QPoly g = f;
  trim(g);
  if (g.empty()) return g;
  Rat lead = g.back();
  for (auto& c : g) c /= lead;
  return g;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Rat poly_eval(const QPoly& f, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = f.size(); i-- > 0;) v = v * x + f[i];
  return v;
}

ZPoly poly_shift(const ZPoly& f, const Int& t) {
  // Horner with (x + t).
  ZPoly out;
  for (std::size_t i = f.size(); i-- > 0;) {
    ZPoly next(out.size() + 1, Int(0));
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] += out[j];
      next[j] += out[j] * t;
    }
    next[0] += f[i];
    out = std::move(next);
  }
  trim(out);
  return out;
}

ZPoly cyclotomic(long r) {
  if (r < 1) throw std::invalid_argument("cyclotomic: r must be positive");
  // Phi_r = prod_{d | r} (x^d - 1)^{mu(r/d)}
  QPoly num{Rat(1)}, den{Rat(1)};
  for (long d : divisors(r)) {
    long k = r / d;
    int mu = 1;
    for (auto [p, e] : factorize(k)) {
      if (e > 1) mu = 0;
      mu = -mu;
    }
    if (k == 1) mu = 1;
    if (mu == 0) continue;
    QPoly xd(d + 1, Rat(0));
    xd[0] = -1;
    xd[d] = 1;
    if (mu == 1)
      num = poly_mul(num, xd);
    else
      den = poly_mul(den, xd);
  }
  auto [q, rem] = poly_divmod(num, den);
  if (!rem.empty()) throw std::logic_error("cyclotomic: inexact division");
  return to_zpoly(q);
}

namespace {

// Resultant by the Euclidean algorithm over Q.
Rat resultant(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Rat res = 1;
  while (true) {
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    if (db == 0) return res * rpow(b[0], da);
    QPoly r = poly_divmod(a, b).second;
    if (r.empty()) return 0;
    long dr = static_cast<long>(r.size()) - 1;
    // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
    if ((da * db) % 2) res = -res;
    res *= rpow(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

}  // namespace

Rat poly_discriminant(const QPoly& f) {
  QPoly g = f;
  trim(g);
  long n = static_cast<long>(g.size()) - 1;
  if (n < 1) throw std::invalid_argument("discriminant of a constant");
  QPoly dg(n);
  for (long i = 1; i <= n; ++i) dg[i - 1] = g[i] * i;
  Rat r = resultant(g, dg);
  Rat sign = (n * (n - 1) / 2) % 2 ? Rat(-1) : Rat(1);
  return sign * r / g.back();
}

Int poly_discriminant(const ZPoly& f) { return to_int(poly_discriminant(to_qpoly(f))); }

FpPoly to_fp(const ZPoly& f, long p) {
  FpPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int r = f[i] % p;
    if (r < 0) r += p;
    g[i] = r.get_si();
  }
  while (!g.empty() && g.back() == 0) g.pop_back();
  return g;
}

namespace {
void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
}  // namespace

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  fp_trim(c);
  return c;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, long p) {
  fp_trim(a);
  FpPoly d = b;
  fp_trim(d);
  if (d.empty()) throw std::domain_error("F_p division by zero");
  if (a.size() < d.size()) return {{}, a};
  FpPoly q(a.size() - d.size() + 1, 0);
  long inv = inv_mod(d.back(), p);
  for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(d.size()) - 1; --i) {
    long c = mulmod(a[i], inv, p);
    if (c == 0) continue;
    std::size_t shift = i - (d.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) a[shift + j] = mod_floor(a[shift + j] - mulmod(c, d[j], p), p);
  }
  fp_trim(q);
  fp_trim(a);
  return {q, a};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

std::vector<std::pair<FpPoly, int>> fp_factor_small(const FpPoly& f0, long p) {
  FpPoly f = f0;
  fp_trim(f);
  if (f.size() > 4) throw std::invalid_argument("fp_factor_small: degree > 3");
  if (f.size() <= 1) return {};
  {
    long inv = inv_mod(f.back(), p);
    for (auto& c : f) c = mulmod(c, inv, p);
  }
  std::vector<std::pair<FpPoly, int>> out;
  // Peel off linear factors by root search; what is left (degree <= 3, no
  // roots) is irreducible.
  for (long x = 0; x < p && f.size() > 1; ++x) {
    int mult = 0;
    FpPoly lin{mod_floor(-x, p), 1};
    while (f.size() > 1) {
      auto [q, r] = fp_divmod(f, lin, p);
      if (!r.empty()) break;
      f = q;
      ++mult;
    }
    if (mult) out.push_back({lin, mult});
  }
  if (f.size() > 1) out.push_back({f, 1});
  return out;
}

std::string poly_to_string(const ZPoly& f, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    Int c = f[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    if (i == 0 || c != 1) os << c.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace grossen
