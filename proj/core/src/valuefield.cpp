#include "grossen/valuefield.hpp"

#include <algorithm>
#include <numeric>

namespace grossen {

// ---------------------------------------------------------------- E(sqrt c)

QuadExt ext_mul(const FieldE& E, long c, const QuadExt& x, const QuadExt& y) {
  QuadElem bb = E.mul(x.b, y.b);
  return QuadExt{E.mul(x.a, y.a) + Rat(c) * bb, E.mul(x.a, y.b) + E.mul(x.b, y.a)};
}

namespace {

// Rational-coefficient multiplication, no field needed.
QuadExt rat_mul(long c, const QuadExt& x, const QuadExt& y) {
  return QuadExt{QuadElem(x.a.x * y.a.x + Rat(c) * x.b.x * y.b.x, 0), QuadElem(x.a.x * y.b.x + x.b.x * y.a.x, 0)};
}

long ext_c(long r) {
  if (r == 4) return -1;
  if (r == 3 || r == 6) return -3;
  return 0;
}

bool ext_eq(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }

std::optional<QuadElem> sqrt_E(const FieldE& E, const QuadElem& z) {
  if (z.is_zero()) return QuadElem(0);
  return nth_root_in_E(E, z, 2);
}

}  // namespace

QuadExt ext_root_of_unity(long r, long k) {
  long c = ext_c(r);
  k = mod_floor(k, std::max(r, 1L));
  if (r <= 2) return QuadExt{QuadElem(k == 0 ? 1 : -1), QuadElem(0)};
  QuadExt z;
  if (r == 4)
    z = QuadExt{QuadElem(0), QuadElem(1)};
  else
    z = QuadExt{QuadElem(Rat(1, 2), 0), QuadElem(Rat(1, 2), 0)};  // zeta_6
  long steps = (r == 3) ? 2 * k : k;
  QuadExt out{QuadElem(1), QuadElem(0)};
  for (long i = 0; i < steps; ++i) out = rat_mul(c, out, z);
  return out;
}

std::optional<QuadExt> ext_sqrt(const FieldE& E, long c, const QuadExt& x) {
  if (c == 0) {
    if (!x.b.is_zero()) return std::nullopt;
    auto s = sqrt_E(E, x.a);
    if (!s) return std::nullopt;
    return QuadExt{*s, QuadElem(0)};
  }
  auto check = [&](const QuadExt& y) { return ext_eq(ext_mul(E, c, y, y), x); };
  if (x.b.is_zero()) {
    if (auto u = sqrt_E(E, x.a)) return QuadExt{*u, QuadElem(0)};
    if (auto v = sqrt_E(E, Rat(1) / Rat(c) * x.a)) return QuadExt{QuadElem(0), *v};
    return std::nullopt;
  }
  // x = (u + v sqrt c)^2 gives N(x) = (u^2 - c v^2)^2 and (a + s)/2 in {u^2, c v^2}.
  QuadElem nrm = E.mul(x.a, x.a) - Rat(c) * E.mul(x.b, x.b);
  auto s = sqrt_E(E, nrm);
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    QuadElem h = Rat(1, 2) * (x.a + Rat(sign) * *s);
    if (auto u = sqrt_E(E, h); u && !u->is_zero()) {
      QuadExt y{*u, E.div(x.b, Rat(2) * *u)};
      if (check(y)) return y;
    }
    if (auto v = sqrt_E(E, Rat(1) / Rat(c) * h); v && !v->is_zero()) {
      QuadExt y{E.div(x.b, Rat(2) * *v), *v};
      if (check(y)) return y;
    }
  }
  return std::nullopt;
}

namespace {

bool is_nth_power_ext(const FieldE& E, long c, const QuadExt& x, long n) {
  if (n == 1) return true;
  if (n == 2) return ext_sqrt(E, c, x).has_value();
  if (n == 3 && c == 0) return x.b.is_zero() && nth_root_in_E(E, x.a, 3).has_value();
  throw std::domain_error("unsupported radical: cube roots over E(zeta_r) are not implemented");
}

QuadExt ext_pow(const FieldE& E, long c, QuadExt x, long e) {
  QuadExt out{QuadElem(1), QuadElem(0)};
  while (e > 0) {
    if (e & 1) out = ext_mul(E, c, out, x);
    e >>= 1;
    if (e) x = ext_mul(E, c, x, x);
  }
  return out;
}

long cyclotomic_degree_over_E(long delta, long r) {
  long ph = euler_phi(r);
  return r % (-delta) == 0 ? ph / 2 : ph;
}

// Radicands gamma_i = zeta_r^{k_i} theta_i^ell in E(zeta_r).
struct RadicalData {
  long c;
  long n;
  std::vector<QuadExt> gammas;
};

RadicalData radical_data(const Grossenchar& psi) {
  const FieldE& E = psi.field();
  const auto& cg = psi.class_group();
  long r = psi.eta_order();
  if (r > 6 || r == 5) throw std::domain_error("unsupported radical: r outside {1, 2, 3, 4, 6}");
  RadicalData d{ext_c(r), 0, {}};
  for (std::size_t i = 0; i < cg.gens.size(); ++i) {
    if (d.n == 0) d.n = cg.orders[i];
    if (cg.orders[i] != d.n || (d.n != 2 && d.n != 3))
      throw std::domain_error("unsupported radical: class group orders must all be 2 or all be 3");
    const auto& rad = psi.algebra().radicals()[i];
    QuadExt z = ext_root_of_unity(r, rad.zeta_exp);
    d.gammas.push_back(QuadExt{E.mul(z.a, rad.e), E.mul(z.b, rad.e)});
  }
  return d;
}

}  // namespace

long value_field_degree(const Grossenchar& psi) {
  const FieldE& E = psi.field();
  long r = psi.eta_order();
  long deg = cyclotomic_degree_over_E(E.delta(), r);
  if (psi.class_group().gens.empty()) return deg;
  RadicalData d = radical_data(psi);
  // Kummer: the radical degree is the size of <gamma_i> modulo n-th powers.
  std::size_t g = d.gammas.size();
  long total = 1;
  for (std::size_t i = 0; i < g; ++i) total *= d.n;
  const ValueAlgebra& A = psi.algebra();
  long powers = 0;
  bool needs_zeta3 = false;
  for (long idx = 0; idx < total; ++idx) {
    QuadExt prod{QuadElem(1), QuadElem(0)};
    AlgElem b = A.one();
    for (std::size_t i = 0, t = idx; i < g; ++i, t /= d.n)
      if (long e = static_cast<long>(t % d.n)) {
        prod = ext_mul(E, d.c, prod, ext_pow(E, d.c, d.gammas[i], e));
        b = A.mul(b, A.pow(A.beta(i), e));
      }
    if (!is_nth_power_ext(E, d.c, prod, d.n)) continue;
    ++powers;
    // Cube roots without zeta_3 in E: when gamma = c^3, the chosen root is
    // c zeta_3^j, and j != 0 brings zeta_3 into the value field.
    if (d.n == 3 && d.c == 0 && idx != 0) {
      Complex cb = A.embed(A.from_quad(*nth_root_in_E(E, prod.a, 3)));
      if (abs(A.embed(b) - cb).to_double() > 1e-30 * (1 + abs(cb).to_double())) needs_zeta3 = true;
    }
  }
  return deg * (total / powers) * (needs_zeta3 ? 2 : 1);
}

// ---------------------------------------------------------------- Q1, R1

Q1Verdict check_Q1_data(const FieldE& E, const std::vector<QuadElem>& thetas, long n, long ell) {
  if (n != 2 && n != 3) throw std::domain_error("check_Q1: only orders 2 and 3 are supported");
  std::vector<QuadElem> x;
  for (const auto& t : thetas) x.push_back(E.pow(t, ell));
  std::size_t g = x.size();
  Q1Verdict v;
  if (n == 3) {
    // -1 is a cube, so signs play no role. E(x^(1/3)) = E(y^(1/3)) iff x y or x y^2 is a cube.
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = i + 1; j < g; ++j) {
        bool same = is_cube_in_E(E, E.mul(x[i], x[j])).has_value() ||
                    is_cube_in_E(E, E.mul(x[i], E.mul(x[j], x[j]))).has_value();
        if (!same) return v;
      }
    v.holds = true;
    v.signs.assign(g, 1);
    return v;
  }
  for (long mask = 0; mask < (1L << g); ++mask) {
    std::vector<int> eps(g);
    for (std::size_t i = 0; i < g; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
    bool ok = true;
    for (std::size_t i = 0; i < g && ok; ++i)
      for (std::size_t j = i + 1; j < g && ok; ++j) {
        QuadElem p = Rat(eps[i] * eps[j]) * E.mul(x[i], x[j]);
        ok = is_square_in_E(E, p).has_value();
      }
    if (ok) {
      v.holds = true;
      v.signs = eps;
      return v;
    }
  }
  return v;
}

Q1Verdict check_Q1(const FieldE& E, const ClassGroup& cg, long ell) {
  if (cg.is_cyclic()) throw std::invalid_argument("Q1 not applicable");
  long n = cg.orders.front();
  for (long o : cg.orders)
    if (o != n) throw std::domain_error("check_Q1: mixed generator orders are not supported");
  return check_Q1_data(E, cg.thetas, n, ell);
}

Q1Verdict check_Q1(const FieldE& E, long ell) { return check_Q1(E, class_group(E), ell); }

R1Verdict check_R1(const FieldE& E, const ClassGroup& cg, long ell, long r) {
  long c = ext_c(r);
  if (c == 0) throw std::domain_error("check_R1: r must be 3, 4 or 6");
  long w = lcm_l(r, 2);
  R1Verdict v;
  v.holds = !cg.gens.empty();
  for (std::size_t i = 0; i < cg.gens.size(); ++i) {
    QuadElem t = E.pow(cg.thetas[i], ell);
    std::vector<long> ks;
    for (long k = 0; k < w; ++k) {
      QuadExt z = ext_root_of_unity(w, k);
      QuadExt x{E.mul(z.a, t), E.mul(z.b, t)};
      if (is_nth_power_ext(E, c, x, cg.orders[i])) ks.push_back(k);
    }
    if (ks.empty()) v.holds = false;
    v.witnesses.push_back(std::move(ks));
  }
  return v;
}

R1Verdict check_R1(const FieldE& E, long ell, long r) { return check_R1(E, class_group(E), ell, r); }

// ---------------------------------------------------------------- discriminants

long quadratic_field_discriminant(const Int& n) {
  if (n == 0) throw std::invalid_argument("quadratic_field_discriminant: zero");
  long sf = squarefree_part(to_long(n));
  if (sf == 1) throw std::invalid_argument("quadratic_field_discriminant: square radicand");
  return mod_floor(sf, 4) == 1 ? sf : 4 * sf;
}

namespace {

using QVec = std::vector<Rat>;

// Arithmetic in Q[x]/(f), f monic of degree n, power basis coordinates.
struct PowerBasisField {
  ZPoly f;
  std::size_t n;

  explicit PowerBasisField(ZPoly g) : f(std::move(g)), n(f.size() - 1) {}

  QVec mul(const QVec& a, const QVec& b) const {
    QVec c(2 * n - 1, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i + j] += a[i] * b[j];
    for (std::size_t k = c.size(); k-- > n;) {
      if (c[k] == 0) continue;
      Rat t = c[k];
      c[k] = 0;
      for (std::size_t i = 0; i < n; ++i) c[k - n + i] -= t * Rat(f[i]);
    }
    c.resize(n);
    return c;
  }

  // Matrix of multiplication by a, as rows m[i][j] = coeff of x^i in a * x^j.
  std::vector<QVec> mat(const QVec& a) const {
    std::vector<QVec> m(n, QVec(n));
    QVec e(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(e.begin(), e.end(), Rat(0));
      e[j] = 1;
      QVec col = mul(a, e);
      for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
  }

  Rat trace(const QVec& a) const {
    auto m = mat(a);
    Rat t = 0;
    for (std::size_t i = 0; i < n; ++i) t += m[i][i];
    return t;
  }

  // Characteristic polynomial coefficients (degree <= 3) are all integers.
  bool integral(const QVec& a) const {
    auto m = mat(a);
    if (n == 2) {
      Rat tr = m[0][0] + m[1][1];
      Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      return tr.get_den() == 1 && det.get_den() == 1;
    }
    Rat tr = m[0][0] + m[1][1] + m[2][2];
    Rat minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                 m[1][1] * m[2][2] - m[1][2] * m[2][1];
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return tr.get_den() == 1 && minors.get_den() == 1 && det.get_den() == 1;
  }
};

Rat det3(const std::vector<QVec>& B) {
  if (B.size() == 2) return B[0][0] * B[1][1] - B[0][1] * B[1][0];
  return B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) - B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
         B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0]);
}

// Z-basis (rows) of the module spanned by the given rational rows.
std::vector<QVec> module_basis(const std::vector<QVec>& rows, std::size_t n) {
  Int den = 1;
  for (const auto& r : rows)
    for (const auto& q : r) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntMatrix M;
  for (const auto& r : rows) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = to_int(r[i] * den);
    M.push_back(v);
  }
  IntMatrix H = hnf_rows(M, n);
  std::vector<QVec> out;
  for (const auto& h : H) {
    QVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rat(h[i], den);
    for (auto& q : v) q.canonicalize();
    out.push_back(v);
  }
  return out;
}

// Kernel of a square matrix mod p (rows), as a list of basis vectors.
std::vector<std::vector<long>> kernel_mod_p(std::vector<std::vector<long>> A, long p) {
  std::size_t n = A.size();
  std::vector<long> pivcol;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t piv = row;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(A[piv], A[row]);
    long inv = inv_mod(A[row][c], p);
    for (auto& v : A[row]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || A[i][c] == 0) continue;
      long f = A[i][c];
      for (std::size_t j = 0; j < n; ++j) A[i][j] = mod_floor(A[i][j] - mulmod(f, A[row][j], p), p);
    }
    pivcol.push_back(static_cast<long>(c));
    ++row;
  }
  std::vector<std::vector<long>> ker;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivcol.begin(), pivcol.end(), static_cast<long>(c)) != pivcol.end()) continue;
    std::vector<long> v(n, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivcol.size(); ++r) v[pivcol[r]] = mod_floor(-A[r][c], p);
    ker.push_back(v);
  }
  return ker;
}

// An element of (1/p) O \ O that is integral, if any.
std::optional<QVec> enlarge(const PowerBasisField& K, const std::vector<QVec>& B, long p) {
  std::size_t n = K.n;
  // Integral elements lie in the trace dual: Tr(x w_k) in Z for all k.
  std::vector<std::vector<long>> T(n, std::vector<long>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Rat t = K.trace(K.mul(B[j], B[k]));
      Int ti = to_int(t) % p;
      T[k][j] = mod_floor(ti.get_si(), p);
    }
  auto ker = kernel_mod_p(T, p);
  if (ker.empty()) return std::nullopt;
  long count = 1;
  for (std::size_t i = 0; i < ker.size(); ++i) count *= p;
  for (long idx = 1; idx < count; ++idx) {
    std::vector<long> c(n, 0);
    for (std::size_t i = 0, t = idx; i < ker.size(); ++i, t /= p)
      for (std::size_t j = 0; j < n; ++j) c[j] = (c[j] + static_cast<long>(t % p) * ker[i][j]) % p;
    QVec x(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) x[i] += Rat(c[j]) / Rat(p) * B[j][i];
    if (K.integral(x)) return x;
  }
  return std::nullopt;
}

struct MaximalOrder {
  std::vector<QVec> basis;
  Int disc;
};

MaximalOrder maximal_order(const ZPoly& f) {
  if (f.size() != 3 && f.size() != 4) throw std::invalid_argument("maximal_order: degree 2 or 3 expected");
  if (f.back() != 1) throw std::invalid_argument("maximal_order: polynomial must be monic");
  PowerBasisField K(f);
  std::size_t n = K.n;
  std::vector<QVec> B(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;
  Int D = poly_discriminant(f);
  if (D == 0) throw std::invalid_argument("maximal_order: polynomial is not squarefree");
  Int absD = D < 0 ? Int(-D) : D;
  for (auto [p, e] : factorize(to_long(absD))) {
    if (e < 2 || dedekind_maximal(f, p)) continue;
    while (true) {
      auto x = enlarge(K, B, p);
      if (!x) break;
      std::vector<QVec> rows = B;
      rows.push_back(*x);
      B = module_basis(rows, n);
    }
  }
  Rat dB = det3(B);
  return MaximalOrder{B, to_int(Rat(D) * dB * dB)};
}

}  // namespace

bool dedekind_maximal(const ZPoly& f, long p) {
  FpPoly fb = to_fp(f, p);
  auto facs = fp_factor_small(fb, p);
  FpPoly g{1}, h{1};
  for (auto& [q, e] : facs) {
    g = fp_mul(g, q, p);
    for (int k = 1; k < e; ++k) h = fp_mul(h, q, p);
  }
  // F = (g h - f) / p with integer lifts of g, h.
  auto lift = [](const FpPoly& a) {
    ZPoly z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) z[i] = a[i];
    return z;
  };
  QPoly gh = poly_mul(to_qpoly(lift(g)), to_qpoly(lift(h)));
  QPoly diff = poly_sub(gh, to_qpoly(f));
  ZPoly F;
  for (auto& c : diff) F.push_back(to_int(c / p));
  FpPoly Fb = to_fp(F, p);
  FpPoly d = fp_gcd(fp_gcd(Fb, g, p), h, p);
  return d.size() <= 1;
}

Int field_discriminant(const ZPoly& f) {
  if (f.size() == 3) {
    Int D = f[1] * f[1] - 4 * f[0] * f[2];
    return quadratic_field_discriminant(D);
  }
  return maximal_order(f).disc;
}

bool order_is_p_maximal(const ZPoly& f, long p) {
  if (f.size() == 3) return true;
  MaximalOrder O = maximal_order(f);
  PowerBasisField K(f);
  return !enlarge(K, O.basis, p).has_value();
}

// ---------------------------------------------------------------- rationality field

namespace {

ZPoly real_cyclotomic_poly(long r) {
  // Minimal polynomial of 2 cos(2 pi / r), rounded from its numeric roots.
  std::vector<Complex> roots;
  for (long k = 1; 2 * k < r; ++k)
    if (gcd_l(k, r) == 1) {
      Complex z = Complex::root_of_unity(k, r);
      roots.push_back(Complex(Real(2L) * z.re, Real(0L)));
    }
  std::vector<Complex> coef{Complex(1L)};
  for (const auto& z : roots) {
    std::vector<Complex> next(coef.size() + 1, Complex(0L));
    for (std::size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] -= coef[i] * z;
    }
    coef = next;
  }
  ZPoly f;
  for (auto& c : coef) f.push_back(c.re.round());
  return f;
}

bool has_rational_root(const ZPoly& f) {
  // monic: rational roots are integer divisors of f[0]
  if (f[0] == 0) return true;
  Int a = f[0] < 0 ? Int(-f[0]) : f[0];
  for (long d : divisors(to_long(a)))
    for (long s : {d, -d}) {
      Int v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = v * s + f[i];
      if (v == 0) return true;
    }
  return false;
}

RationalityField quadratic_from_radicand(const Int& R) {
  long sf = squarefree_part(to_long(R));
  return RationalityField{2, ZPoly{Int(-sf), Int(0), Int(1)}, Int(quadratic_field_discriminant(R))};
}

}  // namespace

RationalityField rationality_field(const Grossenchar& psi) {
  const FieldE& E = psi.field();
  long D = E.delta();
  long r = psi.eta_order();
  long d = value_field_degree(psi);
  if (d == 1) return RationalityField{1, ZPoly{Int(0), Int(1)}, Int(1)};
  if (d > 3) throw std::domain_error("unsupported degree");
  long cyc = cyclotomic_degree_over_E(D, r);

  if (d == cyc) {
    // L = E(zeta_r).
    if (r % (-D) == 0) {
      ZPoly f = real_cyclotomic_poly(r);
      return RationalityField{static_cast<int>(d), f, field_discriminant(f)};
    }
    long c = ext_c(r);
    if (c == 0 || d != 2) throw std::domain_error("unsupported degree");
    return quadratic_from_radicand(Int(c * D));
  }

  if (cyc != 1 || psi.class_group().gens.size() != 1) throw std::domain_error("unsupported degree");
  // L = E(gamma^(1/n)), reduced modulo n-th powers to gamma_0 = zeta^k theta or zeta^k conj(theta).
  const auto& cg = psi.class_group();
  long n = cg.orders[0];
  if (n != d) throw std::domain_error("unsupported degree");
  long ell = psi.ell();
  const QuadElem& theta = cg.thetas[0];
  QuadElem base;
  if (mod_floor(ell, n) == 1)
    base = theta;
  else if (n == 3 && mod_floor(ell, 3) == 2)
    base = E.conj(theta);
  else
    throw std::domain_error("unsupported degree: weight divisible by the class group order");
  long kexp = psi.algebra().radicals()[0].zeta_exp;
  QuadExt z = ext_root_of_unity(r, kexp);  // +-1 here
  QuadElem gamma0 = E.mul(z.a, base);
  Int tr = to_int(E.trace(gamma0));
  Int nt = to_int(cg.gens[0].norm());
  if (n == 2) {
    // (beta + conj beta)^2 = Tr(gamma_0) + 2 N(t); if that is a rational square
    // use ((beta - conj beta) sqrt(delta))^2 instead.
    Int Rp = tr + 2 * nt;
    if (Rp > 0 && !exact_root(Rp, 2)) return quadratic_from_radicand(Rp);
    Int Rm = (tr - 2 * nt) * D;
    if (Rm > 0 && !exact_root(Rm, 2)) return quadratic_from_radicand(Rm);
    throw std::logic_error("rationality_field: no real quadratic radicand");
  }
  ZPoly f{-tr, -3 * nt, Int(0), Int(1)};
  if (has_rational_root(f)) throw std::logic_error("rationality_field: trace polynomial is reducible");
  return RationalityField{3, f, field_discriminant(f)};
}

}  // namespace grossen
