#include "grossen/valuealgebra.hpp"

#include <stdexcept>

namespace grossen {

bool AlgElem::is_zero() const {
  for (const auto& v : num)
    if (v != 0) return false;
  return true;
}

bool AlgElem::operator==(const AlgElem& o) const {
  if (num.size() != o.num.size()) return false;
  // Both sides are kept normalised, but compare by cross-multiplication so
  // hand-built elements behave too.
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] * o.den != o.num[i] * den) return false;
  return true;
}

namespace {

std::vector<long> units_mod(long n) {
  std::vector<long> u;
  for (long k = 1; k <= n; ++k)
    if (gcd_l(k, n) == 1) u.push_back(k % n == 0 ? n : k);
  if (n == 1) u = {1};
  return u;
}

}  // namespace

ValueAlgebra::ValueAlgebra(long delta, long r, std::vector<RadicalSpec> radicals)
    : delta_(delta), r_(r), rads_(std::move(radicals)) {
  if (r < 1) throw std::invalid_argument("ValueAlgebra: r must be positive");
  FieldE E(delta);
  cyclo_base_ = (delta == -3 || delta == -4);
  R_ = cyclo_base_ ? lcm_l(r, E.unit_count()) : r;
  phi_ = euler_phi(R_);
  base_dim_ = cyclo_base_ ? static_cast<std::size_t>(phi_) : 2 * static_cast<std::size_t>(phi_);

  // zeta_R^k reduced modulo Phi_R, as coefficient vectors of length phi.
  ZPoly cyc = cyclotomic(R_);
  std::size_t maxpow = std::max<std::size_t>(2 * phi_, R_) + 1;
  std::vector<IVec> zp(maxpow, IVec(phi_, Int(0)));
  {
    IVec cur(phi_, Int(0));
    cur[0] = 1;
    for (std::size_t k = 0; k < maxpow; ++k) {
      zp[k] = cur;
      // multiply by zeta: shift up, reduce x^phi = -sum cyc[i] x^i
      Int top = cur[phi_ - 1];
      for (long i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (long i = 0; i < phi_; ++i) cur[i] -= top * cyc[i];
    }
  }

  auto base_of_zeta = [&](std::size_t k) {
    IVec v(base_dim_, Int(0));
    for (long b = 0; b < phi_; ++b) v[cyclo_base_ ? b : 2 * b] = zp[k % R_][b];
    return v;
  };
  zpow_.resize(R_);
  for (long k = 0; k < R_; ++k) zpow_[k] = base_of_zeta(k);

  omega_.assign(base_dim_, Int(0));
  if (!cyclo_base_) {
    omega_[1] = 1;
  } else {
    // omega = -2 + i (delta = -4), -1 + zeta_3 (delta = -3)
    long w = E.unit_count();
    long k = (delta == -4 ? R_ / 4 : R_ / 3);
    (void)w;
    omega_ = zpow_[k];
    omega_[0] += (delta == -4 ? -2 : -1);
  }

  // Multiplication table of base monomials.
  table_.assign(base_dim_, std::vector<std::vector<std::pair<std::size_t, Int>>>(base_dim_));
  const Int T = E.omega_trace(), N = E.omega_norm();
  for (std::size_t i = 0; i < base_dim_; ++i) {
    for (std::size_t j = 0; j < base_dim_; ++j) {
      IVec prod(base_dim_, Int(0));
      if (cyclo_base_) {
        const auto& z = zp[i + j];
        for (long b = 0; b < phi_; ++b) prod[b] = z[b];
      } else {
        std::size_t a = i % 2 + j % 2, b = i / 2 + j / 2;
        const auto& z = zp[b];
        for (long t = 0; t < phi_; ++t) {
          if (z[t] == 0) continue;
          if (a == 0) prod[2 * t] += z[t];
          if (a == 1) prod[2 * t + 1] += z[t];
          if (a == 2) {
            prod[2 * t + 1] += T * z[t];
            prod[2 * t] -= N * z[t];
          }
        }
      }
      for (std::size_t t = 0; t < base_dim_; ++t)
        if (prod[t] != 0) table_[i][j].push_back({t, prod[t]});
    }
  }

  blocks_ = 1;
  for (const auto& rad : rads_) {
    if (rad.n < 1) throw std::invalid_argument("ValueAlgebra: radical degree must be positive");
    if (!rad.e.is_integral()) throw std::invalid_argument("ValueAlgebra: radicand must be integral");
    if (rad.e.is_zero()) throw std::invalid_argument("ValueAlgebra: zero radicand");
    radix_.push_back(blocks_);
    blocks_ *= rad.n;
  }
  dim_ = base_dim_ * blocks_;

  for (const auto& rad : rads_) {
    IVec z = zpow_[mod_floor(rad.zeta_exp, r_) * (R_ / r_)];
    IVec e(base_dim_, Int(0));
    e[0] = to_int(rad.e.x);
    Int y = to_int(rad.e.y);
    for (std::size_t t = 0; t < base_dim_; ++t) e[t] += y * omega_[t];
    gamma_.push_back(base_mul(z, e));
  }

  dist_images_ = basis_images(0);
}

ValueAlgebra::IVec ValueAlgebra::base_mul(const IVec& a, const IVec& b) const {
  IVec out(base_dim_, Int(0));
  Int c;
  for (std::size_t i = 0; i < base_dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < base_dim_; ++j) {
      if (b[j] == 0) continue;
      c = a[i] * b[j];
      for (const auto& [t, v] : table_[i][j]) out[t] += c * v;
    }
  }
  return out;
}

AlgElem ValueAlgebra::normalize(IVec num, Int den) const {
  if (den == 0) throw std::domain_error("ValueAlgebra: zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& v : num) v = -v;
  }
  Int g = den;
  for (const auto& v : num) {
    if (g == 1) break;
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  bool all_zero = true;
  for (const auto& v : num)
    if (v != 0) all_zero = false;
  if (all_zero) return AlgElem{std::move(num), Int(1)};
  if (g != 1) {
    for (auto& v : num)
      if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  return AlgElem{std::move(num), std::move(den)};
}

AlgElem ValueAlgebra::zero() const { return AlgElem{IVec(dim_, Int(0)), Int(1)}; }

AlgElem ValueAlgebra::one() const { return from_rational(1); }

AlgElem ValueAlgebra::from_rational(const Rat& q) const {
  IVec v(dim_, Int(0));
  v[0] = q.get_num();
  return normalize(std::move(v), q.get_den());
}

AlgElem ValueAlgebra::from_quad(const QuadElem& z) const {
  Int den;
  mpz_lcm(den.get_mpz_t(), z.x.get_den_mpz_t(), z.y.get_den_mpz_t());
  Int x = z.x.get_num() * (den / z.x.get_den());
  Int y = z.y.get_num() * (den / z.y.get_den());
  IVec v(dim_, Int(0));
  v[0] = x;
  for (std::size_t t = 0; t < base_dim_; ++t) v[t] += y * omega_[t];
  return normalize(std::move(v), den);
}

AlgElem ValueAlgebra::zeta(long k) const {
  IVec v(dim_, Int(0));
  const auto& z = zpow_[mod_floor(k, r_) * (R_ / r_)];
  for (std::size_t t = 0; t < base_dim_; ++t) v[t] = z[t];
  return AlgElem{std::move(v), Int(1)};
}

AlgElem ValueAlgebra::beta(std::size_t i) const {
  if (i >= rads_.size()) throw std::out_of_range("ValueAlgebra::beta");
  if (rads_[i].n == 1) {
    IVec v(dim_, Int(0));
    for (std::size_t t = 0; t < base_dim_; ++t) v[t] = gamma_[i][t];
    return AlgElem{std::move(v), Int(1)};
  }
  return basis(base_dim_ * radix_[i]);
}

AlgElem ValueAlgebra::basis(std::size_t i) const {
  IVec v(dim_, Int(0));
  v.at(i) = 1;
  return AlgElem{std::move(v), Int(1)};
}

AlgElem ValueAlgebra::add(const AlgElem& a, const AlgElem& b) const {
  IVec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = a.num[i] * b.den + b.num[i] * a.den;
  return normalize(std::move(v), a.den * b.den);
}

AlgElem ValueAlgebra::sub(const AlgElem& a, const AlgElem& b) const {
  IVec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = a.num[i] * b.den - b.num[i] * a.den;
  return normalize(std::move(v), a.den * b.den);
}

AlgElem ValueAlgebra::neg(const AlgElem& a) const {
  AlgElem out = a;
  for (auto& v : out.num) v = -v;
  return out;
}

AlgElem ValueAlgebra::scale(const AlgElem& a, const Rat& q) const {
  IVec v = a.num;
  for (auto& x : v) x *= q.get_num();
  return normalize(std::move(v), a.den * q.get_den());
}

AlgElem ValueAlgebra::mul(const AlgElem& a, const AlgElem& b) const {
  IVec out(dim_, Int(0));
  const std::size_t g = rads_.size();
  std::vector<long> da(g), db(g);
  IVec A(base_dim_), B(base_dim_);
  for (std::size_t ca = 0; ca < blocks_; ++ca) {
    bool nz = false;
    for (std::size_t t = 0; t < base_dim_; ++t) {
      A[t] = a.num[ca * base_dim_ + t];
      if (A[t] != 0) nz = true;
    }
    if (!nz) continue;
    for (std::size_t i = 0, c = ca; i < g; ++i) {
      da[i] = static_cast<long>(c % rads_[i].n);
      c /= rads_[i].n;
    }
    for (std::size_t cb = 0; cb < blocks_; ++cb) {
      nz = false;
      for (std::size_t t = 0; t < base_dim_; ++t) {
        B[t] = b.num[cb * base_dim_ + t];
        if (B[t] != 0) nz = true;
      }
      if (!nz) continue;
      std::size_t target = 0;
      IVec P = base_mul(A, B);
      for (std::size_t i = 0, c = cb; i < g; ++i) {
        db[i] = static_cast<long>(c % rads_[i].n);
        c /= rads_[i].n;
        long s = da[i] + db[i];
        if (s >= rads_[i].n) {
          s -= rads_[i].n;
          P = base_mul(P, gamma_[i]);
        }
        target += static_cast<std::size_t>(s) * radix_[i];
      }
      for (std::size_t t = 0; t < base_dim_; ++t)
        if (P[t] != 0) out[target * base_dim_ + t] += P[t];
    }
  }
  return normalize(std::move(out), a.den * b.den);
}

AlgElem ValueAlgebra::pow(const AlgElem& a, long e) const {
  if (e < 0) return pow(inverse(a), -e);
  AlgElem result = one(), base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

namespace {

// Solve M y = rhs over Q; M given column-wise. Empty on singular M.
std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> cols, std::vector<Rat> rhs) {
  const std::size_t n = rhs.size();
  // Build row-major augmented matrix.
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = cols[j][i];
    M[i][n] = rhs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && M[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(M[piv], M[c]);
    Rat inv = 1 / M[c][c];
    for (std::size_t j = c; j <= n; ++j) M[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M[i][c] == 0) continue;
      Rat f = M[i][c];
      for (std::size_t j = c; j <= n; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<Rat> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = M[i][n];
  return y;
}

}  // namespace

AlgElem ValueAlgebra::inverse(const AlgElem& a) const {
  std::vector<std::vector<Rat>> cols(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    AlgElem c = mul(a, basis(j));
    cols[j].resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) cols[j][i] = c.coord(i);
  }
  std::vector<Rat> rhs(dim_, Rat(0));
  rhs[0] = 1;
  auto y = solve(std::move(cols), std::move(rhs));
  if (!y) throw std::domain_error("ValueAlgebra: element is not invertible");
  Int den = 1;
  for (const auto& q : *y) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IVec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = (*y)[i].get_num() * (den / (*y)[i].get_den());
  return normalize(std::move(v), den);
}

std::vector<Complex> ValueAlgebra::basis_images(std::size_t emb) const {
  std::size_t tau = emb % base_dim_;
  std::size_t digits = emb / base_dim_;

  std::vector<Complex> base(base_dim_);
  if (cyclo_base_) {
    auto U = units_mod(R_);
    long k = U[tau];
    for (long b = 0; b < phi_; ++b) base[b] = Complex::root_of_unity(k * b, R_);
  } else {
    auto U = units_mod(r_);
    long k = U[tau % phi_];
    bool minus = tau / phi_ == 1;
    Real s = sqrt(Real(-delta_));
    Complex om(Real(delta_) / Real(2L), (minus ? -s : s) / Real(2L));
    for (long b = 0; b < phi_; ++b) {
      Complex z = Complex::root_of_unity(k * b, r_);
      base[2 * b] = z;
      base[2 * b + 1] = om * z;
    }
  }

  std::vector<Complex> beta_img;
  for (std::size_t i = 0; i < rads_.size(); ++i) {
    long n = rads_[i].n;
    long d = static_cast<long>(digits % n);
    digits /= n;
    Complex g(0L);
    for (std::size_t t = 0; t < base_dim_; ++t)
      if (gamma_[i][t] != 0) g += Complex(Real(gamma_[i][t]), Real(0L)) * base[t];
    beta_img.push_back(Complex::root_of_unity(rads_[i].root_index + d, n) * principal_root(g, n));
  }

  std::vector<Complex> out(dim_);
  for (std::size_t c = 0; c < blocks_; ++c) {
    Complex m(1L);
    for (std::size_t i = 0, cc = c; i < rads_.size(); ++i) {
      long e = static_cast<long>(cc % rads_[i].n);
      cc /= rads_[i].n;
      if (e) m *= grossen::pow(beta_img[i], e);
    }
    for (std::size_t t = 0; t < base_dim_; ++t) out[c * base_dim_ + t] = m * base[t];
  }
  return out;
}

Complex ValueAlgebra::embed(const AlgElem& a) const {
  Complex s(0L);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a.num[i] != 0) s += Complex(Real(a.num[i]), Real(0L)) * dist_images_[i];
  Real d(a.den);
  return Complex(s.re / d, s.im / d);
}

Complex ValueAlgebra::embed(const AlgElem& a, std::size_t emb) const {
  if (emb == 0) return embed(a);
  auto img = basis_images(emb);
  Complex s(0L);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a.num[i] != 0) s += Complex(Real(a.num[i]), Real(0L)) * img[i];
  Real d(a.den);
  return Complex(s.re / d, s.im / d);
}

QPoly ValueAlgebra::minimal_polynomial(const AlgElem& a) const {
  struct Row {
    std::vector<Rat> vec;
    std::vector<Rat> comb;  // vec = sum comb[j] a^j
    std::size_t pivot;
  };
  std::vector<Row> rows;
  AlgElem p = one();
  for (std::size_t k = 0; k <= dim_; ++k) {
    std::vector<Rat> v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = p.coord(i);
    std::vector<Rat> comb(k + 1, Rat(0));
    comb[k] = 1;
    for (const auto& row : rows) {
      if (v[row.pivot] == 0) continue;
      Rat f = v[row.pivot] / row.vec[row.pivot];
      for (std::size_t i = 0; i < dim_; ++i)
        if (row.vec[i] != 0) v[i] -= f * row.vec[i];
      for (std::size_t j = 0; j < row.comb.size(); ++j) comb[j] -= f * row.comb[j];
    }
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) {
      QPoly f(comb.begin(), comb.end());
      return poly_monic(f);
    }
    rows.push_back(Row{std::move(v), std::move(comb), piv});
    p = mul(p, a);
  }
  throw std::logic_error("minimal_polynomial: no dependency found");
}

}  // namespace grossen
