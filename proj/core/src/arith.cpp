#include "grossen/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace grossen {

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

Int to_int(const Rat& v) {
  if (v.get_den() != 1) throw std::domain_error("rational is not integral: " + v.get_str());
  return v.get_num();
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long mulmod(long a, long b, long m) {
  __int128 p = static_cast<__int128>(a) * b % m;
  if (p < 0) p += m;
  return static_cast<long>(p);
}

long pow_mod(long b, long e, long m) {
  if (m == 1) return 0;
  long r = 1;
  b = mod_floor(b, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

long ext_gcd(long a, long b, long& x, long& y) {
  long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    long q = a / b;
    long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

long inv_mod(long a, long m) {
  long x, y;
  long g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1) throw std::domain_error("not invertible modulo " + std::to_string(m));
  return mod_floor(x, m);
}

long gcd_l(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_l(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return std::labs(a / gcd_l(a, b) * b);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (n % p == 0) return n == p;
  }
  for (long d = 17; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n == 0) throw std::domain_error("factorize(0)");
  n = std::labs(n);
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto& [p, e] : factorize(n)) {
    std::size_t sz = out.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_phi(long n) {
  long r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

long squarefree_part(long n) {
  if (n == 0) return 0;
  long r = n < 0 ? -1 : 1;
  for (auto& [p, e] : factorize(n))
    if (e % 2) r *= p;
  return r;
}

bool is_squarefree(long n) {
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int kronecker_symbol(long a, long b) {
  static const int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
  if (b == 0) return std::labs(a) == 1 ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;
  int v = 0;
  while (b % 2 == 0) {
    ++v;
    b /= 2;
  }
  int k = (v % 2 == 0) ? 1 : tab2[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  for (;;) {
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      ++v;
      a /= 2;
    }
    if (v % 2) k *= tab2[b & 7];
    if (a & b & 2) k = -k;
    long r = std::labs(a);
    a = b % r;
    b = r;
  }
}

std::optional<long> sqrt_mod_prime(long a, long p) {
  a = mod_floor(a, p);
  if (p == 2) return a;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  long q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  long z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  long m = s;
  long c = pow_mod(z, q, p);
  long t = pow_mod(a, q, p);
  long r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    long b = c;
    for (long j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

long crt_pair(long r1, long m1, long r2, long m2) {
  long M = m1 * m2;
  long inv = inv_mod(m1 % m2, m2);
  long t = mulmod(mod_floor(r2 - r1, m2), inv, m2);
  return mod_floor(r1 + static_cast<long>(static_cast<__int128>(m1) * t % M), M);
}

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rat rpow(const Rat& b, long e) {
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    return rpow(Rat(1) / b, -e);
  }
  Rat r(ipow(b.get_num(), static_cast<unsigned long>(e)), ipow(b.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

std::optional<Int> exact_root(const Int& v, unsigned k) {
  if (v < 0 && k % 2 == 0) return std::nullopt;
  Int r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy_row(std::vector<Int>& dst, const Int& q, const std::vector<Int>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

}  // namespace

IntMatrix hnf_rows(IntMatrix rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = floor_div(rows[i][col], rows[r][col]);
        axpy_row(rows[i], q, rows[r]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < rows.size() && rows[r][col] != 0) {
      if (rows[r][col] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        Int q = floor_div(rows[i][col], rows[r][col]);
        if (q != 0) axpy_row(rows[i], q, rows[r]);
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

std::vector<Int> smith_invariants(IntMatrix m, std::size_t ncols) {
  std::size_t nrows = m.size();
  std::size_t t = 0;
  std::vector<Int> diag;
  while (t < nrows && t < ncols) {
    // pivot: smallest nonzero entry of the trailing block
    std::size_t pi = nrows, pj = ncols;
    for (std::size_t i = t; i < nrows; ++i)
      for (std::size_t j = t; j < ncols; ++j)
        if (m[i][j] != 0 && (pi == nrows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == nrows) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < nrows; ++i) {
      if (m[i][t] == 0) continue;
      Int q = floor_div(m[i][t], m[t][t]);
      axpy_row(m[i], q, m[t]);
      if (m[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < ncols; ++j) {
      if (m[t][j] == 0) continue;
      Int q = floor_div(m[t][j], m[t][t]);
      for (std::size_t i = t; i < nrows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  // diag(a, b) ~ diag(gcd, lcm); repeat until the divisibility chain holds
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Int g = gcd(diag[i], diag[j]);
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<Int> out;
  for (auto& d : diag)
    if (d != 1) out.push_back(d);
  return out;
}

Int lattice_index(const IntMatrix& rows, std::size_t ncols) {
  IntMatrix h = hnf_rows(rows, ncols);
  if (h.size() < ncols) return 0;
  Int idx = 1;
  for (std::size_t i = 0; i < ncols; ++i) {
    if (h[i][i] == 0) return 0;
    idx *= h[i][i];
  }
  return idx;
}

}  // namespace grossen
