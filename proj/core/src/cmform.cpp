#include "grossen/cmform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace grossen {

namespace {

struct PrimeIdeal {
  QIdeal P;
  long norm;
};

std::vector<PrimeIdeal> prime_ideals_up_to(const FieldE& E, long B) {
  std::vector<PrimeIdeal> out;
  for (long p : primes_up_to(B)) {
    SplitType st = factor_prime(E, p);
    long nrm = st.kind == Splitting::Inert ? p * p : p;
    if (nrm > B) continue;
    for (auto& P : st.primes) out.push_back({P, nrm});
  }
  return out;
}

}  // namespace

std::vector<IdealOfNorm> ideals_of_norm_up_to(const FieldE& E, long B) {
  if (B < 1) throw std::invalid_argument("ideals_of_norm_up_to: B must be positive");
  auto primes = prime_ideals_up_to(E, B);
  std::vector<IdealOfNorm> out;
  std::function<void(std::size_t, long, const QIdeal&)> walk = [&](std::size_t start, long n, const QIdeal& I) {
    out.push_back({n, I});
    for (std::size_t i = start; i < primes.size(); ++i) {
      if (n * primes[i].norm > B) continue;
      walk(i, n * primes[i].norm, ideal_mul(E, I, primes[i].P));
    }
  };
  walk(0, 1, unit_ideal());
  std::sort(out.begin(), out.end(), [](const IdealOfNorm& a, const IdealOfNorm& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.ideal < b.ideal;
  });
  return out;
}

CMForm q_expansion(const Grossenchar& psi, long B) {
  const FieldE& E = psi.field();
  const ValueAlgebra& A = psi.algebra();
  CMForm f;
  f.psi = std::make_shared<const Grossenchar>(psi);
  f.level = psi.level();
  f.weight = psi.weight();
  f.bound = B;
  f.coeffs.assign(B + 1, A.zero());

  auto primes = prime_ideals_up_to(E, B);
  std::vector<AlgElem> vals;
  std::vector<bool> zero;
  for (auto& pi : primes) {
    AlgElem v = psi.evaluate(pi.P);
    zero.push_back(v.is_zero());
    vals.push_back(std::move(v));
  }
  // Multiplicative walk; branches through primes dividing m contribute 0.
  std::function<void(std::size_t, long, const AlgElem&)> walk = [&](std::size_t start, long n, const AlgElem& v) {
    f.coeffs[n] = A.add(f.coeffs[n], v);
    for (std::size_t i = start; i < primes.size(); ++i) {
      if (n * primes[i].norm > B) continue;
      if (zero[i]) continue;
      walk(i, n * primes[i].norm, A.mul(v, vals[i]));
    }
  };
  walk(0, 1, A.one());

  f.complex_coeffs.reserve(B + 1);
  for (long n = 0; n <= B; ++n)
    f.complex_coeffs.push_back(f.coeffs[n].is_zero() ? Complex(0L) : A.embed(f.coeffs[n]));
  return f;
}

HeckeReport hecke_verify(const CMForm& f) {
  const Grossenchar& psi = *f.psi;
  const ValueAlgebra& A = psi.algebra();
  const long B = f.bound, N = f.level, k = f.weight;
  const long D = psi.delta();
  HeckeReport rep;
  auto fail = [&](const std::string& what, long a, long b) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = what;
      rep.w1 = a;
      rep.w2 = b;
    }
  };

  if (!(f.coeffs.at(1) == A.one())) fail("a_1 != 1", 1, 1);
  ++rep.checks;

  for (long m = 2; m * (m + 1) <= B && rep.ok; ++m) {
    for (long n = m + 1; m * n <= B; ++n) {
      if (gcd_l(m, n) != 1) continue;
      ++rep.checks;
      const AlgElem& am = f.coeffs[m];
      const AlgElem& an = f.coeffs[n];
      bool ok;
      if (am.is_zero() || an.is_zero())
        ok = f.coeffs[m * n].is_zero();
      else
        ok = A.mul(am, an) == f.coeffs[m * n];
      if (!ok) {
        fail("multiplicativity a_m a_n = a_mn", m, n);
        break;
      }
    }
  }

  for (long p : primes_up_to(B)) {
    if (!rep.ok) break;
    const AlgElem& ap = f.coeffs[p];
    if (N % p == 0) {
      long q = p;
      for (long j = 1; q <= B / p; ++j, q *= p) {
        ++rep.checks;
        if (!(A.mul(ap, f.coeffs[q]) == f.coeffs[q * p])) {
          fail("prime-power relation at p | N", p, j);
          break;
        }
      }
      continue;
    }
    // nebentypus value chi_E(p) eta(p) p^{k-1}
    AlgElem eps = A.mul(A.from_rational(Rat(kronecker(D, p))), A.zeta(psi.eta_exponent(QuadElem(p))));
    AlgElem c = A.scale(eps, Rat(ipow(Int(p), static_cast<unsigned long>(k - 1))));
    long prev = 1, cur = p;
    for (long j = 1; cur <= B / p; ++j) {
      ++rep.checks;
      AlgElem rhs = A.sub(A.mul(ap, f.coeffs[cur]), A.mul(c, f.coeffs[prev]));
      if (!(rhs == f.coeffs[cur * p])) {
        fail("prime-power recursion", p, j);
        break;
      }
      prev = cur;
      cur *= p;
    }
    if (kronecker(D, p) == -1) {
      ++rep.checks;
      if (!ap.is_zero()) fail("inert prime with a_p != 0", p, 1);
    }
  }

  double max_im = 0;
  for (long n = 1; n <= B; ++n) max_im = std::max(max_im, std::fabs(f.complex_coeffs[n].im.to_double()));
  rep.max_imag = max_im;
  rep.real = max_im < 1e-9;
  for (long p : primes_up_to(B)) {
    if (N % p == 0) continue;
    double bound = 2.0 * std::pow(static_cast<double>(p), (k - 1) / 2.0) * (1 + 1e-6);
    if (abs(f.complex_coeffs[p]).to_double() > bound) {
      fail("Ramanujan bound", p, 1);
      break;
    }
  }
  return rep;
}

namespace {

// Smallest set of conjugates of a_p (containing the distinguished value)
// whose monic polynomial is integral and divides the exact minimal
// polynomial. Returns its size.
long conjugate_degree(const ValueAlgebra& A, const AlgElem& a) {
  QPoly mp = A.minimal_polynomial(a);
  std::vector<Complex> roots;
  for (std::size_t e = 0; e < A.embedding_count(); ++e) {
    Complex z = A.embed(a, e);
    bool seen = false;
    for (auto& w : roots)
      if (near(w, z, 1e-30)) seen = true;
    if (!seen) roots.push_back(z);
  }
  const std::size_t n = roots.size();
  for (std::size_t size = 1; size <= n; ++size) {
    // subsets of the other roots of size - 1
    std::vector<std::size_t> idx(size - 1);
    std::function<std::optional<long>(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) -> std::optional<long> {
      if (pos == size - 1) {
        std::vector<Complex> coef{Complex(1L)};
        std::vector<Complex> sel{roots[0]};
        for (auto i : idx) sel.push_back(roots[i]);
        for (auto& z : sel) {
          std::vector<Complex> next(coef.size() + 1, Complex(0L));
          for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] += coef[i];
            next[i] -= coef[i] * z;
          }
          coef = next;
        }
        QPoly g;
        for (auto& c : coef) {
          Int ri = c.re.round();
          if (!near(c, Complex(Real(ri), Real(0L)), 1e-25)) return std::nullopt;
          g.push_back(Rat(ri));
        }
        if (poly_divmod(mp, g).second.empty()) return static_cast<long>(size);
        return std::nullopt;
      }
      for (std::size_t i = from; i < n; ++i) {
        idx[pos] = i;
        if (auto r = rec(pos + 1, i + 1)) return r;
      }
      return std::nullopt;
    };
    if (auto r = rec(0, 1)) return *r;
  }
  return static_cast<long>(degree(mp));
}

}  // namespace

ProbeResult coefficient_field_probe(const CMForm& f) {
  if (f.bound < 100) throw std::invalid_argument("coefficient_field_probe: B >= 100 required");
  const Grossenchar& psi = *f.psi;
  const ValueAlgebra& A = psi.algebra();
  ProbeResult res;
  int used = 0;
  for (long p : primes_up_to(100)) {
    if (used >= 8) break;
    if (f.level % p == 0 || kronecker(psi.delta(), p) != 1) continue;
    const AlgElem& ap = f.coeffs[p];
    if (ap.is_zero()) continue;
    res.degree = std::max(res.degree, conjugate_degree(A, ap));
    ++used;
  }
  if (used == 0) res.degree = 1;
  double max_im = 0;
  for (long n = 1; n <= f.bound; ++n) max_im = std::max(max_im, std::fabs(f.complex_coeffs[n].im.to_double()));
  res.max_imag = max_im;
  res.real = max_im < 1e-9;
  return res;
}

}  // namespace grossen
