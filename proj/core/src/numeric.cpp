#include "grossen/numeric.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace grossen {

namespace {

std::atomic<long>& precision_slot() {
  static std::atomic<long> slot = [] {
    long bits = 256;
    if (const char* env = std::getenv("GROSSEN_PRECISION_BITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 64 && v <= 65536) bits = v;
    }
    return bits;
  }();
  return slot;
}

}  // namespace

long precision_bits() { return precision_slot().load(); }

void set_precision_bits(long bits) {
  if (bits < 64) throw std::invalid_argument("precision must be at least 64 bits");
  precision_slot().store(bits);
}

Real::Real() {
  mpfr_init2(v_, precision_bits());
  mpfr_set_zero(v_, 1);
}

Real::Real(long prec_bits, int) {
  mpfr_init2(v_, prec_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
  mpfr_init2(v_, precision_bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(double v) {
  mpfr_init2(v_, precision_bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Int& v) {
  mpfr_init2(v_, precision_bits());
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rat& v) {
  mpfr_init2(v_, precision_bits());
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

Int Real::round() const {
  Int out;
  mpfr_get_z(out.get_mpz_t(), v_, MPFR_RNDN);
  return out;
}

Real& Real::operator+=(const Real& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::pi() {
  Real r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator-(const Real& a) {
  Real r(a);
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()); }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()); }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()); }

#define GROSSEN_UNARY(name, fn)           \
  Real name(const Real& a) {              \
    Real r(a);                            \
    fn(r.get(), a.get(), MPFR_RNDN);      \
    return r;                             \
  }
GROSSEN_UNARY(abs, mpfr_abs)
GROSSEN_UNARY(sqrt, mpfr_sqrt)
GROSSEN_UNARY(cos, mpfr_cos)
GROSSEN_UNARY(sin, mpfr_sin)
GROSSEN_UNARY(exp, mpfr_exp)
GROSSEN_UNARY(log, mpfr_log)
#undef GROSSEN_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(y);
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& a, long e) {
  Real r(a);
  mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex Complex::root_of_unity(long num, long den) {
  Real t = Real::pi() * Real(2L * mod_floor(num, den)) / Real(den);
  return Complex(cos(t), sin(t));
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex conj(const Complex& a) { return Complex(a.re, -a.im); }
Real norm(const Complex& a) { return a.re * a.re + a.im * a.im; }
Real abs(const Complex& a) { return sqrt(norm(a)); }
Real arg(const Complex& a) { return atan2(a.im, a.re); }

Complex pow(const Complex& a, long e) {
  if (e < 0) return Complex(1L) / pow(a, -e);
  Complex r(1L), b(a);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Complex principal_root(const Complex& a, long n) {
  if (mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get())) return a;
  Real mod = exp(log(abs(a)) / Real(n));
  Real t = arg(a) / Real(n);
  return Complex(mod * cos(t), mod * sin(t));
}

bool near(const Complex& a, const Complex& b, double tol) {
  Real scale(1L);
  Real aa = abs(a), ab = abs(b);
  if (scale < aa) scale = aa;
  if (scale < ab) scale = ab;
  return abs(a - b) <= Real(tol) * scale;
}

std::string to_string(const Complex& a, int digits) {
  return a.re.to_string(digits) + (mpfr_signbit(a.im.get()) ? " - " : " + ") +
         abs(a.im).to_string(digits) + "i";
}

}  // namespace grossen
