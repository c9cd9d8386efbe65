#pragma once

#include <string>

#include <mpfr.h>

#include "grossen/arith.hpp"

namespace grossen {

// Working precision for complex embeddings. Initialised from
// GROSSEN_PRECISION_BITS (default 256) on first use.
long precision_bits();
void set_precision_bits(long bits);

// Thin RAII wrapper over mpfr_t; precision fixed at construction.
class Real {
 public:
  Real();
  explicit Real(long prec_bits, int);  // zero with explicit precision
  Real(long v);                        // NOLINT(google-explicit-constructor)
  Real(int v) : Real(static_cast<long>(v)) {}
  explicit Real(double v);
  explicit Real(const Int& v);
  explicit Real(const Rat& v);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }
  long prec() const { return static_cast<long>(mpfr_get_prec(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 30) const;
  // Nearest integer.
  Int round() const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  static Real pi();

 private:
  mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator-(const Real& a);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
Real abs(const Real& a);
Real sqrt(const Real& a);
Real cos(const Real& a);
Real sin(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& a, long e);

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long v) : re(v), im(0L) {}  // NOLINT(google-explicit-constructor)

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  // exp(2 pi i num/den)
  static Complex root_of_unity(long num, long den);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex conj(const Complex& a);
Real norm(const Complex& a);  // |a|^2
Real abs(const Complex& a);
Real arg(const Complex& a);
Complex pow(const Complex& a, long e);
// Principal n-th root: exp(log(a)/n) with arg in (-pi, pi].
Complex principal_root(const Complex& a, long n);
// |a - b| <= tol * max(1, |a|, |b|)
bool near(const Complex& a, const Complex& b, double tol);
std::string to_string(const Complex& a, int digits = 30);

}  // namespace grossen
