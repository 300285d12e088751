#pragma once

// Exact arithmetic in the 12th cyclotomic field Q(zeta), zeta^4 = zeta^2 - 1.
// It is the smallest field holding q = exp(2 pi i / 3) = zeta^4 together with
// i = zeta^3, and i is the square root of [2] = -1 that the Fock matrices need.

#include <array>
#include <complex>
#include <iosfwd>
#include <optional>

#include <gmpxx.h>

namespace tg {

using Rational = mpq_class;

class CycScalar {
 public:
  // c0 + c1 zeta + c2 zeta^2 + c3 zeta^3
  using Coeffs = std::array<Rational, 4>;

  CycScalar() = default;
  CycScalar(long value);  // NOLINT: integer literals are scalars
  CycScalar(int value) : CycScalar(static_cast<long>(value)) {}  // NOLINT
  explicit CycScalar(const Rational& value);
  explicit CycScalar(Coeffs coeffs);

  static CycScalar zeta();
  static CycScalar q();
  static CycScalar i();
  static CycScalar q_pow(long n);

  const Coeffs& coeffs() const noexcept { return c_; }
  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);
  CycScalar& operator/=(const CycScalar& rhs);

  friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
  friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
  friend CycScalar operator*(CycScalar lhs, const CycScalar& rhs) { return lhs *= rhs; }
  friend CycScalar operator/(CycScalar lhs, const CycScalar& rhs) { return lhs /= rhs; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& lhs, const CycScalar& rhs);
  friend bool operator!=(const CycScalar& lhs, const CycScalar& rhs) { return !(lhs == rhs); }

  // Throws DivisionByZero on zero.
  CycScalar inverse() const;
  CycScalar pow(long n) const;

  // Complex conjugation: the automorphism zeta -> zeta^-1.
  CycScalar conj() const;
  // zeta -> zeta^k, k coprime to 12.
  CycScalar galois(int k) const;
  // Field norm down to Q (product of the four Galois conjugates).
  Rational norm() const;

  // Evaluation under zeta = exp(i pi / 6).
  std::complex<double> to_complex() const;

 private:
  Coeffs c_{};
};

enum class ArithOp { add, sub, mul, div };

CycScalar cyc_arith(const CycScalar& x, const CycScalar& y, ArithOp op);

inline CycScalar conj(const CycScalar& x) { return x.conj(); }

// Writes the same text as to_string.
std::ostream& operator<<(std::ostream& os, const CycScalar& x);

// [n] = (q^n - q^-n) / (q - q^-1); period 3 in n.
CycScalar q_bracket(long n);

// The branch of sqrt([2]) used throughout: +i.
CycScalar sqrt_bracket2();

// Decomposition x = r * m with m = q^k i^j, if x is a rational multiple of a
// twelfth root of unity.
struct ScalarMonomial {
  Rational factor;
  int q_power = 0;  // 0..2
  int i_power = 0;  // 0..1
};
std::optional<ScalarMonomial> as_monomial(const CycScalar& x);

// Exponent e in {0,1,2} with x == q^e, if any.
std::optional<int> q_exponent(const CycScalar& x);

}  // namespace tg
