#include "tg/scalars.hpp"

#include <cmath>
#include <numbers>

#include "tg/errors.hpp"

namespace tg {

namespace {

// zeta^k for k = 0..11 in the reduced basis.
const std::array<CycScalar, 12>& zeta_powers() {
  static const std::array<CycScalar, 12> table = [] {
    std::array<CycScalar, 12> t;
    t[0] = CycScalar(1L);
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = t[k - 1] * CycScalar::zeta();
    return t;
  }();
  return table;
}

}  // namespace

CycScalar::CycScalar(long value) { c_[0] = value; }

CycScalar::CycScalar(const Rational& value) { c_[0] = value; }

CycScalar::CycScalar(Coeffs coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
}

CycScalar CycScalar::zeta() { return CycScalar(Coeffs{0, 1, 0, 0}); }

CycScalar CycScalar::q() { return CycScalar(Coeffs{-1, 0, 1, 0}); }

CycScalar CycScalar::i() { return CycScalar(Coeffs{0, 0, 0, 1}); }

CycScalar CycScalar::q_pow(long n) {
  long e = ((n % 3) + 3) % 3;
  return zeta_powers()[static_cast<std::size_t>(4 * e)];
}

bool CycScalar::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

std::optional<Rational> CycScalar::as_rational() const {
  if (sgn(c_[1]) != 0 || sgn(c_[2]) != 0 || sgn(c_[3]) != 0) return std::nullopt;
  return c_[0];
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += rhs.c_[k];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= rhs.c_[k];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  std::array<Rational, 7> p{};
  for (std::size_t j = 0; j < 4; ++j) {
    if (sgn(c_[j]) == 0) continue;
    for (std::size_t k = 0; k < 4; ++k) p[j + k] += c_[j] * rhs.c_[k];
  }
  // zeta^k = zeta^(k-2) - zeta^(k-4)
  for (std::size_t k = 6; k >= 4; --k) {
    p[k - 2] += p[k];
    p[k - 4] -= p[k];
  }
  for (std::size_t k = 0; k < 4; ++k) c_[k] = p[k];
  return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs) { return *this *= rhs.inverse(); }

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const CycScalar& lhs, const CycScalar& rhs) {
  for (std::size_t k = 0; k < 4; ++k)
    if (lhs.c_[k] != rhs.c_[k]) return false;
  return true;
}

CycScalar CycScalar::galois(int k) const {
  const auto& zp = zeta_powers();
  CycScalar r;
  for (std::size_t j = 0; j < 4; ++j) {
    if (sgn(c_[j]) == 0) continue;
    auto e = static_cast<std::size_t>(((static_cast<int>(j) * k) % 12 + 12) % 12);
    r += CycScalar(c_[j]) * zp[e];
  }
  return r;
}

CycScalar CycScalar::conj() const { return galois(11); }

Rational CycScalar::norm() const {
  CycScalar n = *this * galois(5) * galois(7) * galois(11);
  return n.c_[0];
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  CycScalar others = galois(5) * galois(7) * galois(11);
  Rational n = (*this * others).c_[0];
  for (auto& c : others.c_) c /= n;
  return others;
}

CycScalar CycScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  CycScalar result(1L);
  CycScalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

std::complex<double> CycScalar::to_complex() const {
  const std::complex<double> z = std::polar(1.0, std::numbers::pi / 6.0);
  std::complex<double> acc = 0.0;
  std::complex<double> zk = 1.0;
  for (const auto& c : c_) {
    acc += c.get_d() * zk;
    zk *= z;
  }
  return acc;
}

CycScalar cyc_arith(const CycScalar& x, const CycScalar& y, ArithOp op) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  return {};
}

CycScalar q_bracket(long n) {
  const CycScalar q = CycScalar::q();
  return (q.pow(n) - q.pow(-n)) / (q - q.pow(-1));
}

CycScalar sqrt_bracket2() { return CycScalar::i(); }

std::optional<ScalarMonomial> as_monomial(const CycScalar& x) {
  if (x.is_zero()) return std::nullopt;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 3; ++k) {
      CycScalar m = CycScalar::q_pow(k) * CycScalar::i().pow(j);
      if (auto r = (x * m.inverse()).as_rational()) return ScalarMonomial{*r, k, j};
    }
  }
  return std::nullopt;
}

std::optional<int> q_exponent(const CycScalar& x) {
  for (int k = 0; k < 3; ++k)
    if (x == CycScalar::q_pow(k)) return k;
  return std::nullopt;
}

}  // namespace tg
