#pragma once

// Truncated boson factor and the product state |z> (x) |xi>. The boson side
// is double precision; every approximate quantity comes with a bound.

#include <complex>
#include <string>

#include <Eigen/Core>

#include "tg/states.hpp"

namespace tg {

using Complex = std::complex<double>;

struct BosonOps {
  Eigen::MatrixXcd b;
  Eigen::MatrixXcd b_dagger;
  Eigen::MatrixXcd number;
};

// b|m> = sqrt(m)|m-1>, b+|m> = sqrt(m+1)|m+1> cut at m_max, M = diag(0..m_max).
BosonOps boson_ops(int m_max);

struct BosonCoherent {
  Eigen::VectorXcd vec;  // sum_{m <= m_max} z^m / sqrt(m!) |m>
  double tail_mass = 0;  // sum_{m > m_max} |z|^(2m) / m!
  // Bound on |b v - z v|: |z| sqrt(sum_{m >= m_max} |z|^(2m) / m!) plus a
  // floating-point rounding allowance.
  double residual_bound = 0;
};

BosonCoherent coherent_boson(Complex z, int m_max = 16);

// exp(z b+)|0> summed as a power series in the truncated space.
Eigen::VectorXcd displacement_boson(Complex z, int m_max = 16);

// sqrt(sum |c|^2) over every coefficient of every component.
double coefficient_norm(const StateVec& v);
double coefficient_norm(const OperatorKet& v);

struct SusyState {
  Complex z;
  int m_max = 16;
  BosonCoherent boson;
  StateVec para;            // component layout under the convention
  OperatorKet para_operator;  // f(ad xi)|0>, convention-free
};

SusyState susy_coherent(Complex z, const ConventionConfig& conv, int m_max = 16);

struct SusyChecks {
  double boson_residual = 0;  // |(b (x) 1)psi - z psi|
  double residual_bound = 0;  // boson bound times the parafermion norm
  bool annihilation_exact = false;  // (1 (x) a)psi = xi psi at operator level
  double displacement_error = 0;  // |exp(z b+)|0> - |z>|
  bool displacement_exact = false;  // f(ad xi)|0> reproduces the parafermion factor
  // f(xi ad)|0> against f(ad xi)|0>: the two orderings of the generator.
  bool grassmann_first_agrees = false;
};

SusyChecks check_susy(const SusyState& s);

// Parses "0.5+0.25i", "-1i", "2", "0.3-0.1i".
Complex parse_complex(const std::string& text);

}  // namespace tg
