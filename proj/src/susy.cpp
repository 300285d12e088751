#include "tg/susy.hpp"

#include <cmath>
#include <limits>
#include <regex>

#include "tg/errors.hpp"

namespace tg {

BosonOps boson_ops(int m_max) {
  if (m_max < 1) throw Error("boson truncation must be at least 1");
  const int dim = m_max + 1;
  BosonOps ops;
  ops.b = Eigen::MatrixXcd::Zero(dim, dim);
  ops.number = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 1; m < dim; ++m) ops.b(m - 1, m) = std::sqrt(static_cast<double>(m));
  for (int m = 0; m < dim; ++m) ops.number(m, m) = static_cast<double>(m);
  ops.b_dagger = ops.b.adjoint();
  return ops;
}

namespace {

// sum_{m >= from} x^m / m!, x >= 0
double exp_tail(double x, int from) {
  double term = 1.0;
  for (int m = 1; m <= from; ++m) term *= x / m;
  double sum = 0.0;
  for (int m = from; term > 0 && m < from + 400; ++m) {
    sum += term;
    if (term < sum * 1e-18) break;
    term *= x / (m + 1);
  }
  return sum;
}

}  // namespace

BosonCoherent coherent_boson(Complex z, int m_max) {
  if (m_max < 1) throw Error("boson truncation must be at least 1");
  BosonCoherent out;
  out.vec = Eigen::VectorXcd::Zero(m_max + 1);
  Complex amp = 1.0;
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) amp *= z / std::sqrt(static_cast<double>(m));
    out.vec(m) = amp;
  }
  const double r2 = std::norm(z);
  out.tail_mass = exp_tail(r2, m_max + 1);
  // Truncation loss plus the rounding of b v - z v, a few ulps per entry.
  const double rounding = 4 * std::numeric_limits<double>::epsilon() * (std::abs(z) + std::sqrt(double(m_max))) *
                          out.vec.norm();
  out.residual_bound = std::abs(z) * std::sqrt(exp_tail(r2, m_max)) + rounding;
  return out;
}

Eigen::VectorXcd displacement_boson(Complex z, int m_max) {
  const BosonOps ops = boson_ops(m_max);
  Eigen::VectorXcd term = Eigen::VectorXcd::Zero(m_max + 1);
  term(0) = 1.0;
  Eigen::VectorXcd sum = term;
  for (int k = 1; k <= m_max; ++k) {
    term = (z / static_cast<double>(k)) * (ops.b_dagger * term);
    sum += term;
  }
  return sum;
}

namespace {

double squared_norm(const std::array<GElement, 3>& comps) {
  double s = 0;
  for (const auto& e : comps)
    for (const auto& [w, c] : e.terms()) s += std::norm(c.to_complex());
  return s;
}

}  // namespace

double coefficient_norm(const StateVec& v) { return std::sqrt(squared_norm(v.components)); }
double coefficient_norm(const OperatorKet& v) { return std::sqrt(squared_norm(v.components)); }

SusyState susy_coherent(Complex z, const ConventionConfig& conv, int m_max) {
  SusyState s;
  s.z = z;
  s.m_max = m_max;
  s.boson = coherent_boson(z, m_max);
  s.para_operator = coherent_ket_operator_form();
  s.para = to_components(s.para_operator, conv);
  return s;
}

SusyChecks check_susy(const SusyState& s) {
  SusyChecks c;
  const BosonOps ops = boson_ops(s.m_max);
  const Eigen::VectorXcd diff = ops.b * s.boson.vec - s.z * s.boson.vec;
  const double para_norm = coefficient_norm(s.para);
  c.boson_residual = diff.norm() * para_norm;
  c.residual_bound = s.boson.residual_bound * para_norm;
  c.annihilation_exact = annihilate_operator_form() == eigenvalue_operator_form();
  c.displacement_error = (displacement_boson(s.z, s.m_max) - s.boson.vec).norm();
  c.displacement_exact = coherent_ket_operator_form(0, GeneratorOrder::creation_first) == s.para_operator;
  c.grassmann_first_agrees =
      coherent_ket_operator_form(0, GeneratorOrder::grassmann_first) == s.para_operator;
  return c;
}

Complex parse_complex(const std::string& text) {
  static const std::regex re(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i)?\s*$)");
  static const std::regex imag_only(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, imag_only)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (!std::regex_match(text, m, re) || (!m[1].matched && !m[2].matched))
    throw ParseError("not a complex number: '" + text + "'", 1, 1);
  const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im_part = 0.0;
  if (m[2].matched) {
    im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im_part = -im_part;
  }
  return {re_part, im_part};
}

}  // namespace tg
