// One PASS/FAIL line per acceptance criterion; nonzero exit on any FAIL.

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tg/audit.hpp"
#include "tg/bargmann.hpp"
#include "tg/berezin.hpp"
#include "tg/oscillator.hpp"
#include "tg/susy.hpp"

using tg::CycScalar;
using tg::GElement;
using tg::GeneratorSym;
using tg::OpSym;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

Outcome oscillator_relations() {
  Outcome o;
  const tg::FockTriple f = tg::fock_matrices();
  const CycScalar q = CycScalar::q();
  const tg::ExactMatrix qn = tg::q_num_matrix(1);
  require(o, f.a * f.a_plus - f.a_plus * f.a * q == tg::q_num_matrix(-1), "a ad - q ad a");
  require(o, f.num * f.a - f.a * f.num == -f.a, "[N, a]");
  require(o, f.num * f.a_plus - f.a_plus * f.num == f.a_plus, "[N, ad]");
  require(o, qn * f.a_plus == f.a_plus * qn * q, "q^N ad");
  require(o, qn * f.a == f.a * qn * q.inverse(), "q^N a");
  return o;
}

Outcome nilpotency() {
  Outcome o;
  const tg::FockTriple f = tg::fock_matrices();
  require(o, tg::is_zero_matrix(f.a * f.a * f.a), "a^3 matrix");
  require(o, tg::is_zero_matrix(f.a_plus * f.a_plus * f.a_plus), "ad^3 matrix");
  require(o, tg::op_normalize(std::vector<OpSym>{OpSym::a(), OpSym::a(), OpSym::a()}).is_zero(), "a^3 rewrite");
  require(o, tg::op_normalize(std::vector<OpSym>{OpSym::ad(), OpSym::ad(), OpSym::ad()}).is_zero(), "ad^3 rewrite");
  for (const auto mode : {tg::RuleMode::relational, tg::RuleMode::constrained}) {
    const tg::AlgebraSignature sig{1, mode};
    for (const auto g : {GeneratorSym::xi(0), GeneratorSym::xb(0)}) {
      const std::vector<GeneratorSym> w(3, g);
      require(o, tg::normalize(w, sig).is_zero(), "cube of a generator");
    }
  }
  return o;
}

Outcome dimensions() {
  Outcome o;
  const long expected[] = {6, 21, 50};
  for (int n = 1; n <= 3; ++n) {
    const auto size = static_cast<long>(tg::enumerate_basis({n, tg::RuleMode::constrained}).size());
    o.detail += (n > 1 ? ", " : "") + std::string("N=") + std::to_string(n) + ": " + std::to_string(size);
    if (size != expected[n - 1] || size != tg::constrained_dimension(n)) o.ok = false;
  }
  return o;
}

Outcome eigenstate() {
  Outcome o;
  // The operator-level identity carries no convention; the component forms
  // are still built per convention to show the ket itself is convention-bound.
  for (const auto& conv : tg::shipped_conventions()) {
    const tg::OperatorKet lhs = tg::annihilate_operator_form();
    const tg::OperatorKet rhs = tg::eigenvalue_operator_form();
    bool zero = true;
    for (std::size_t n = 0; n < 3; ++n) zero = zero && (lhs.components[n] - rhs.components[n]).is_zero();
    require(o, zero, "a|xi> - xi|xi> under " + conv.name);
  }
  return o;
}

Outcome integrals() {
  Outcome o;
  const auto xi = GeneratorSym::xi(0), xb = GeneratorSym::xb(0);
  for (const auto v : {xi, xb}) {
    require(o, tg::integrate(GElement(CycScalar(1L)), v).is_zero(), "int 1");
    require(o, tg::integrate(GElement::word({v}), v).is_zero(), "int x");
    require(o, tg::integrate(GElement::word({v, v}), v) == GElement(CycScalar(1L)), "int x^2");
  }
  require(o, tg::double_integral(GElement::word({xi, xi, xb, xb})) == CycScalar(1L), "int xi^2 xb^2");
  const auto conv = tg::paper_convention();
  const auto inner = [&](int n, int m) {
    return tg::bargmann_inner(tg::to_adjoint_rep(tg::basis_vector(n), conv), tg::to_rep(tg::basis_vector(m), conv),
                              tg::printed_weight(), conv);
  };
  require(o, inner(0, 0) == CycScalar(1L), "<0|0>");
  require(o, inner(0, 1).is_zero(), "<0|1>");
  return o;
}

Outcome weight_solver() {
  Outcome o;
  const auto conv = tg::paper_convention();
  const tg::WeightFunction w = tg::solve_weight(conv, tg::ResolutionForm::measure_left);
  require(o, w == tg::WeightFunction{-CycScalar::q(), CycScalar(1L), CycScalar(1L)}, "solved weight");
  require(o, tg::identity_resolution(conv, w, tg::ResolutionForm::measure_left) == tg::exact_identity(), "resolution");
  return o;
}

Outcome gram() {
  Outcome o;
  const auto conv = tg::paper_convention();
  require(o, tg::gram_matrix(conv, tg::bargmann_weight(conv)) == tg::exact_identity(), "gram");
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int k = 0; k < 20; ++k) {
    tg::ExactVector v;
    for (int n = 0; n < 3; ++n)
      v(n) = CycScalar(CycScalar::Coeffs{tg::Rational(num(rng)), tg::Rational(num(rng)), tg::Rational(num(rng)),
                                         tg::Rational(num(rng))});
    require(o, tg::from_rep(tg::to_rep(v, conv), conv) == v, "round trip");
  }
  return o;
}

Outcome audit_completeness() {
  Outcome o;
  const tg::AuditReport report = tg::audit();
  for (const auto& conv : tg::shipped_conventions())
    for (const auto& id : tg::audit_identities()) require(o, tg::find_entry(report, id, conv.name) != nullptr, id);
  const auto* ket = tg::find_entry(report, "ket-component[2]", "uniform-eq5");
  const auto* lin = tg::find_entry(report, "overlap[linear]", "uniform-eq5");
  require(o, ket && ket->status == tg::AuditStatus::fail, "ket-component[2] flag");
  require(o, lin && lin->status == tg::AuditStatus::fail, "overlap[linear] flag");
  o.detail = std::to_string(report.size()) + " entries" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome susy() {
  Outcome o;
  const tg::SusyState s = tg::susy_coherent(tg::Complex(0.5, 0.0), tg::paper_convention(), 16);
  const tg::SusyChecks c = tg::check_susy(s);
  std::ostringstream out;
  out.precision(3);
  out << "residual " << c.boson_residual << " <= bound " << c.residual_bound;
  out << ", |z|^17/sqrt(17!) = " << std::pow(0.5, 17) / std::sqrt(std::tgamma(18.0));
  o.detail = out.str();
  require(o, c.annihilation_exact, "annihilation");
  require(o, c.boson_residual <= c.residual_bound, "residual exceeds bound");
  return o;
}

Outcome scalar_layer() {
  Outcome o;
  const CycScalar q = CycScalar::q();
  require(o, q * q * q == CycScalar(1L), "q^3");
  require(o, (CycScalar(1L) + q + q * q).is_zero(), "1 + q + q^2");
  require(o, tg::q_bracket(2) == CycScalar(-1L), "[2]");
  require(o, tg::q_bracket(3).is_zero(), "[3]");
  for (long n = -9; n <= 9; ++n) require(o, tg::q_bracket(n + 3) == tg::q_bracket(n), "[n+3] at " + std::to_string(n));
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  double worst = 0;
  for (int k = 0; k < 200; ++k) {
    CycScalar::Coeffs a, b;
    for (std::size_t j = 0; j < 4; ++j) {
      a[j] = tg::Rational(num(rng), den(rng));
      a[j].canonicalize();
      b[j] = tg::Rational(num(rng), den(rng));
      b[j].canonicalize();
    }
    const CycScalar x(a), y(b);
    for (const CycScalar& r : {x, x * y, x + y, x.conj()})
      worst = std::max(worst, std::abs(r.to_complex() - oracle::embed(r)));
    worst = std::max(worst, std::abs((x * y).to_complex() - oracle::embed(x) * oracle::embed(y)));
  }
  require(o, worst < 1e-12, "numeric embedding");
  std::ostringstream out;
  out.precision(2);
  out << "max embedding error " << worst;
  o.detail = out.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"oscillator relations", oscillator_relations},
      {"nilpotency", nilpotency},
      {"constrained dimensions", dimensions},
      {"operator-level eigenstate", eigenstate},
      {"integrals and vacuum products", integrals},
      {"weight solver", weight_solver},
      {"gram matrix and round trip", gram},
      {"audit completeness", audit_completeness},
      {"susy factor", susy},
      {"scalar layer", scalar_layer},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s %d %s%s%s\n", o.ok ? "PASS" : "FAIL", ++index, c.name, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
