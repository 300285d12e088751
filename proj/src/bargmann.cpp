#include "tg/bargmann.hpp"

#include "tg/errors.hpp"

namespace tg {

namespace {

GWord repeated(GeneratorSym sym, int n) { return GWord(static_cast<std::size_t>(n), sym); }

}  // namespace

GElement BargmannRep::element(int index) const {
  GElement e;
  for (int n = 0; n < kFockDim; ++n)
    e.add_term(repeated(GeneratorSym::xb(index), n), r[static_cast<std::size_t>(n)]);
  return e;
}

GElement AdjointRep::element(int index) const {
  GElement e;
  for (int n = 0; n < kFockDim; ++n)
    e.add_term(repeated(GeneratorSym::xi(index), n), s[static_cast<std::size_t>(n)]);
  return e;
}

std::array<CycScalar, 3> representative_coefficients(const ConventionConfig& conv) {
  const BraVec bra = coherent_bra(conv);
  std::array<CycScalar, 3> c;
  for (int n = 0; n < kFockDim; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    c[idx] = bra.components[idx].coefficient(repeated(GeneratorSym::xb(0), n));
  }
  return c;
}

BargmannRep to_rep(const ExactVector& psi, const ConventionConfig& conv) {
  const auto c = representative_coefficients(conv);
  BargmannRep rep;
  for (std::size_t n = 0; n < 3; ++n) rep.r[n] = c[n] * psi(static_cast<Eigen::Index>(n));
  return rep;
}

ExactVector from_rep(const BargmannRep& rep, const ConventionConfig& conv) {
  const auto c = representative_coefficients(conv);
  ExactVector psi;
  for (std::size_t n = 0; n < 3; ++n) psi(static_cast<Eigen::Index>(n)) = rep.r[n] / c[n];
  return psi;
}

AdjointRep to_adjoint_rep(const ExactVector& psi, const ConventionConfig& conv) {
  const StateVec ket = coherent_ket(conv);
  AdjointRep adj;
  for (int n = 0; n < kFockDim; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const CycScalar k = ket.components[idx].coefficient(repeated(GeneratorSym::xi(0), n));
    adj.s[idx] = psi(n).conj() * k;
  }
  return adj;
}

CycScalar bargmann_inner(const AdjointRep& psi_bar, const BargmannRep& phi, const WeightFunction& w,
                         const ConventionConfig& conv) {
  CycScalar total;
  for (int n = 0; n < kFockDim; ++n) {
    const auto ni = static_cast<std::size_t>(n);
    if (psi_bar.s[ni].is_zero()) continue;
    const GElement left = GElement::word(repeated(GeneratorSym::xi(0), n), psi_bar.s[ni]);
    for (int m = 0; m < kFockDim; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      if (phi.r[mi].is_zero()) continue;
      const GElement right = GElement::word(repeated(GeneratorSym::xb(0), m), phi.r[mi]);
      total += resolution_entry(left, n, right, m, w, conv, ResolutionForm::sandwiched);
    }
  }
  return total;
}

ExactVector basis_vector(int n) {
  ExactVector v;
  v.setConstant(CycScalar(0L));
  v(n) = CycScalar(1L);
  return v;
}

ExactMatrix gram_matrix(const ConventionConfig& conv, const WeightFunction& w) {
  ExactMatrix g = exact_zero();
  for (int n = 0; n < kFockDim; ++n)
    for (int m = 0; m < kFockDim; ++m)
      g(n, m) = bargmann_inner(to_adjoint_rep(basis_vector(n), conv),
                               to_rep(basis_vector(m), conv), w, conv);
  return g;
}

WeightFunction bargmann_weight(const ConventionConfig& conv) {
  return solve_weight(conv, ResolutionForm::sandwiched);
}

}  // namespace tg
