#pragma once

// Grassmann representatives of Fock vectors: psi(xb) = <xb|psi> and the
// adjoint psi_bar(xi) = <psi|xi>, with the weighted inner product obtained by
// sandwiching the resolution int |xi> dxb dxi w <xb| between two states.

#include <array>

#include "tg/states.hpp"

namespace tg {

// r0 + r1 xb + r2 xb^2
struct BargmannRep {
  std::array<CycScalar, 3> r;
  GElement element(int index = 0) const;
  friend bool operator==(const BargmannRep&, const BargmannRep&) = default;
};

// s0 + s1 xi + s2 xi^2
struct AdjointRep {
  std::array<CycScalar, 3> s;
  GElement element(int index = 0) const;
  friend bool operator==(const AdjointRep&, const AdjointRep&) = default;
};

// c_n with <xb|n> = c_n xb^n, read off the coherent bra: (1, q, -sqrt[2]).
std::array<CycScalar, 3> representative_coefficients(const ConventionConfig& conv);

BargmannRep to_rep(const ExactVector& psi, const ConventionConfig& conv);

// Exact inverse of to_rep.
ExactVector from_rep(const BargmannRep& rep, const ConventionConfig& conv);

// s_n = conj(psi_n) k_n, where k_n xi^n is the n-th coherent ket component.
AdjointRep to_adjoint_rep(const ExactVector& psi, const ConventionConfig& conv);

CycScalar bargmann_inner(const AdjointRep& psi_bar, const BargmannRep& phi, const WeightFunction& w,
                         const ConventionConfig& conv);

// Entry (n, m) = bargmann_inner(adjoint of |n>, rep of |m>).
ExactMatrix gram_matrix(const ConventionConfig& conv, const WeightFunction& w);

// The weight solving the sandwiched resolution under conv.
WeightFunction bargmann_weight(const ConventionConfig& conv);

ExactVector basis_vector(int n);

}  // namespace tg
