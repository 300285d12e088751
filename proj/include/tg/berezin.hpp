#pragma once

// Berezin-type integration over Z3-Grassmann variables:
//   int 1 dxi = int xi dxi = 0,  int xi^2 dxi = 1,  and the same for xb.

#include <cstdint>
#include <variant>

#include "tg/grassmann.hpp"

namespace tg {

enum class DiffKind : std::uint8_t { d_unbarred, d_barred };

struct DifferentialSym {
  DiffKind kind = DiffKind::d_unbarred;
  int index = 0;

  static constexpr DifferentialSym dxi(int a) { return {DiffKind::d_unbarred, a}; }
  static constexpr DifferentialSym dxb(int a) { return {DiffKind::d_barred, a}; }

  // dxi grades like xi, dxb like xb.
  constexpr int grade() const { return kind == DiffKind::d_unbarred ? 1 : 2; }
  constexpr GeneratorSym variable() const {
    return {kind == DiffKind::d_unbarred ? GenKind::unbarred : GenKind::barred, index};
  }

  friend constexpr auto operator<=>(const DifferentialSym&, const DifferentialSym&) = default;
};

// Single-variable integral of a canonical element. Each term contributes
// only when `var` occurs exactly twice; the pair is then deleted in place.
GElement integrate(const GElement& e, GeneratorSym var);

// int dxb dxi over the pair with the given index: the coefficient of the
// canonical word xi^2 xb^2. Expects a single-pair (N = 1) relational element.
CycScalar double_integral(const GElement& e, int index = 0);

enum class MeasurePhaseMode : std::uint8_t {
  notational,   // measure placement carries no phase
  transported,  // dxb dxi is rewritten as q^2 dxi dxb before integrating
};

// Scalar factor the measure contributes to every double integral.
CycScalar measure_factor(MeasurePhaseMode mode);

using GradedSym = std::variant<GeneratorSym, DifferentialSym>;

int grade(const GradedSym& s);

struct SwapResult {
  CycScalar phase;
  GradedSym left;
  GradedSym right;
};

// left * right = phase * right * left, following
//   dxi xb = q xb dxi,  xi dxb = q dxb xi,  dxi dxb = q dxb dxi.
// Same-grade pairs have no relation and throw UndefinedRelation.
SwapResult differential_swap(const GradedSym& left, const GradedSym& right);

}  // namespace tg
