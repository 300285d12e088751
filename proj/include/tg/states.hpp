#pragma once

// Coherent states of the k = 3 parafermion over a Z3-Grassmann variable.
//
// Kets come in two layouts. An OperatorKet keeps Grassmann coefficients to
// the right of |n>, which is what acting with mixed words on |0> produces and
// needs no convention. A StateVec holds them to the left, K_n |n>; getting
// there means moving Grassmann factors across kets, and the algebra does not
// fix the phase for that. ConventionConfig carries the choice.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tg/berezin.hpp"
#include "tg/matrix.hpp"
#include "tg/mixed.hpp"

namespace tg {

// q-exponents indexed [object grade][grade of the moved Grassmann word];
// nullopt means no relation.
using PhaseTable = std::array<std::array<std::optional<int>, 3>, 3>;

struct ConventionConfig {
  std::string name;
  // |n> X = q^e X |n> for a Grassmann word X of positive degree.
  PhaseTable ket_swap{};
  // q-exponent picked up when a Grassmann word of positive degree leaves a
  // diagonal level, either the projector |n><n| or a contraction <n| . |n>.
  // Indexed by ket grade.
  std::array<int, 3> level_phase{0, 0, 0};
  // |0> behaves like grade 0, |1> like grade 2, |2> like grade 1.
  std::array<int, 3> ket_grades{0, 2, 1};
  MeasurePhaseMode measure_phase_mode = MeasurePhaseMode::notational;

  int ket_grade(int n) const { return ket_grades.at(static_cast<std::size_t>(n)); }
  // Throws UndefinedRelation for a missing table entry.
  CycScalar ket_swap_phase(int object_grade, int factor_grade) const;
  CycScalar level_factor(int n) const;
};

// Phases chosen so that the printed coherent state, overlap, weight and
// resolution of the identity come out exactly: every Grassmann word of
// positive degree crossing a non-vacuum level picks up q^2.
ConventionConfig paper_convention(MeasurePhaseMode mode = MeasurePhaseMode::notational);

// Kets exchange with Grassmann elements exactly like generators of their
// grade: grade 1 before grade 2 gives q, grade 2 before grade 1 gives q^2,
// grade-0 objects are transparent and same-grade pairs have no relation.
ConventionConfig uniform_eq5_convention(MeasurePhaseMode mode = MeasurePhaseMode::notational);

// "paper" or "uniform-eq5", optionally suffixed "/transported".
ConventionConfig convention_by_name(std::string_view name);

// Both shipped conventions under both measure readings.
std::vector<ConventionConfig> shipped_conventions();

struct OperatorKet {
  std::array<GElement, 3> components;  // sum |n> G_n
  friend bool operator==(const OperatorKet&, const OperatorKet&) = default;
};

struct StateVec {
  std::array<GElement, 3> components;  // sum K_n |n>
  friend bool operator==(const StateVec&, const StateVec&) = default;
};

struct BraVec {
  std::array<GElement, 3> components;  // sum <n| B_n
  friend bool operator==(const BraVec&, const BraVec&) = default;
};

// c0 + c1 xb xi + c2 (xb xi)^2
struct WeightFunction {
  CycScalar c0;
  CycScalar c1;
  CycScalar c2;

  GElement element(int index = 0) const;
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

// -q + xb xi + xb xi xb xi
WeightFunction printed_weight();

AlgebraSignature single_pair();  // N = 1, relational
AlgebraSignature two_pairs();    // N = 2, relational

// Acts with each mixed word on |0>: Grassmann symbols are pushed right to the
// vacuum (which is transparent), then the operator part acts through its
// Fock matrix.
OperatorKet apply_to_vacuum(std::span<const MixedTerm> terms, const AlgebraSignature& sig);

enum class GeneratorOrder {
  creation_first,   // f(ad xi)
  grassmann_first,  // f(xi ad)
};

// Terms of f(x) = 1 + x - x^2 with x = ad xi (or xi ad).
std::vector<MixedTerm> coherent_generator(int index = 0,
                                          GeneratorOrder order = GeneratorOrder::creation_first);

OperatorKet coherent_ket_operator_form(int index = 0,
                                       GeneratorOrder order = GeneratorOrder::creation_first);

// Moves each G_n left across |n> with the convention's ket phase.
StateVec to_components(const OperatorKet& ket, const ConventionConfig& conv);

// f(ad xi)|0> in component layout.
StateVec coherent_ket(const ConventionConfig& conv, int index = 0);

// <0| + q <1| xb - sqrt[2] <2| xb^2, as written. The convention does not
// enter: the bra is a definition, not the conjugate of the ket.
BraVec coherent_bra(const ConventionConfig& conv, int index = 0);

// a f(ad xi)|0> and xi f(ad xi)|0>, both rewritten at operator level.
OperatorKet annihilate_operator_form(int index = 0);
OperatorKet eigenvalue_operator_form(int index = 0);

// Component layout of a f(ad xi)|0>. May throw UndefinedRelation.
StateVec annihilate(const ConventionConfig& conv, int index = 0);

// Sum over n of the level phase times B_n K_n, normalized in `sig`.
GElement overlap(const BraVec& bra, const StateVec& ket, const ConventionConfig& conv,
                 const AlgebraSignature& sig);

enum class ResolutionForm {
  measure_left,  // int dxb dxi w |xi><xb|
  sandwiched,    // int |xi> dxb dxi w <xb|
};

// One matrix element of the weighted resolution of the identity, given the
// ket coefficient K_n and the bra coefficient B_m.
CycScalar resolution_entry(const GElement& ket_coeff, int n, const GElement& bra_coeff, int m,
                           const WeightFunction& w, const ConventionConfig& conv,
                           ResolutionForm form);

ExactMatrix identity_resolution(const ConventionConfig& conv, const WeightFunction& w,
                                ResolutionForm form);

// Weight making identity_resolution the identity. Throws SingularSystem.
WeightFunction solve_weight(const ConventionConfig& conv, ResolutionForm form);

}  // namespace tg
