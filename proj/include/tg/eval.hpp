#pragma once

// Evaluates parsed expressions into the engine's normal forms.
//
// A term may hold at most one ket and one bra. Kets go last (Grassmann
// factors may follow in operator layout), a bra goes first; bra ... ket
// contracts to a Grassmann element. Differentials are accepted only
// trailing a Grassmann integrand: X*dxi(0) integrates X over xi(0).

#include <string>
#include <variant>

#include "json.hpp"
#include "tg/expr.hpp"
#include "tg/states.hpp"

namespace tg {

struct EvalContext {
  RuleMode mode = RuleMode::relational;
  ConventionConfig convention = paper_convention();
  int n_generators = 0;  // 0: one more than the largest index used, at least 1
};

using EvalResult = std::variant<CycScalar, GElement, OpElement, MixedElement, StateVec, BraVec>;

// Throws TypeMismatch, UndefinedRelation, IndexOutOfRange, DivisionByZero.
EvalResult evaluate(const Expr& e, const EvalContext& ctx);
EvalResult evaluate(std::string_view text, const EvalContext& ctx);

// Canonical element of a Grassmann-valued expression; TypeMismatch otherwise.
GElement evaluate_grassmann(std::string_view text, const EvalContext& ctx);

std::string to_string(const EvalResult& r);
nlohmann::json to_json(const EvalResult& r);
const char* result_kind(const EvalResult& r);

}  // namespace tg
