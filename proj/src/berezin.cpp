#include "tg/berezin.hpp"

#include <algorithm>

#include "tg/errors.hpp"

namespace tg {

GElement integrate(const GElement& e, GeneratorSym var) {
  GElement result;
  for (const auto& [w, c] : e.terms()) {
    if (std::count(w.begin(), w.end(), var) != 2) continue;
    // Canonical words keep a doubled symbol adjacent: the least rotation of
    // (a, b, a) is never itself.
    auto first = std::find(w.begin(), w.end(), var);
    if (std::next(first) == w.end() || *std::next(first) != var)
      throw Error("integrate: non-adjacent square in a non-canonical word");
    GWord rest(w.begin(), first);
    rest.insert(rest.end(), first + 2, w.end());
    result.add_term(rest, c);
  }
  return result;
}

CycScalar double_integral(const GElement& e, int index) {
  const GWord top{GeneratorSym::xi(index), GeneratorSym::xi(index), GeneratorSym::xb(index),
                  GeneratorSym::xb(index)};
  return e.coefficient(top);
}

CycScalar measure_factor(MeasurePhaseMode mode) {
  return mode == MeasurePhaseMode::notational ? CycScalar(1L) : CycScalar::q_pow(2);
}

int grade(const GradedSym& s) {
  return std::visit([](const auto& sym) { return sym.grade(); }, s);
}

SwapResult differential_swap(const GradedSym& left, const GradedSym& right) {
  const int gl = grade(left);
  const int gr = grade(right);
  if (gl == gr) throw UndefinedRelation("no exchange relation between two symbols of grade " +
                                        std::to_string(gl));
  // grade 1 before grade 2 exchanges with q, the reverse with q^2
  const CycScalar phase = gl == 1 ? CycScalar::q() : CycScalar::q_pow(2);
  return {phase, right, left};
}

}  // namespace tg
