#pragma once

// Words mixing Grassmann generators with oscillator symbols. The only
// exchanges available are
//   xi ad = q ad xi,   xb a = conj(q) a xb,
// plus transparency of the grade-0 symbols N and q^(sN). The pairs (xi, a)
// and (xb, ad) carry no relation and are never transposed.

#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "tg/grassmann.hpp"
#include "tg/oscillator.hpp"

namespace tg {

using MixedSym = std::variant<GeneratorSym, OpSym>;
using MixedWord = std::vector<MixedSym>;

struct MixedTerm {
  CycScalar coeff;
  MixedWord word;
};

// Phase for gen * op = phase * op * gen. Throws UndefinedRelation.
CycScalar exchange_phase(const GeneratorSym& gen, const OpSym& op);

struct Segregated {
  CycScalar phase;
  std::vector<OpSym> ops;
  GWord gens;
};

// Moves every Grassmann symbol to the right of every operator symbol.
Segregated push_grassmann_right(std::span<const MixedSym> word);

// Normal form: normal-ordered operator monomial on the left, canonical
// Grassmann word on the right.
class MixedElement {
 public:
  using Key = std::pair<OpKey, GWord>;
  struct KeyLess {
    bool operator()(const Key& lhs, const Key& rhs) const {
      if (lhs.first != rhs.first) return lhs.first < rhs.first;
      return WordLess{}(lhs.second, rhs.second);
    }
  };
  using Terms = std::map<Key, CycScalar, KeyLess>;

  MixedElement() = default;
  MixedElement(const CycScalar& scalar);  // NOLINT

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Key& key, const CycScalar& coeff);

  bool is_scalar() const;
  bool is_pure_grassmann() const;
  bool is_pure_operator() const;
  GElement grassmann_part() const;  // valid when is_pure_grassmann()
  OpElement operator_part() const;  // valid when is_pure_operator()

  MixedElement& operator+=(const MixedElement& rhs);
  MixedElement& operator*=(const CycScalar& s);
  friend MixedElement operator*(MixedElement lhs, const CycScalar& s) { return lhs *= s; }

  friend bool operator==(const MixedElement& lhs, const MixedElement& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

MixedElement mixed_normalize(std::span<const MixedSym> word, const AlgebraSignature& sig);

MixedWord to_mixed(std::span<const GeneratorSym> word);
MixedWord to_mixed(std::span<const OpSym> word);
MixedWord concat(const MixedWord& lhs, const MixedWord& rhs);

}  // namespace tg
