#pragma once

// Z3-graded Grassmann algebra on N generator pairs (xi_a, xb_a).
//
// Canonical form of a word: every unbarred symbol left of every barred one,
// each same-kind block of length 3 rotated to its least cyclic rotation, and
// blocks of length 1 or 2 left as written (no binary relation exists between
// generators of the same kind).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tg/scalars.hpp"

namespace tg {

enum class GenKind : std::uint8_t { unbarred, barred };

struct GeneratorSym {
  GenKind kind = GenKind::unbarred;
  int index = 0;

  static constexpr GeneratorSym xi(int a) { return {GenKind::unbarred, a}; }
  static constexpr GeneratorSym xb(int a) { return {GenKind::barred, a}; }

  constexpr int grade() const { return kind == GenKind::unbarred ? 1 : 2; }

  friend constexpr auto operator<=>(const GeneratorSym&, const GeneratorSym&) = default;
};

using GWord = std::vector<GeneratorSym>;

// Shortlex: shorter words first, then lexicographic by (kind, index).
struct WordLess {
  bool operator()(const GWord& lhs, const GWord& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

int grade(std::span<const GeneratorSym> word);

enum class RuleMode : std::uint8_t {
  constrained,  // grading-survival list enforced
  relational,   // only the exchange relations and nilpotency
};

struct AlgebraSignature {
  int n_generators = 1;
  RuleMode mode = RuleMode::relational;
};

class GElement {
 public:
  using Terms = std::map<GWord, CycScalar, WordLess>;

  GElement() = default;
  GElement(const CycScalar& scalar);  // NOLINT: scalars embed as multiples of 1
  static GElement word(GWord w, CycScalar coeff = CycScalar(1L));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Coefficient of a word as stored (zero if absent).
  CycScalar coefficient(const GWord& w) const;

  void add_term(const GWord& w, const CycScalar& coeff);

  GElement& operator+=(const GElement& rhs);
  GElement& operator-=(const GElement& rhs);
  GElement& operator*=(const CycScalar& s);
  friend GElement operator+(GElement lhs, const GElement& rhs) { return lhs += rhs; }
  friend GElement operator-(GElement lhs, const GElement& rhs) { return lhs -= rhs; }
  friend GElement operator*(GElement lhs, const CycScalar& s) { return lhs *= s; }
  friend GElement operator*(const CycScalar& s, GElement rhs) { return rhs *= s; }
  GElement operator-() const;

  friend bool operator==(const GElement& lhs, const GElement& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

// Throws IndexOutOfRange when a symbol index is outside [0, N).
GElement normalize(std::span<const GeneratorSym> word, const AlgebraSignature& sig);
GElement normalize(const GElement& e, const AlgebraSignature& sig);

// normalize(concatenation), bilinear.
GElement multiply(const GElement& x, const GElement& y, const AlgebraSignature& sig);

// Power with exponent >= 0.
GElement power(const GElement& x, int exponent, const AlgebraSignature& sig);

// True when the (unbarred, barred) counts are on the constrained-mode
// survival list {(0,0),(1,0),(0,1),(2,0),(0,2),(1,1),(3,0),(0,3)}.
bool survives_grading(int unbarred, int barred);

inline constexpr int kMaxEnumerationGenerators = 6;

// All canonical basis words. Throws GuardExceeded for N > 6.
std::vector<GWord> enumerate_basis(const AlgebraSignature& sig);

// (3 + 4N + 9N^2 + 2N^3) / 3
long constrained_dimension(long n);

}  // namespace tg
