#pragma once

// The k = 3 parafermionic oscillator {a, ad, N}:
//   a ad - q ad a = q^-N,  N a - a N = -a,  N ad - ad N = ad,
//   q^N ad = ad q^(N+1),   q^N a = a q^(N-1),
// both as a rewriting algebra and as exact 3x3 Fock matrices.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tg/matrix.hpp"

namespace tg {

enum class OpTag : std::uint8_t { a, a_plus, num, q_num_power };

struct OpSym {
  OpTag tag = OpTag::a;
  int s = 0;  // exponent for q_num_power: q^(s N)

  static constexpr OpSym a() { return {OpTag::a, 0}; }
  static constexpr OpSym ad() { return {OpTag::a_plus, 0}; }
  static constexpr OpSym num() { return {OpTag::num, 0}; }
  static constexpr OpSym qN(int s) { return {OpTag::q_num_power, s}; }

  constexpr int grade() const {
    switch (tag) {
      case OpTag::a: return 1;
      case OpTag::a_plus: return 2;
      default: return 0;
    }
  }

  friend constexpr auto operator<=>(const OpSym&, const OpSym&) = default;
};

// Normal-ordered monomial ad^creation * N^num_power * q^(q_power N) * a^annihilation.
struct OpKey {
  int creation = 0;
  int num_power = 0;
  int q_power = 0;  // reduced mod 3
  int annihilation = 0;

  friend constexpr auto operator<=>(const OpKey&, const OpKey&) = default;
};

class OpElement {
 public:
  using Terms = std::map<OpKey, CycScalar>;

  OpElement() = default;
  OpElement(const CycScalar& scalar);  // NOLINT: scalar multiple of the identity
  static OpElement monomial(OpKey key, CycScalar coeff = CycScalar(1L));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  CycScalar coefficient(const OpKey& key) const;

  void add_term(const OpKey& key, const CycScalar& coeff);

  OpElement& operator+=(const OpElement& rhs);
  OpElement& operator-=(const OpElement& rhs);
  OpElement& operator*=(const CycScalar& s);
  friend OpElement operator+(OpElement lhs, const OpElement& rhs) { return lhs += rhs; }
  friend OpElement operator-(OpElement lhs, const OpElement& rhs) { return lhs -= rhs; }
  friend OpElement operator*(OpElement lhs, const CycScalar& s) { return lhs *= s; }
  friend OpElement operator*(const CycScalar& s, OpElement rhs) { return rhs *= s; }
  // Algebra product, result normal-ordered.
  friend OpElement operator*(const OpElement& lhs, const OpElement& rhs);

  friend bool operator==(const OpElement& lhs, const OpElement& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  Terms terms_;
};

// Right-multiplies by one symbol and normal-orders. a^3 and ad^3 vanish eagerly.
OpElement multiply_symbol(const OpElement& e, OpSym sym);

OpElement op_normalize(std::span<const OpSym> word);

// Symbol sequence spelling a normal-ordered monomial.
std::vector<OpSym> spell(const OpKey& key);

struct FockTriple {
  ExactMatrix a;
  ExactMatrix a_plus;
  ExactMatrix num;
};

// a|n> = sqrt[n] |n-1>, ad|n> = sqrt[n+1] |n+1>, N|n> = n|n>, with
// sqrt[1] = 1 and sqrt[2] = i.
FockTriple fock_matrices();

// q^(s N) = diag(1, q^s, q^2s)
ExactMatrix q_num_matrix(int s);

ExactMatrix symbol_matrix(OpSym sym);

// Evaluation homomorphism into 3x3 matrices.
ExactMatrix rep(const OpElement& e);

// Product of the factor matrices, without rewriting.
ExactMatrix rep_word(std::span<const OpSym> word);

}  // namespace tg
