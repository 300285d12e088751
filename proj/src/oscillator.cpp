#include "tg/oscillator.hpp"

namespace tg {

namespace {

constexpr int kNilpotency = 3;

int mod3(int x) { return ((x % 3) + 3) % 3; }

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// f(N) -> f(N + 1) for f = N^k q^(s N), times coeff.
OpElement shift_creation(const OpKey& key, const CycScalar& coeff) {
  OpElement out;
  const CycScalar phase = coeff * CycScalar::q_pow(key.q_power);
  for (int j = 0; j <= key.num_power; ++j) {
    OpKey k2 = key;
    k2.creation += 1;
    k2.num_power = j;
    out.add_term(k2, phase * CycScalar(binomial(key.num_power, j)));
  }
  return out;
}

OpElement multiply_monomial(const OpKey& key, const CycScalar& coeff, OpSym sym) {
  OpElement out;
  switch (sym.tag) {
    case OpTag::a: {
      if (key.annihilation + 1 >= kNilpotency) return out;
      OpKey k2 = key;
      k2.annihilation += 1;
      out.add_term(k2, coeff);
      return out;
    }
    case OpTag::num: {
      // a^n N = (N + n) a^n
      OpKey k2 = key;
      k2.num_power += 1;
      out.add_term(k2, coeff);
      out.add_term(key, coeff * CycScalar(static_cast<long>(key.annihilation)));
      return out;
    }
    case OpTag::q_num_power: {
      // a^n q^(tN) = q^(t(N+n)) a^n
      OpKey k2 = key;
      k2.q_power = mod3(key.q_power + sym.s);
      out.add_term(k2, coeff * CycScalar::q_pow(static_cast<long>(sym.s) * key.annihilation));
      return out;
    }
    case OpTag::a_plus: {
      if (key.annihilation == 0) {
        // f(N) ad = ad f(N + 1)
        if (key.creation + 1 >= kNilpotency) return out;
        return shift_creation(key, coeff);
      }
      // a^n ad = a^(n-1) (q ad a + q^-N)
      OpKey lower = key;
      lower.annihilation -= 1;
      OpElement base = OpElement::monomial(lower, coeff);
      OpElement moved = multiply_symbol(multiply_symbol(base, OpSym::ad()), OpSym::a());
      out += moved * CycScalar::q();
      out += multiply_symbol(base, OpSym::qN(-1));
      return out;
    }
  }
  return out;
}

}  // namespace

OpElement::OpElement(const CycScalar& scalar) {
  if (!scalar.is_zero()) terms_.emplace(OpKey{}, scalar);
}

OpElement OpElement::monomial(OpKey key, CycScalar coeff) {
  OpElement e;
  key.q_power = mod3(key.q_power);
  e.add_term(key, coeff);
  return e;
}

CycScalar OpElement::coefficient(const OpKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? CycScalar() : it->second;
}

void OpElement::add_term(const OpKey& key, const CycScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OpElement& OpElement::operator+=(const OpElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

OpElement& OpElement::operator-=(const OpElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

OpElement& OpElement::operator*=(const CycScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

OpElement multiply_symbol(const OpElement& e, OpSym sym) {
  OpElement out;
  for (const auto& [key, coeff] : e.terms()) out += multiply_monomial(key, coeff, sym);
  return out;
}

std::vector<OpSym> spell(const OpKey& key) {
  std::vector<OpSym> word;
  for (int k = 0; k < key.creation; ++k) word.push_back(OpSym::ad());
  for (int k = 0; k < key.num_power; ++k) word.push_back(OpSym::num());
  if (key.q_power != 0) word.push_back(OpSym::qN(key.q_power));
  for (int k = 0; k < key.annihilation; ++k) word.push_back(OpSym::a());
  return word;
}

OpElement operator*(const OpElement& lhs, const OpElement& rhs) {
  OpElement out;
  for (const auto& [key, coeff] : rhs.terms()) {
    OpElement partial = lhs * coeff;
    for (const auto& sym : spell(key)) partial = multiply_symbol(partial, sym);
    out += partial;
  }
  return out;
}

OpElement op_normalize(std::span<const OpSym> word) {
  OpElement e(CycScalar(1L));
  for (const auto& sym : word) e = multiply_symbol(e, sym);
  return e;
}

FockTriple fock_matrices() {
  FockTriple t{exact_zero(), exact_zero(), exact_zero()};
  const CycScalar root[3] = {CycScalar(0L), CycScalar(1L), sqrt_bracket2()};
  for (int n = 1; n < kFockDim; ++n) {
    t.a(n - 1, n) = root[n];
    t.a_plus(n, n - 1) = root[n];
  }
  for (int n = 0; n < kFockDim; ++n) t.num(n, n) = CycScalar(static_cast<long>(n));
  return t;
}

ExactMatrix q_num_matrix(int s) {
  ExactMatrix m = exact_zero();
  for (int n = 0; n < kFockDim; ++n) m(n, n) = CycScalar::q_pow(static_cast<long>(s) * n);
  return m;
}

ExactMatrix symbol_matrix(OpSym sym) {
  static const FockTriple t = fock_matrices();
  switch (sym.tag) {
    case OpTag::a: return t.a;
    case OpTag::a_plus: return t.a_plus;
    case OpTag::num: return t.num;
    case OpTag::q_num_power: return q_num_matrix(sym.s);
  }
  return exact_zero();
}

ExactMatrix rep(const OpElement& e) {
  ExactMatrix out = exact_zero();
  for (const auto& [key, coeff] : e.terms()) {
    ExactMatrix term = exact_identity();
    for (const auto& sym : spell(key)) term = (term * symbol_matrix(sym)).eval();
    out += term * coeff;
  }
  return out;
}

ExactMatrix rep_word(std::span<const OpSym> word) {
  ExactMatrix out = exact_identity();
  for (const auto& sym : word) out = (out * symbol_matrix(sym)).eval();
  return out;
}

}  // namespace tg
