#include "tg/grassmann.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tg/errors.hpp"

namespace tg {

int grade(std::span<const GeneratorSym> word) {
  int g = 0;
  for (const auto& s : word) g += s.grade();
  return g % 3;
}

GElement::GElement(const CycScalar& scalar) {
  if (!scalar.is_zero()) terms_.emplace(GWord{}, scalar);
}

GElement GElement::word(GWord w, CycScalar coeff) {
  GElement e;
  e.add_term(w, coeff);
  return e;
}

CycScalar GElement::coefficient(const GWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CycScalar() : it->second;
}

void GElement::add_term(const GWord& w, const CycScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GElement& GElement::operator+=(const GElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

GElement& GElement::operator-=(const GElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

GElement& GElement::operator*=(const CycScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

GElement GElement::operator-() const {
  GElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

namespace {

// Canonicalizes a same-kind block in place. Returns false when the block
// vanishes; otherwise adds the ternary-relation phase exponent to `phase`.
// `rotation_unit` is the q-exponent picked up by one left rotation:
// xi_a xi_b xi_c = q xi_b xi_c xi_a, and q^2 for the barred block.
bool canonicalize_block(GWord& block, int rotation_unit, int& phase) {
  if (block.size() >= 4) return false;
  if (block.size() < 3) return true;
  if (block[0] == block[1] && block[1] == block[2]) return false;
  int best = 0;
  GWord best_word = block;
  for (int r = 1; r < 3; ++r) {
    GWord rotated = block;
    std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
    if (rotated < best_word) {
      best_word = std::move(rotated);
      best = r;
    }
  }
  block = std::move(best_word);
  phase += best * rotation_unit;
  return true;
}

}  // namespace

bool survives_grading(int unbarred, int barred) {
  if (unbarred == 0) return barred <= 3;
  if (barred == 0) return unbarred <= 3;
  return unbarred == 1 && barred == 1;
}

GElement normalize(std::span<const GeneratorSym> word, const AlgebraSignature& sig) {
  GWord unbarred;
  GWord barred;
  long inversions = 0;
  for (const auto& s : word) {
    if (s.index < 0 || s.index >= sig.n_generators)
      throw IndexOutOfRange("generator index " + std::to_string(s.index) +
                            " outside [0, " + std::to_string(sig.n_generators) + ")");
    if (s.kind == GenKind::unbarred) {
      // xb xi = q^2 xi xb, once per barred symbol already seen
      inversions += static_cast<long>(barred.size());
      unbarred.push_back(s);
    } else {
      barred.push_back(s);
    }
  }
  int phase = static_cast<int>((2 * inversions) % 3);
  if (!canonicalize_block(unbarred, 1, phase)) return {};
  if (!canonicalize_block(barred, 2, phase)) return {};
  if (sig.mode == RuleMode::constrained &&
      !survives_grading(static_cast<int>(unbarred.size()), static_cast<int>(barred.size())))
    return {};
  GWord canonical = std::move(unbarred);
  canonical.insert(canonical.end(), barred.begin(), barred.end());
  return GElement::word(std::move(canonical), CycScalar::q_pow(phase));
}

GElement normalize(const GElement& e, const AlgebraSignature& sig) {
  GElement result;
  for (const auto& [w, c] : e.terms()) result += normalize(w, sig) * c;
  return result;
}

GElement multiply(const GElement& x, const GElement& y, const AlgebraSignature& sig) {
  GElement result;
  GWord joined;
  for (const auto& [wx, cx] : x.terms()) {
    for (const auto& [wy, cy] : y.terms()) {
      joined = wx;
      joined.insert(joined.end(), wy.begin(), wy.end());
      result += normalize(joined, sig) * (cx * cy);
    }
  }
  return result;
}

GElement power(const GElement& x, int exponent, const AlgebraSignature& sig) {
  GElement result(CycScalar(1L));
  for (int k = 0; k < exponent; ++k) result = multiply(result, x, sig);
  return result;
}

namespace {

void words_up_to(GenKind kind, int n, std::size_t max_len, std::vector<GWord>& out) {
  out.push_back({});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      if (out[k].size() != len - 1) continue;
      for (int a = 0; a < n; ++a) {
        GWord w = out[k];
        w.push_back({kind, a});
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
}

}  // namespace

std::vector<GWord> enumerate_basis(const AlgebraSignature& sig) {
  if (sig.n_generators > kMaxEnumerationGenerators)
    throw GuardExceeded("enumerate_basis supports at most " +
                        std::to_string(kMaxEnumerationGenerators) + " generator pairs");
  if (sig.n_generators < 1) throw IndexOutOfRange("n_generators must be positive");
  // Blocks longer than three vanish, so these words reach every canonical form.
  std::vector<GWord> unbarred;
  std::vector<GWord> barred;
  words_up_to(GenKind::unbarred, sig.n_generators, 3, unbarred);
  words_up_to(GenKind::barred, sig.n_generators, 3, barred);
  std::set<GWord, WordLess> basis;
  GWord joined;
  for (const auto& u : unbarred) {
    for (const auto& b : barred) {
      joined = u;
      joined.insert(joined.end(), b.begin(), b.end());
      const GElement e = normalize(joined, sig);
      for (const auto& [w, c] : e.terms()) basis.insert(w);
    }
  }
  return {basis.begin(), basis.end()};
}

long constrained_dimension(long n) { return (3 + 4 * n + 9 * n * n + 2 * n * n * n) / 3; }

}  // namespace tg
