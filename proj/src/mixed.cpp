#include "tg/mixed.hpp"

#include "tg/errors.hpp"

namespace tg {

CycScalar exchange_phase(const GeneratorSym& gen, const OpSym& op) {
  if (op.grade() == 0) return CycScalar(1L);
  if (gen.kind == GenKind::unbarred && op.tag == OpTag::a_plus) return CycScalar::q();
  if (gen.kind == GenKind::barred && op.tag == OpTag::a) return CycScalar::q().conj();
  throw UndefinedRelation(std::string("no relation is imposed on ") +
                          (gen.kind == GenKind::unbarred ? "xi a" : "xb ad"));
}

Segregated push_grassmann_right(std::span<const MixedSym> word) {
  Segregated out{CycScalar(1L), {}, {}};
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (const auto* op = std::get_if<OpSym>(&word[j])) {
      for (const auto& gen : out.gens) out.phase *= exchange_phase(gen, *op);
      out.ops.push_back(*op);
    } else {
      out.gens.push_back(std::get<GeneratorSym>(word[j]));
    }
  }
  return out;
}

MixedElement::MixedElement(const CycScalar& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Key{OpKey{}, GWord{}}, scalar);
}

void MixedElement::add_term(const Key& key, const CycScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MixedElement::is_scalar() const {
  for (const auto& [k, c] : terms_)
    if (k.first != OpKey{} || !k.second.empty()) return false;
  return true;
}

bool MixedElement::is_pure_grassmann() const {
  for (const auto& [k, c] : terms_)
    if (k.first != OpKey{}) return false;
  return true;
}

bool MixedElement::is_pure_operator() const {
  for (const auto& [k, c] : terms_)
    if (!k.second.empty()) return false;
  return true;
}

GElement MixedElement::grassmann_part() const {
  GElement e;
  for (const auto& [k, c] : terms_)
    if (k.first == OpKey{}) e.add_term(k.second, c);
  return e;
}

OpElement MixedElement::operator_part() const {
  OpElement e;
  for (const auto& [k, c] : terms_)
    if (k.second.empty()) e.add_term(k.first, c);
  return e;
}

MixedElement& MixedElement::operator+=(const MixedElement& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

MixedElement& MixedElement::operator*=(const CycScalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

MixedElement mixed_normalize(std::span<const MixedSym> word, const AlgebraSignature& sig) {
  Segregated seg = push_grassmann_right(word);
  OpElement ops = op_normalize(seg.ops);
  GElement gens = normalize(seg.gens, sig);
  MixedElement out;
  for (const auto& [ok, oc] : ops.terms())
    for (const auto& [gw, gc] : gens.terms()) out.add_term({ok, gw}, seg.phase * oc * gc);
  return out;
}

MixedWord to_mixed(std::span<const GeneratorSym> word) { return {word.begin(), word.end()}; }

MixedWord to_mixed(std::span<const OpSym> word) { return {word.begin(), word.end()}; }

MixedWord concat(const MixedWord& lhs, const MixedWord& rhs) {
  MixedWord out = lhs;
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

}  // namespace tg
