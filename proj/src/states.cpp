#include "tg/states.hpp"

#include "tg/errors.hpp"

namespace tg {

CycScalar ConventionConfig::ket_swap_phase(int object_grade, int factor_grade) const {
  const auto& e = ket_swap.at(static_cast<std::size_t>(object_grade))
                      .at(static_cast<std::size_t>(factor_grade));
  if (!e)
    throw UndefinedRelation("convention '" + name + "' has no exchange between a grade-" +
                            std::to_string(object_grade) + " level and a grade-" +
                            std::to_string(factor_grade) + " Grassmann word");
  return CycScalar::q_pow(*e);
}

CycScalar ConventionConfig::level_factor(int n) const {
  return CycScalar::q_pow(level_phase.at(static_cast<std::size_t>(ket_grade(n))));
}

namespace {

std::string with_mode(std::string name, MeasurePhaseMode mode) {
  if (mode == MeasurePhaseMode::transported) name += "/transported";
  return name;
}

}  // namespace

ConventionConfig paper_convention(MeasurePhaseMode mode) {
  ConventionConfig c;
  c.name = with_mode("paper", mode);
  for (int g = 0; g < 3; ++g) {
    c.ket_swap[0][static_cast<std::size_t>(g)] = 0;
    c.ket_swap[1][static_cast<std::size_t>(g)] = 2;
    c.ket_swap[2][static_cast<std::size_t>(g)] = 2;
  }
  c.level_phase = {0, 2, 2};
  c.measure_phase_mode = mode;
  return c;
}

ConventionConfig uniform_eq5_convention(MeasurePhaseMode mode) {
  ConventionConfig c;
  c.name = with_mode("uniform-eq5", mode);
  for (int g = 0; g < 3; ++g) {
    c.ket_swap[0][static_cast<std::size_t>(g)] = 0;
    c.ket_swap[static_cast<std::size_t>(g)][0] = 0;
  }
  c.ket_swap[1][2] = 1;
  c.ket_swap[2][1] = 2;
  c.level_phase = {0, 0, 0};
  c.measure_phase_mode = mode;
  return c;
}

ConventionConfig convention_by_name(std::string_view name) {
  MeasurePhaseMode mode = MeasurePhaseMode::notational;
  constexpr std::string_view suffix = "/transported";
  if (name.size() > suffix.size() && name.substr(name.size() - suffix.size()) == suffix) {
    mode = MeasurePhaseMode::transported;
    name.remove_suffix(suffix.size());
  }
  if (name == "paper") return paper_convention(mode);
  if (name == "uniform-eq5") return uniform_eq5_convention(mode);
  throw Error("unknown convention '" + std::string(name) + "' (expected paper or uniform-eq5)");
}

std::vector<ConventionConfig> shipped_conventions() {
  return {paper_convention(), uniform_eq5_convention(),
          paper_convention(MeasurePhaseMode::transported),
          uniform_eq5_convention(MeasurePhaseMode::transported)};
}

GElement WeightFunction::element(int index) const {
  const AlgebraSignature sig{index + 1, RuleMode::relational};
  const GWord pair{GeneratorSym::xb(index), GeneratorSym::xi(index)};
  GWord quartic = pair;
  quartic.insert(quartic.end(), pair.begin(), pair.end());
  GElement e(c0);
  e += normalize(pair, sig) * c1;
  e += normalize(quartic, sig) * c2;
  return e;
}

WeightFunction printed_weight() { return {-CycScalar::q(), CycScalar(1L), CycScalar(1L)}; }

AlgebraSignature single_pair() { return {1, RuleMode::relational}; }

AlgebraSignature two_pairs() { return {2, RuleMode::relational}; }

OperatorKet apply_to_vacuum(std::span<const MixedTerm> terms, const AlgebraSignature& sig) {
  OperatorKet out;
  for (const auto& term : terms) {
    Segregated seg = push_grassmann_right(term.word);
    const ExactMatrix m = rep(op_normalize(seg.ops));
    const GElement tail = normalize(seg.gens, sig);
    for (int n = 0; n < kFockDim; ++n) {
      const CycScalar amp = m(n, 0);
      if (amp.is_zero()) continue;
      out.components[static_cast<std::size_t>(n)] += tail * (term.coeff * seg.phase * amp);
    }
  }
  return out;
}

std::vector<MixedTerm> coherent_generator(int index, GeneratorOrder order) {
  const MixedWord x = order == GeneratorOrder::creation_first
                          ? MixedWord{OpSym::ad(), GeneratorSym::xi(index)}
                          : MixedWord{GeneratorSym::xi(index), OpSym::ad()};
  return {{CycScalar(1L), {}}, {CycScalar(1L), x}, {CycScalar(-1L), concat(x, x)}};
}

OperatorKet coherent_ket_operator_form(int index, GeneratorOrder order) {
  const auto terms = coherent_generator(index, order);
  return apply_to_vacuum(terms, {index + 1, RuleMode::relational});
}

StateVec to_components(const OperatorKet& ket, const ConventionConfig& conv) {
  StateVec out;
  for (int n = 0; n < kFockDim; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    for (const auto& [w, c] : ket.components[idx].terms()) {
      CycScalar phase(1L);
      if (!w.empty()) phase = conv.ket_swap_phase(conv.ket_grade(n), grade(w));
      out.components[idx].add_term(w, c * phase);
    }
  }
  return out;
}

StateVec coherent_ket(const ConventionConfig& conv, int index) {
  return to_components(coherent_ket_operator_form(index), conv);
}

BraVec coherent_bra(const ConventionConfig& /*conv*/, int index) {
  const GeneratorSym xb = GeneratorSym::xb(index);
  BraVec bra;
  bra.components[0] = GElement(CycScalar(1L));
  bra.components[1] = GElement::word({xb}, CycScalar::q());
  bra.components[2] = GElement::word({xb, xb}, -sqrt_bracket2());
  return bra;
}

OperatorKet annihilate_operator_form(int index) {
  auto terms = coherent_generator(index);
  for (auto& t : terms) t.word.insert(t.word.begin(), OpSym::a());
  return apply_to_vacuum(terms, {index + 1, RuleMode::relational});
}

OperatorKet eigenvalue_operator_form(int index) {
  auto terms = coherent_generator(index);
  for (auto& t : terms) t.word.insert(t.word.begin(), GeneratorSym::xi(index));
  return apply_to_vacuum(terms, {index + 1, RuleMode::relational});
}

StateVec annihilate(const ConventionConfig& conv, int index) {
  return to_components(annihilate_operator_form(index), conv);
}

GElement overlap(const BraVec& bra, const StateVec& ket, const ConventionConfig& conv,
                 const AlgebraSignature& sig) {
  GElement out;
  for (int n = 0; n < kFockDim; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const GElement product = multiply(bra.components[idx], ket.components[idx], sig);
    for (const auto& [w, c] : product.terms())
      out.add_term(w, w.empty() ? c : c * conv.level_factor(n));
  }
  return out;
}

CycScalar resolution_entry(const GElement& ket_coeff, int n, const GElement& bra_coeff, int m,
                           const WeightFunction& w, const ConventionConfig& conv,
                           ResolutionForm form) {
  const AlgebraSignature sig = single_pair();
  const GElement weight = w.element();
  GElement left;
  if (form == ResolutionForm::measure_left) {
    left = multiply(weight, ket_coeff, sig);
  } else {
    // w crosses |n> to join K_n
    GElement moved;
    for (const auto& [word, c] : weight.terms()) {
      CycScalar phase(1L);
      if (!word.empty()) phase = conv.ket_swap_phase(conv.ket_grade(n), grade(word));
      moved.add_term(word, c * phase);
    }
    left = multiply(ket_coeff, moved, sig);
  }
  CycScalar entry;
  for (const auto& [bw, bc] : bra_coeff.terms()) {
    const CycScalar value = double_integral(multiply(left, GElement::word(bw, bc), sig));
    if (value.is_zero()) continue;
    // B_m crosses the projector |n><m|
    CycScalar phase(1L);
    if (!bw.empty()) {
      if (n == m) {
        phase = conv.level_factor(n);
      } else {
        const int projector_grade = ((conv.ket_grade(n) - conv.ket_grade(m)) % 3 + 3) % 3;
        phase = conv.ket_swap_phase(projector_grade, grade(bw));
      }
    }
    entry += value * phase;
  }
  return entry * measure_factor(conv.measure_phase_mode);
}

ExactMatrix identity_resolution(const ConventionConfig& conv, const WeightFunction& w,
                                ResolutionForm form) {
  const StateVec ket = coherent_ket(conv);
  const BraVec bra = coherent_bra(conv);
  ExactMatrix out = exact_zero();
  for (int n = 0; n < kFockDim; ++n)
    for (int m = 0; m < kFockDim; ++m)
      out(n, m) = resolution_entry(ket.components[static_cast<std::size_t>(n)], n,
                                   bra.components[static_cast<std::size_t>(m)], m, w, conv, form);
  return out;
}

WeightFunction solve_weight(const ConventionConfig& conv, ResolutionForm form) {
  // Column j of the system: the resolution produced by the j-th unit weight.
  std::array<ExactMatrix, 3> unit;
  unit[0] = identity_resolution(conv, {CycScalar(1L), CycScalar(), CycScalar()}, form);
  unit[1] = identity_resolution(conv, {CycScalar(), CycScalar(1L), CycScalar()}, form);
  unit[2] = identity_resolution(conv, {CycScalar(), CycScalar(), CycScalar(1L)}, form);
  for (const auto& u : unit)
    for (int r = 0; r < kFockDim; ++r)
      for (int c = 0; c < kFockDim; ++c)
        if (r != c && !u(r, c).is_zero())
          throw SingularSystem("off-diagonal resolution entry depends on the weight");

  std::array<std::array<CycScalar, 4>, 3> aug;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t j = 0; j < 3; ++j)
      aug[r][j] = unit[j](static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    aug[r][3] = CycScalar(1L);
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == 3)
      throw SingularSystem("no weight c0 + c1 xb xi + c2 (xb xi)^2 resolves the identity under '" +
                           conv.name + "'");
    std::swap(aug[pivot], aug[col]);
    const CycScalar inv = aug[col][col].inverse();
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const CycScalar f = aug[r][col];
      for (std::size_t j = 0; j < 4; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  return {aug[0][3], aug[1][3], aug[2][3]};
}

}  // namespace tg
