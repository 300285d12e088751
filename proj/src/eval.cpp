#include "tg/eval.hpp"

#include <algorithm>
#include <map>

#include "tg/errors.hpp"
#include "tg/render.hpp"

namespace tg {

namespace {

struct KetAtom {
  int n;
  friend constexpr auto operator<=>(const KetAtom&, const KetAtom&) = default;
};

struct BraAtom {
  int n;
  friend constexpr auto operator<=>(const BraAtom&, const BraAtom&) = default;
};

using Atom = std::variant<GeneratorSym, OpSym, DifferentialSym, KetAtom, BraAtom>;
using AtomWord = std::vector<Atom>;
// Unreduced polynomial over atoms.
using Raw = std::map<AtomWord, CycScalar>;

constexpr int kMaxExponent = 4096;

void add_into(Raw& r, const AtomWord& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = r.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) r.erase(it);
  }
}

Raw scalar_raw(const CycScalar& c) {
  Raw r;
  add_into(r, {}, c);
  return r;
}

Raw atom_raw(Atom a) {
  Raw r;
  r[{std::move(a)}] = CycScalar(1L);
  return r;
}

Raw sum(const Raw& x, const Raw& y, const CycScalar& sign) {
  Raw out = x;
  for (const auto& [w, c] : y) add_into(out, w, c * sign);
  return out;
}

Raw product(const Raw& x, const Raw& y) {
  Raw out;
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) {
      AtomWord w = wx;
      w.insert(w.end(), wy.begin(), wy.end());
      add_into(out, w, cx * cy);
    }
  return out;
}

std::optional<CycScalar> as_scalar(const Raw& r) {
  if (r.empty()) return CycScalar();
  if (r.size() == 1 && r.begin()->first.empty()) return r.begin()->second;
  return std::nullopt;
}

bool has_only(std::span<const Atom> w, auto pred) { return std::all_of(w.begin(), w.end(), pred); }

bool is_plain(const Atom& a) {
  return std::holds_alternative<GeneratorSym>(a) || std::holds_alternative<OpSym>(a);
}

MixedWord to_mixed_word(std::span<const Atom> w) {
  MixedWord out;
  for (const auto& a : w) {
    if (const auto* g = std::get_if<GeneratorSym>(&a)) out.emplace_back(*g);
    else out.emplace_back(std::get<OpSym>(a));
  }
  return out;
}

GWord to_gword(std::span<const Atom> w) {
  GWord out;
  for (const auto& a : w) {
    const auto* g = std::get_if<GeneratorSym>(&a);
    if (!g) throw TypeMismatch("expected only Grassmann generators here");
    out.push_back(*g);
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(const EvalContext& ctx, AlgebraSignature sig) : ctx_(ctx), sig_(sig) {}

  Raw raw(const Expr& e) {
    switch (e.kind) {
      case ExprKind::number: return scalar_raw(CycScalar(e.value));
      case ExprKind::q_unit: return scalar_raw(CycScalar::q());
      case ExprKind::i_unit: return scalar_raw(CycScalar::i());
      case ExprKind::generator:
        return atom_raw(e.name == "xi" ? GeneratorSym::xi(e.index) : GeneratorSym::xb(e.index));
      case ExprKind::differential:
        return atom_raw(e.name == "dxi" ? DifferentialSym::dxi(e.index) : DifferentialSym::dxb(e.index));
      case ExprKind::op_symbol:
        if (e.name == "a") return atom_raw(OpSym::a());
        if (e.name == "ad") return atom_raw(OpSym::ad());
        if (e.name == "Nop") return atom_raw(OpSym::num());
        return atom_raw(OpSym::qN(e.index));
      case ExprKind::ket: return atom_raw(KetAtom{e.index});
      case ExprKind::bra: return atom_raw(BraAtom{e.index});
      case ExprKind::add: return sum(raw(*e.children[0]), raw(*e.children[1]), CycScalar(1L));
      case ExprKind::sub: return sum(raw(*e.children[0]), raw(*e.children[1]), CycScalar(-1L));
      case ExprKind::neg: return sum(Raw{}, raw(*e.children[0]), CycScalar(-1L));
      case ExprKind::product: return product(raw(*e.children[0]), raw(*e.children[1]));
      case ExprKind::power: return power(raw(*e.children[0]), e.index);
      case ExprKind::call: return call(e);
    }
    throw TypeMismatch("unknown expression node");
  }

  EvalResult classify(const Raw& r) {
    MixedElement mixed;
    StateVec state;
    BraVec bra;
    bool used_mixed = false, used_state = false, used_bra = false;
    for (const auto& [w, c] : r) {
      const auto kets = std::count_if(w.begin(), w.end(), [](const Atom& a) { return std::holds_alternative<KetAtom>(a); });
      const auto bras = std::count_if(w.begin(), w.end(), [](const Atom& a) { return std::holds_alternative<BraAtom>(a); });
      if (kets > 1 || bras > 1) throw TypeMismatch("a term may hold at most one ket and one bra");
      if (bras == 1 && !std::holds_alternative<BraAtom>(w.front()))
        throw TypeMismatch("a bra must open its term");
      if (kets == 1 && bras == 1) {
        add_grassmann(mixed, bra_ket(w) * c);
        used_mixed = true;
      } else if (kets == 1) {
        const StateVec s = ket_term(w);
        for (std::size_t n = 0; n < 3; ++n) state.components[n] += s.components[n] * c;
        used_state = true;
      } else if (bras == 1) {
        const BraVec b = bra_term(w);
        for (std::size_t n = 0; n < 3; ++n) bra.components[n] += b.components[n] * c;
        used_bra = true;
      } else {
        mixed += plain_term(w) * c;
        used_mixed = true;
      }
    }
    if (used_mixed + used_state + used_bra > 1)
      throw TypeMismatch("cannot add states, bras and algebra elements");
    if (used_state) return state;
    if (used_bra) return bra;
    if (mixed.is_scalar()) {
      const auto& t = mixed.terms();
      return t.empty() ? CycScalar() : t.begin()->second;
    }
    if (mixed.is_pure_grassmann()) return mixed.grassmann_part();
    if (mixed.is_pure_operator()) return mixed.operator_part();
    return mixed;
  }

 private:
  static void add_grassmann(MixedElement& m, const GElement& g) {
    for (const auto& [w, c] : g.terms()) m.add_term({OpKey{}, w}, c);
  }

  GElement grassmann(const Raw& r, const char* what) {
    const EvalResult v = classify(r);
    if (const auto* s = std::get_if<CycScalar>(&v)) return GElement(*s);
    if (const auto* g = std::get_if<GElement>(&v)) return *g;
    throw TypeMismatch(std::string(what) + " needs a Grassmann-valued argument");
  }

  CycScalar scalar(const Raw& r, const char* what) {
    const EvalResult v = classify(r);
    if (const auto* s = std::get_if<CycScalar>(&v)) return *s;
    throw TypeMismatch(std::string(what) + " needs a scalar argument");
  }

  static Raw from_grassmann(const GElement& g) {
    Raw out;
    for (const auto& [w, c] : g.terms()) {
      AtomWord aw(w.begin(), w.end());
      add_into(out, aw, c);
    }
    return out;
  }

  // Re-expresses plain (generator and operator) polynomials in normal form so
  // that repeated products stay small.
  Raw reduce(const Raw& r) {
    for (const auto& [w, c] : r)
      if (!has_only(w, is_plain)) return r;
    MixedElement m;
    for (const auto& [w, c] : r) m += plain_term(w) * c;
    Raw out;
    for (const auto& [key, c] : m.terms()) {
      AtomWord aw;
      for (const OpSym s : spell(key.first)) aw.emplace_back(s);
      aw.insert(aw.end(), key.second.begin(), key.second.end());
      add_into(out, aw, c);
    }
    return out;
  }

  Raw power(const Raw& base, int exponent) {
    if (exponent < 0) {
      const auto s = as_scalar(base);
      if (!s) throw TypeMismatch("negative powers are defined for scalars only");
      return scalar_raw(s->pow(exponent));
    }
    if (exponent > kMaxExponent) throw Error("exponent larger than " + std::to_string(kMaxExponent));
    Raw out = scalar_raw(CycScalar(1L));
    for (int k = 0; k < exponent; ++k) out = reduce(product(out, base));
    return out;
  }

  Raw call(const Expr& e) {
    if (e.name == "integrate") {
      const Raw var = raw(*e.children[1]);
      if (var.size() != 1 || var.begin()->first.size() != 1 || var.begin()->second != CycScalar(1L) ||
          !std::holds_alternative<GeneratorSym>(var.begin()->first.front()))
        throw TypeMismatch("integrate needs a single generator as its variable");
      const GeneratorSym v = std::get<GeneratorSym>(var.begin()->first.front());
      return from_grassmann(integrate(grassmann(raw(*e.children[0]), "integrate"), v));
    }
    if (e.name == "dint") {
      const GElement g = grassmann(raw(*e.children[0]), "dint");
      return scalar_raw(double_integral(g) * measure_factor(ctx_.convention.measure_phase_mode));
    }
    if (e.name == "conj") return scalar_raw(scalar(raw(*e.children[0]), "conj").conj());
    if (e.name == "bracket") {
      const auto r = scalar(raw(*e.children[0]), "bracket").as_rational();
      if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p())
        throw TypeMismatch("bracket needs an integer");
      return scalar_raw(q_bracket(r->get_num().get_si()));
    }
    throw TypeMismatch("unknown function '" + e.name + "'");
  }

  MixedElement plain_term(const AtomWord& w) {
    // trailing differentials integrate the Grassmann prefix
    std::size_t split = w.size();
    while (split > 0 && std::holds_alternative<DifferentialSym>(w[split - 1])) --split;
    const std::span<const Atom> body(w.data(), split);
    for (const auto& a : body)
      if (std::holds_alternative<DifferentialSym>(a))
        throw TypeMismatch("differentials must trail the integrand");
    if (split == w.size()) return mixed_normalize(to_mixed_word(body), sig_);
    GElement g = normalize(to_gword(body), sig_);
    for (std::size_t k = split; k < w.size(); ++k) g = integrate(g, std::get<DifferentialSym>(w[k]).variable());
    MixedElement m;
    add_grassmann(m, g);
    return m;
  }

  // P ket(n) G with P plain and G Grassmann.
  StateVec ket_term(const AtomWord& w) {
    const auto at = std::find_if(w.begin(), w.end(), [](const Atom& a) { return std::holds_alternative<KetAtom>(a); });
    const int n = std::get<KetAtom>(*at).n;
    const std::span<const Atom> prefix(w.data(), static_cast<std::size_t>(at - w.begin()));
    const std::span<const Atom> suffix(&*at + 1, static_cast<std::size_t>(w.end() - at - 1));
    for (const auto& a : prefix)
      if (!is_plain(a)) throw TypeMismatch("only operators and generators may act on a ket");
    const GWord tail = to_gword(suffix);
    const ConventionConfig& conv = ctx_.convention;

    if (has_only(prefix, [](const Atom& a) { return std::holds_alternative<GeneratorSym>(a); })) {
      // already in component layout except for the trailing factor
      CycScalar phase(1L);
      if (!tail.empty()) phase = conv.ket_swap_phase(conv.ket_grade(n), grade(tail));
      GWord all = to_gword(prefix);
      all.insert(all.end(), tail.begin(), tail.end());
      StateVec s;
      s.components[static_cast<std::size_t>(n)] = normalize(all, sig_) * phase;
      return s;
    }

    // Operator layout: generators move right onto the ket, cross it, and the
    // operators then act on |n>.
    const Segregated seg = push_grassmann_right(to_mixed_word(prefix));
    CycScalar phase = seg.phase;
    if (!seg.gens.empty()) phase *= conv.ket_swap_phase(conv.ket_grade(n), grade(seg.gens)).inverse();
    GWord gens = seg.gens;
    gens.insert(gens.end(), tail.begin(), tail.end());
    const GElement g = normalize(gens, sig_);
    const ExactMatrix m = rep(op_normalize(seg.ops));
    OperatorKet ok;
    for (int k = 0; k < kFockDim; ++k)
      if (!m(k, n).is_zero()) ok.components[static_cast<std::size_t>(k)] += g * (phase * m(k, n));
    return to_components(ok, conv);
  }

  // bra(n) R with R plain.
  BraVec bra_term(const AtomWord& w) {
    const int n = std::get<BraAtom>(w.front()).n;
    const std::span<const Atom> rest(w.data() + 1, w.size() - 1);
    for (const auto& a : rest)
      if (!is_plain(a)) throw TypeMismatch("only operators and generators may follow a bra");
    const Segregated seg = push_grassmann_right(to_mixed_word(rest));
    const ExactMatrix m = rep(op_normalize(seg.ops));
    const GElement g = normalize(seg.gens, sig_);
    BraVec b;
    for (int k = 0; k < kFockDim; ++k)
      if (!m(n, k).is_zero()) b.components[static_cast<std::size_t>(k)] += g * (seg.phase * m(n, k));
    return b;
  }

  // bra(n) B R ket(m) G: operators act on the ket, B meets its coefficient.
  GElement bra_ket(const AtomWord& w) {
    const int n = std::get<BraAtom>(w.front()).n;
    std::size_t k = 1;
    while (k < w.size() && std::holds_alternative<GeneratorSym>(w[k])) ++k;
    const GWord b = to_gword(std::span<const Atom>(w.data() + 1, k - 1));
    const StateVec s = ket_term(AtomWord(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
    const GElement product = multiply(normalize(b, sig_), s.components[static_cast<std::size_t>(n)], sig_);
    GElement out;
    for (const auto& [word, c] : product.terms())
      out.add_term(word, word.empty() ? c : c * ctx_.convention.level_factor(n));
    return out;
  }

  const EvalContext& ctx_;
  AlgebraSignature sig_;
};

int max_index(const Expr& e) {
  int m = -1;
  if (e.kind == ExprKind::generator || e.kind == ExprKind::differential) m = e.index;
  for (const auto& c : e.children) m = std::max(m, max_index(*c));
  return m;
}

}  // namespace

EvalResult evaluate(const Expr& e, const EvalContext& ctx) {
  AlgebraSignature sig{ctx.n_generators, ctx.mode};
  if (sig.n_generators <= 0) sig.n_generators = std::max(1, max_index(e) + 1);
  Evaluator ev(ctx, sig);
  return ev.classify(ev.raw(e));
}

EvalResult evaluate(std::string_view text, const EvalContext& ctx) { return evaluate(*parse(text), ctx); }

GElement evaluate_grassmann(std::string_view text, const EvalContext& ctx) {
  const EvalResult r = evaluate(text, ctx);
  if (const auto* s = std::get_if<CycScalar>(&r)) return GElement(*s);
  if (const auto* g = std::get_if<GElement>(&r)) return *g;
  throw TypeMismatch("expected a Grassmann element, got " + std::string(result_kind(r)));
}

std::string to_string(const EvalResult& r) {
  return std::visit([](const auto& v) { return to_string(v); }, r);
}

nlohmann::json to_json(const EvalResult& r) {
  nlohmann::json j;
  j["kind"] = result_kind(r);
  j["text"] = to_string(r);
  j["value"] = std::visit([](const auto& v) { return to_json(v); }, r);
  return j;
}

const char* result_kind(const EvalResult& r) {
  static const char* names[] = {"scalar", "grassmann", "operator", "mixed", "state", "bra"};
  return names[r.index()];
}

}  // namespace tg
