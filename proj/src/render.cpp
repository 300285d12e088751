#include "tg/render.hpp"

#include <ostream>
#include <utility>
#include <vector>

#include "tg/errors.hpp"

namespace tg {

using nlohmann::json;

namespace {

struct Signed {
  bool negative = false;
  std::string text;  // empty means a bare unit coefficient
};

struct Term {
  Signed coeff;
  std::string body;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string join_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    std::string piece = t.coeff.text;
    if (!t.body.empty()) piece = piece.empty() ? t.body : piece + "*" + t.body;
    if (piece.empty()) piece = "1";
    if (out.empty())
      out = (t.coeff.negative ? "-" : "") + piece;
    else
      out += (t.coeff.negative ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

Signed signed_rational(const Rational& r, bool has_body) {
  Signed s;
  s.negative = sgn(r) < 0;
  const Rational mag = abs(r);
  if (mag != 1 || !has_body) s.text = to_string(mag);
  return s;
}

std::string unit_body(const ScalarMonomial& m) {
  std::vector<std::string> parts;
  if (m.i_power) parts.emplace_back("i");
  if (m.q_power == 1) parts.emplace_back("q");
  if (m.q_power == 2) parts.emplace_back("q^2");
  return join(parts, "*");
}

Signed signed_scalar(const CycScalar& c, bool has_body) {
  if (const auto m = as_monomial(c)) {
    const std::string unit = unit_body(*m);
    Signed s = signed_rational(m->factor, has_body || !unit.empty());
    s.text = join({s.text, unit}, "*");
    return s;
  }
  return {false, "(" + to_string(c) + ")"};
}

std::vector<Term> basis_terms(const CycScalar& x) {
  // zeta = -i q, zeta^2 = 1 + q, zeta^3 = i
  const auto& c = x.coeffs();
  const std::pair<Rational, std::string> parts[] = {
      {c[0] + c[2], ""}, {c[2], "q"}, {c[3], "i"}, {-c[1], "i*q"}};
  std::vector<Term> terms;
  for (const auto& [r, body] : parts)
    if (r != 0) terms.push_back({signed_rational(r, !body.empty()), body});
  return terms;
}

std::string word_body(const GWord& w) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < w.size();) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    std::string p = to_string(w[k]);
    if (run > 1) p += "^" + std::to_string(run);
    parts.push_back(std::move(p));
    k += run;
  }
  return join(parts, "*");
}

template <typename Comps, typename Body>
std::string state_text(const Comps& comps, Body body_for) {
  std::vector<Term> terms;
  for (int n = 0; n < kFockDim; ++n)
    for (const auto& [w, c] : comps[static_cast<std::size_t>(n)].terms())
      terms.push_back({signed_scalar(c, true), body_for(n, word_body(w))});
  return join_terms(terms);
}

json op_key_json(const OpKey& k) {
  return {{"creation", k.creation},
          {"num_power", k.num_power},
          {"q_power", k.q_power},
          {"annihilation", k.annihilation}};
}

json components_json(const std::array<GElement, 3>& comps) {
  json arr = json::array();
  for (const auto& e : comps) arr.push_back(to_json(e));
  return arr;
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const CycScalar& x) {
  if (as_monomial(x)) {
    const Signed s = signed_scalar(x, false);
    return (s.negative ? "-" : "") + s.text;
  }
  return join_terms(basis_terms(x));
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << to_string(x); }

std::string to_string(const GeneratorSym& s) {
  return (s.kind == GenKind::unbarred ? "xi(" : "xb(") + std::to_string(s.index) + ")";
}

std::string to_string(const DifferentialSym& s) {
  return (s.kind == DiffKind::d_unbarred ? "dxi(" : "dxb(") + std::to_string(s.index) + ")";
}

std::string to_string(const OpSym& s) {
  switch (s.tag) {
    case OpTag::a: return "a";
    case OpTag::a_plus: return "ad";
    case OpTag::num: return "Nop";
    case OpTag::q_num_power: return "qN(" + std::to_string(s.s) + ")";
  }
  return "?";
}

std::string to_string(const GWord& w) { return w.empty() ? "1" : word_body(w); }

std::string to_string(const GElement& e) {
  std::vector<Term> terms;
  for (const auto& [w, c] : e.terms()) terms.push_back({signed_scalar(c, !w.empty()), word_body(w)});
  return join_terms(terms);
}

std::string to_string(const OpKey& k) {
  auto power = [](const char* sym, int n) -> std::string {
    if (n == 0) return "";
    return n == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(n);
  };
  return join({power("ad", k.creation), power("Nop", k.num_power),
               k.q_power ? "qN(" + std::to_string(k.q_power) + ")" : "", power("a", k.annihilation)},
              "*");
}

std::string to_string(const OpElement& e) {
  std::vector<Term> terms;
  for (const auto& [k, c] : e.terms()) {
    const std::string body = to_string(k);
    terms.push_back({signed_scalar(c, !body.empty()), body});
  }
  return join_terms(terms);
}

std::string to_string(const MixedElement& e) {
  std::vector<Term> terms;
  for (const auto& [key, c] : e.terms()) {
    const std::string body = join({to_string(key.first), word_body(key.second)}, "*");
    terms.push_back({signed_scalar(c, !body.empty()), body});
  }
  return join_terms(terms);
}

std::string to_string(const StateVec& v) {
  return state_text(v.components, [](int n, const std::string& w) {
    return join({w, "ket(" + std::to_string(n) + ")"}, "*");
  });
}

std::string to_string(const OperatorKet& v) {
  return state_text(v.components, [](int n, const std::string& w) {
    return join({"ket(" + std::to_string(n) + ")", w}, "*");
  });
}

std::string to_string(const BraVec& v) {
  return state_text(v.components, [](int n, const std::string& w) {
    return join({"bra(" + std::to_string(n) + ")", w}, "*");
  });
}

std::string to_string(const WeightFunction& w) { return to_string(w.element()); }

std::string to_string(const ExactMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < kFockDim; ++r) {
    out += r ? ", [" : "[";
    for (int c = 0; c < kFockDim; ++c) out += (c ? ", " : "") + to_string(m(r, c));
    out += "]";
  }
  return out + "]";
}

std::string to_string(const ExactVector& v) {
  std::string out = "(";
  for (int n = 0; n < kFockDim; ++n) out += (n ? ", " : "") + to_string(v(n));
  return out + ")";
}

json to_json(const CycScalar& x) {
  json arr = json::array();
  for (const auto& c : x.coeffs())
    arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
  return arr;
}

json to_json(const GWord& w) {
  json arr = json::array();
  for (const auto& s : w)
    arr.push_back({{"kind", s.kind == GenKind::unbarred ? "xi" : "xb"}, {"index", s.index}});
  return arr;
}

json to_json(const GElement& e) {
  json arr = json::array();
  for (const auto& [w, c] : e.terms())
    arr.push_back({{"coeff", to_json(c)}, {"coeff_text", to_string(c)}, {"word", to_json(w)}});
  return arr;
}

json to_json(const OpElement& e) {
  json arr = json::array();
  for (const auto& [k, c] : e.terms())
    arr.push_back({{"coeff", to_json(c)}, {"coeff_text", to_string(c)}, {"op", op_key_json(k)}});
  return arr;
}

json to_json(const MixedElement& e) {
  json arr = json::array();
  for (const auto& [key, c] : e.terms())
    arr.push_back({{"coeff", to_json(c)},
                   {"coeff_text", to_string(c)},
                   {"op", op_key_json(key.first)},
                   {"word", to_json(key.second)}});
  return arr;
}

json to_json(const StateVec& v) {
  return {{"layout", "coefficient-left"}, {"components", components_json(v.components)},
          {"text", to_string(v)}};
}

json to_json(const OperatorKet& v) {
  return {{"layout", "coefficient-right"}, {"components", components_json(v.components)},
          {"text", to_string(v)}};
}

json to_json(const BraVec& v) {
  return {{"layout", "bra"}, {"components", components_json(v.components)}, {"text", to_string(v)}};
}

json to_json(const WeightFunction& w) {
  return {{"c0", to_json(w.c0)}, {"c1", to_json(w.c1)}, {"c2", to_json(w.c2)}, {"text", to_string(w)}};
}

json to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < kFockDim; ++r) {
    json row = json::array();
    for (int c = 0; c < kFockDim; ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

CycScalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error("scalar JSON must be 4 [num, den] pairs");
  CycScalar::Coeffs c;
  for (std::size_t k = 0; k < 4; ++k) {
    c[k] = Rational(mpz_class(j[k].at(0).get<std::string>()), mpz_class(j[k].at(1).get<std::string>()));
    c[k].canonicalize();
  }
  return CycScalar(c);
}

}  // namespace tg
