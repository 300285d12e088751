#include "tg/audit.hpp"

#include <algorithm>
#include <functional>

#include "tg/bargmann.hpp"
#include "tg/errors.hpp"
#include "tg/render.hpp"

namespace tg {

const char* status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::pass: return "PASS";
    case AuditStatus::fail: return "FAIL";
    case AuditStatus::undefined: return "UNDEFINED";
  }
  return "?";
}

const std::vector<std::string>& audit_identities() {
  static const std::vector<std::string> ids = {
      "ket-component[0]",      "ket-component[1]",     "ket-component[2]",
      "eigenstate-operator",   "eigenstate-component", "overlap[constant]",
      "overlap[linear]",       "overlap[quadratic]",   "resolution-left",
      "weight-left",           "weight-sandwich",      "gram",
      "vacuum-norm",           "vacuum-orthogonality", "displacement-order",
  };
  return ids;
}

StateVec printed_coherent_ket() {
  const GeneratorSym xi = GeneratorSym::xi(0);
  StateVec k;
  k.components[0] = GElement(CycScalar(1L));
  k.components[1] = GElement::word({xi}, CycScalar::q_pow(2));
  k.components[2] = GElement::word({xi, xi}, -sqrt_bracket2());
  return k;
}

GElement printed_overlap() {
  const AlgebraSignature sig = two_pairs();
  const GElement x = normalize(GWord{GeneratorSym::xb(0), GeneratorSym::xi(1)}, sig);
  return CycScalar(1L) + x * CycScalar::q_pow(2) - multiply(x, x, sig) * CycScalar::q();
}

namespace {

GElement degree_part(const GElement& e, std::size_t length) {
  GElement out;
  for (const auto& [w, c] : e.terms())
    if (w.size() == length) out.add_term(w, c);
  return out;
}

OperatorKet difference(const OperatorKet& x, const OperatorKet& y) {
  OperatorKet d;
  for (std::size_t n = 0; n < 3; ++n) d.components[n] = x.components[n] - y.components[n];
  return d;
}

StateVec difference(const StateVec& x, const StateVec& y) {
  StateVec d;
  for (std::size_t n = 0; n < 3; ++n) d.components[n] = x.components[n] - y.components[n];
  return d;
}

bool is_zero(const StateVec& v) {
  return std::all_of(v.components.begin(), v.components.end(), [](const GElement& e) { return e.is_zero(); });
}

std::string weight_text(const WeightFunction& w) {
  return "(" + to_string(w.c0) + ", " + to_string(w.c1) + ", " + to_string(w.c2) + ")";
}

// Runs `body`, mapping missing relations to UNDEFINED and other engine errors
// to FAIL with the message as the engine value.
AuditEntry guarded(const std::string& identity, const ConventionConfig& conv, const std::string& paper,
                   const std::function<std::pair<bool, std::string>()>& body) {
  AuditEntry e{identity, conv.name, AuditStatus::fail, "", paper};
  try {
    auto [ok, value] = body();
    e.status = ok ? AuditStatus::pass : AuditStatus::fail;
    e.engine_value = std::move(value);
  } catch (const UndefinedRelation& err) {
    e.status = AuditStatus::undefined;
    e.engine_value = err.what();
  } catch (const Error& err) {
    e.engine_value = err.what();
  }
  return e;
}

void audit_one(const ConventionConfig& conv, AuditReport& out) {
  const StateVec printed = printed_coherent_ket();
  for (int n = 0; n < kFockDim; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    out.push_back(guarded("ket-component[" + std::to_string(n) + "]", conv,
                          to_string(printed.components[idx]), [&] {
                            const GElement got = coherent_ket(conv).components[idx];
                            return std::pair{got == printed.components[idx], to_string(got)};
                          }));
  }

  out.push_back(guarded("eigenstate-operator", conv, "0", [] {
    const OperatorKet d = difference(annihilate_operator_form(), eigenvalue_operator_form());
    return std::pair{d == OperatorKet{}, to_string(d)};
  }));

  out.push_back(guarded("eigenstate-component", conv, "0", [&] {
    const StateVec ket = coherent_ket(conv);
    StateVec xi_ket;
    for (std::size_t n = 0; n < 3; ++n)
      xi_ket.components[n] = multiply(GElement::word({GeneratorSym::xi(0)}), ket.components[n], single_pair());
    const StateVec d = difference(annihilate(conv), xi_ket);
    return std::pair{is_zero(d), to_string(d)};
  }));

  const GElement printed_ov = printed_overlap();
  const char* parts[] = {"constant", "linear", "quadratic"};
  for (std::size_t k = 0; k < 3; ++k) {
    const GElement want = degree_part(printed_ov, 2 * k);
    out.push_back(guarded(std::string("overlap[") + parts[k] + "]", conv, to_string(want), [&] {
      const GElement got = degree_part(
          overlap(coherent_bra(conv, 0), coherent_ket(conv, 1), conv, two_pairs()), 2 * k);
      return std::pair{got == want, to_string(got)};
    }));
  }

  const ExactMatrix id = exact_identity();
  out.push_back(guarded("resolution-left", conv, to_string(id), [&] {
    const ExactMatrix got = identity_resolution(conv, printed_weight(), ResolutionForm::measure_left);
    return std::pair{got == id, to_string(got)};
  }));

  const WeightFunction pw = printed_weight();
  out.push_back(guarded("weight-left", conv, weight_text(pw), [&] {
    const WeightFunction got = solve_weight(conv, ResolutionForm::measure_left);
    return std::pair{got == pw, weight_text(got)};
  }));
  out.push_back(guarded("weight-sandwich", conv, weight_text(pw), [&] {
    const WeightFunction got = solve_weight(conv, ResolutionForm::sandwiched);
    return std::pair{got == pw, weight_text(got)};
  }));

  out.push_back(guarded("gram", conv, to_string(id), [&] {
    const ExactMatrix got = gram_matrix(conv, bargmann_weight(conv));
    return std::pair{got == id, to_string(got)};
  }));

  out.push_back(guarded("vacuum-norm", conv, "1", [&] {
    const CycScalar got =
        bargmann_inner(to_adjoint_rep(basis_vector(0), conv), to_rep(basis_vector(0), conv), pw, conv);
    return std::pair{got == CycScalar(1L), to_string(got)};
  }));
  out.push_back(guarded("vacuum-orthogonality", conv, "0", [&] {
    const CycScalar got =
        bargmann_inner(to_adjoint_rep(basis_vector(0), conv), to_rep(basis_vector(1), conv), pw, conv);
    return std::pair{got.is_zero(), to_string(got)};
  }));

  const OperatorKet creation_first = coherent_ket_operator_form(0, GeneratorOrder::creation_first);
  out.push_back(guarded("displacement-order", conv, to_string(creation_first), [&] {
    const OperatorKet got = coherent_ket_operator_form(0, GeneratorOrder::grassmann_first);
    return std::pair{got == creation_first, to_string(got)};
  }));
}

}  // namespace

AuditReport audit(const std::vector<ConventionConfig>& conventions) {
  AuditReport report;
  for (const auto& conv : conventions) audit_one(conv, report);
  return report;
}

AuditReport audit() { return audit(shipped_conventions()); }

const AuditEntry* find_entry(const AuditReport& report, const std::string& identity,
                             const std::string& convention) {
  for (const auto& e : report)
    if (e.identity == identity && e.convention == convention) return &e;
  return nullptr;
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : report)
    arr.push_back({{"identity", e.identity},
                   {"convention", e.convention},
                   {"status", status_name(e.status)},
                   {"engine_value", e.engine_value},
                   {"paper_value", e.paper_value}});
  return arr;
}

std::string to_table(const AuditReport& report) {
  std::size_t id_w = 8, conv_w = 10;
  for (const auto& e : report) {
    id_w = std::max(id_w, e.identity.size());
    conv_w = std::max(conv_w, e.convention.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::string out = pad("identity", id_w) + pad("convention", conv_w) + pad("status", 9) + "engine / printed\n";
  for (const auto& e : report) {
    out += pad(e.identity, id_w) + pad(e.convention, conv_w) + pad(status_name(e.status), 9);
    out += e.status == AuditStatus::pass ? e.engine_value : e.engine_value + "  /  " + e.paper_value;
    out += "\n";
  }
  return out;
}

}  // namespace tg
