#include "tg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tg/bargmann.hpp"
#include "tg/errors.hpp"
#include "tg/render.hpp"
#include "tg/susy.hpp"

namespace tg {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"scalars", "grassmann", "oscillator", "states",
                                                 "bargmann", "susy",     "all"};
  return names;
}

namespace {

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void check(const std::string& name, bool ok, std::string detail = "") {
    report_.checks.push_back({suite_, name, ok, std::move(detail)});
  }

  // Engine errors count as failures.
  template <typename F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      check(name, false, e.what());
    }
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

CycScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  CycScalar::Coeffs c;
  for (auto& r : c) {
    r = Rational(num(rng), den(rng));
    r.canonicalize();
  }
  return CycScalar(c);
}

void scalars_suite(VerifyReport& out) {
  Recorder r(out, "scalars");
  const CycScalar q = CycScalar::q(), one(1L);
  r.check("q^3 = 1", q.pow(3) == one);
  r.check("1 + q + q^2 = 0", (one + q + q * q).is_zero());
  r.check("i^2 = -1", CycScalar::i() * CycScalar::i() == CycScalar(-1L));
  r.check("[1] = 1", q_bracket(1) == one);
  r.check("[2] = -1", q_bracket(2) == CycScalar(-1L));
  r.check("[3] = 0", q_bracket(3).is_zero());
  bool periodic = true;
  for (long n = -9; n <= 9; ++n) periodic = periodic && q_bracket(n + 3) == q_bracket(n);
  r.check("[n+3] = [n] for n in [-9, 9]", periodic);
  r.check("sqrt[2]^2 = [2]", sqrt_bracket2() * sqrt_bracket2() == q_bracket(2));

  std::mt19937 rng(20260101);
  double worst = 0;
  bool inverses = true;
  for (int k = 0; k < 200; ++k) {
    const CycScalar x = random_scalar(rng), y = random_scalar(rng);
    worst = std::max(worst, std::abs((x * y).to_complex() - x.to_complex() * y.to_complex()));
    worst = std::max(worst, std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())));
    worst = std::max(worst, std::abs(x.conj().to_complex() - std::conj(x.to_complex())));
    if (!x.is_zero()) inverses = inverses && x * x.inverse() == one;
  }
  r.check("numeric embedding is a homomorphism (1e-12)", worst < 1e-12, "max error " + std::to_string(worst));
  r.check("x * x^-1 = 1 on 200 samples", inverses);
}

std::vector<GWord> all_words(int n_generators, int max_len) {
  std::vector<GeneratorSym> alphabet;
  for (int a = 0; a < n_generators; ++a) {
    alphabet.push_back(GeneratorSym::xi(a));
    alphabet.push_back(GeneratorSym::xb(a));
  }
  std::vector<GWord> out{{}};
  std::vector<GWord> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GWord> next;
    for (const auto& w : layer)
      for (const auto& s : alphabet) {
        GWord v = w;
        v.push_back(s);
        next.push_back(v);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void grassmann_suite(VerifyReport& out) {
  Recorder r(out, "grassmann");
  for (int n = 1; n <= 3; ++n) {
    r.guarded("dimension N=" + std::to_string(n), [&] {
      const auto basis = enumerate_basis({n, RuleMode::constrained});
      const long want = constrained_dimension(n);
      r.check("dimension N=" + std::to_string(n), static_cast<long>(basis.size()) == want,
              std::to_string(basis.size()) + " words, formula " + std::to_string(want));
    });
  }
  const AlgebraSignature one = single_pair();
  const GeneratorSym xi = GeneratorSym::xi(0), xb = GeneratorSym::xb(0);
  r.check("xi^3 = 0", normalize(GWord{xi, xi, xi}, one).is_zero());
  r.check("xb^3 = 0", normalize(GWord{xb, xb, xb}, one).is_zero());

  bool ternary = true;
  for (int n = 1; n <= 3; ++n) {
    const AlgebraSignature sig{n, RuleMode::relational};
    for (const auto& w : all_words(n, 3)) {
      if (w.size() != 3 || w[0].kind != w[1].kind || w[1].kind != w[2].kind) continue;
      const CycScalar unit = w[0].kind == GenKind::unbarred ? CycScalar::q() : CycScalar::q_pow(2);
      GWord rot = w;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      ternary = ternary && normalize(w, sig) == normalize(rot, sig) * unit;
    }
  }
  r.check("ternary rotation phase, three rotations give 1 (N <= 3)", ternary);

  for (const RuleMode mode : {RuleMode::relational, RuleMode::constrained}) {
    const AlgebraSignature sig{2, mode};
    bool idem = true;
    for (const auto& w : all_words(2, 4)) {
      const GElement once = normalize(w, sig);
      idem = idem && normalize(once, sig) == once;
    }
    r.check(std::string("normalize is idempotent (N=2, length <= 4, ") +
                (mode == RuleMode::relational ? "relational" : "constrained") + ")",
            idem);
  }
}

void oscillator_suite(VerifyReport& out) {
  Recorder r(out, "oscillator");
  const FockTriple f = fock_matrices();
  const ExactMatrix q1 = q_num_matrix(1), qm1 = q_num_matrix(-1), q2 = q_num_matrix(2), qm2 = q_num_matrix(-2);
  const CycScalar q = CycScalar::q();
  r.check("a ad - q ad a = q^-N", f.a * f.a_plus - f.a_plus * f.a * q == qm1);
  r.check("N a - a N = -a", f.num * f.a - f.a * f.num == -f.a);
  r.check("N ad - ad N = ad", f.num * f.a_plus - f.a_plus * f.num == f.a_plus);
  r.check("q^N ad = ad q^(N+1)", q1 * f.a_plus == f.a_plus * q1 * q);
  r.check("q^N a = a q^(N-1)", q1 * f.a == f.a * q1 * q.inverse());
  r.check("q^N q^-N = 1", q1 * qm1 == exact_identity() && q2 * qm2 == exact_identity());
  r.check("a^3 = 0 (matrix)", is_zero_matrix(f.a * f.a * f.a));
  r.check("ad^3 = 0 (matrix)", is_zero_matrix(f.a_plus * f.a_plus * f.a_plus));

  const std::vector<OpSym> a3{OpSym::a(), OpSym::a(), OpSym::a()};
  const std::vector<OpSym> ad3{OpSym::ad(), OpSym::ad(), OpSym::ad()};
  r.check("a^3 = 0 (rewriting)", op_normalize(a3).is_zero());
  r.check("ad^3 = 0 (rewriting)", op_normalize(ad3).is_zero());
  const std::vector<OpSym> aad{OpSym::a(), OpSym::ad()}, ada{OpSym::ad(), OpSym::a()};
  r.check("a ad - q ad a = q^-N (rewriting)",
          op_normalize(aad) - op_normalize(ada) * q == OpElement::monomial({0, 0, 2, 0}));

  const std::vector<OpSym> alphabet{OpSym::a(), OpSym::ad(), OpSym::num(), OpSym::qN(1)};
  bool hom = true;
  std::vector<std::vector<OpSym>> layer{{}};
  for (int len = 1; len <= 5; ++len) {
    std::vector<std::vector<OpSym>> next;
    for (const auto& w : layer)
      for (const auto& s : alphabet) {
        auto v = w;
        v.push_back(s);
        hom = hom && rep(op_normalize(v)) == rep_word(v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  r.check("rep(normal form) = product of matrices, all words of length <= 5", hom);
}

void states_suite(VerifyReport& out) {
  Recorder r(out, "states");
  r.check("a f|0> = xi f|0> at operator level", annihilate_operator_form() == eigenvalue_operator_form());

  const WeightFunction units[] = {{CycScalar(1L), CycScalar(), CycScalar()},
                                  {CycScalar(), CycScalar(1L), CycScalar()},
                                  {CycScalar(), CycScalar(), CycScalar(1L)}};
  for (const auto& conv : shipped_conventions()) {
    for (const auto form : {ResolutionForm::measure_left, ResolutionForm::sandwiched}) {
      const std::string tag = conv.name + (form == ResolutionForm::measure_left ? ", left" : ", sandwich");
      r.guarded("off-diagonal resolution entries vanish (" + tag + ")", [&] {
        bool zero = true;
        for (const auto& w : units) {
          const ExactMatrix m = identity_resolution(conv, w, form);
          for (int i = 0; i < kFockDim; ++i)
            for (int j = 0; j < kFockDim; ++j) zero = zero && (i == j || m(i, j).is_zero());
        }
        r.check("off-diagonal resolution entries vanish (" + tag + ")", zero);
      });
      r.guarded("solved weight resolves the identity (" + tag + ")", [&] {
        const WeightFunction w = solve_weight(conv, form);
        r.check("solved weight resolves the identity (" + tag + ")",
                identity_resolution(conv, w, form) == exact_identity(), to_string(w));
      });
    }
    r.guarded("overlap constant term is 1 (" + conv.name + ")", [&] {
      const GElement ov = overlap(coherent_bra(conv), coherent_ket(conv), conv, single_pair());
      r.check("overlap constant term is 1 (" + conv.name + ")", ov.coefficient({}) == CycScalar(1L));
    });
  }

  const ConventionConfig paper = paper_convention();
  r.guarded("printed weight solves the left resolution (paper)", [&] {
    const WeightFunction w = solve_weight(paper, ResolutionForm::measure_left);
    r.check("printed weight solves the left resolution (paper)", w == printed_weight(), to_string(w));
  });
  r.check("printed weight gives the identity (paper, left)",
          identity_resolution(paper, printed_weight(), ResolutionForm::measure_left) == exact_identity());

  out.audit = audit();
  const auto status_is = [&](const char* id, const char* conv, AuditStatus s) {
    const AuditEntry* e = find_entry(out.audit, id, conv);
    return e && e->status == s;
  };
  r.check("audit flags ket-component[2] under uniform-eq5",
          status_is("ket-component[2]", "uniform-eq5", AuditStatus::fail));
  r.check("audit flags overlap[linear] under uniform-eq5",
          status_is("overlap[linear]", "uniform-eq5", AuditStatus::fail));
  r.check("audit passes the printed ket and overlap under paper",
          status_is("ket-component[2]", "paper", AuditStatus::pass) &&
              status_is("overlap[linear]", "paper", AuditStatus::pass));
}

void bargmann_suite(VerifyReport& out) {
  Recorder r(out, "bargmann");
  const ConventionConfig paper = paper_convention();
  std::mt19937 rng(77);
  bool round = true;
  for (int k = 0; k < 50; ++k) {
    ExactVector v;
    for (int n = 0; n < kFockDim; ++n) v(n) = random_scalar(rng);
    round = round && from_rep(to_rep(v, paper), paper) == v;
  }
  for (int n = 0; n < kFockDim; ++n) round = round && from_rep(to_rep(basis_vector(n), paper), paper) == basis_vector(n);
  r.check("from_rep(to_rep(v)) = v (basis and 50 random vectors)", round);

  const auto c = representative_coefficients(paper);
  r.check("representative coefficients (1, q, -sqrt[2])",
          c[0] == CycScalar(1L) && c[1] == CycScalar::q() && c[2] == -sqrt_bracket2());
  r.guarded("gram matrix is the identity (paper, solved weight)", [&] {
    const ExactMatrix g = gram_matrix(paper, bargmann_weight(paper));
    r.check("gram matrix is the identity (paper, solved weight)", g == exact_identity(), to_string(g));
  });
  const auto inner = [&](int n, int m) {
    return bargmann_inner(to_adjoint_rep(basis_vector(n), paper), to_rep(basis_vector(m), paper),
                          printed_weight(), paper);
  };
  r.check("<0|0> = 1", inner(0, 0) == CycScalar(1L));
  r.check("<0|1> = 0", inner(0, 1).is_zero());
}

void susy_suite(VerifyReport& out) {
  Recorder r(out, "susy");
  constexpr int m_max = 16;
  const BosonOps ops = boson_ops(m_max);
  const Eigen::MatrixXcd comm = ops.b * ops.b_dagger - ops.b_dagger * ops.b;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m_max, m_max);
  r.check("[b, b+] = 1 below the cut", (comm.topLeftCorner(m_max, m_max) - id).norm() < 1e-12);
  r.check("[b, b+] at the cut is -M", std::abs(comm(m_max, m_max) + static_cast<double>(m_max)) < 1e-12);
  r.check("[M, b] = -b", (ops.number * ops.b - ops.b * ops.number + ops.b).norm() < 1e-12);
  r.check("[M, b+] = b+", (ops.number * ops.b_dagger - ops.b_dagger * ops.number - ops.b_dagger).norm() < 1e-12);

  const BosonCoherent zero = coherent_boson(0.0, m_max);
  r.check("|z=0> = |0>", std::abs(zero.vec(0) - 1.0) == 0 && zero.vec.tail(m_max).norm() == 0);
  const BosonCoherent unit = coherent_boson(1.0, m_max);
  r.check("|<z|z>| = e^|z|^2 within the tail (z = 1)",
          std::abs(unit.vec.squaredNorm() - std::exp(1.0)) <= unit.tail_mass + 1e-12);

  for (const Complex z : {Complex(0.5, 0.0), Complex(0.5, 0.25)}) {
    const SusyState s = susy_coherent(z, paper_convention(), m_max);
    const SusyChecks c = check_susy(s);
    const std::string tag = " (z = " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                            std::to_string(z.imag()) + "i)";
    r.check("(b x 1) residual within bound" + tag, c.boson_residual <= c.residual_bound,
            "residual " + std::to_string(c.boson_residual) + ", bound " + std::to_string(c.residual_bound));
    r.check("(1 x a) = xi exactly" + tag, c.annihilation_exact);
    r.check("exp(z b+)|0> matches |z>" + tag, c.displacement_error < 1e-12);
    r.check("f(ad xi)|0> matches the parafermion factor" + tag, c.displacement_exact);
  }
}

}  // namespace

VerifyReport verify(std::string_view suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw Error("unknown suite '" + std::string(suite) + "'");
  VerifyReport report;
  const bool all = suite == "all";
  if (all || suite == "scalars") scalars_suite(report);
  if (all || suite == "grassmann") grassmann_suite(report);
  if (all || suite == "oscillator") oscillator_suite(report);
  if (all || suite == "states") states_suite(report);
  if (all || suite == "bargmann") bargmann_suite(report);
  if (all || suite == "susy") susy_suite(report);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"suite", c.suite},
                      {"name", c.name},
                      {"status", c.passed ? "PASS" : "FAIL"},
                      {"detail", c.detail}});
  nlohmann::json j = {{"status", report.passed() ? "PASS" : "FAIL"}, {"checks", checks}};
  if (!report.audit.empty()) j["audit"] = to_json(report.audit);
  return j;
}

std::string to_text(const VerifyReport& report) {
  std::string out;
  for (const auto& c : report.checks) {
    out += std::string(c.passed ? "PASS  " : "FAIL  ") + c.suite + ": " + c.name;
    if (!c.detail.empty() && !c.passed) out += "  [" + c.detail + "]";
    out += "\n";
  }
  if (!report.audit.empty()) out += "\n" + to_table(report.audit);
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const CheckResult& c) { return !c.passed; });
  out += "\n" + std::to_string(report.checks.size() - static_cast<std::size_t>(failed)) + "/" +
         std::to_string(report.checks.size()) + " checks passed\n";
  return out;
}

}  // namespace tg
