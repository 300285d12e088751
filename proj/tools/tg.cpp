// tg: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage, parse or evaluation error.

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tg/audit.hpp"
#include "tg/bargmann.hpp"
#include "tg/errors.hpp"
#include "tg/eval.hpp"
#include "tg/render.hpp"
#include "tg/susy.hpp"
#include "tg/verify.hpp"

namespace {

using nlohmann::json;

struct Globals {
  std::string mode = "relational";
  std::string convention = "paper";
  int n_generators = 0;
  bool json_out = false;
};

tg::EvalContext make_context(const Globals& g) {
  tg::EvalContext ctx;
  if (g.mode == "constrained") ctx.mode = tg::RuleMode::constrained;
  else if (g.mode == "relational") ctx.mode = tg::RuleMode::relational;
  else throw tg::Error("--mode must be constrained or relational");
  ctx.convention = tg::convention_by_name(g.convention);
  ctx.n_generators = g.n_generators;
  return ctx;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out) std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

void emit_result(const Globals& g, const tg::EvalResult& r) { emit(g, tg::to_json(r), tg::to_string(r)); }

std::vector<std::string> split_tuple(std::string text) {
  const auto open = text.find_first_not_of(" \t");
  const auto close = text.find_last_not_of(" \t");
  if (open == std::string::npos || text[open] != '(' || text[close] != ')')
    throw tg::ParseError("state must look like (c0, c1, c2)", 1, 1);
  text = text.substr(open + 1, close - open - 1);
  std::vector<std::string> parts(1);
  int depth = 0;
  for (const char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) parts.emplace_back();
    else parts.back() += c;
  }
  if (parts.size() != 3) throw tg::ParseError("state needs exactly three entries", 1, 1);
  return parts;
}

tg::ExactVector parse_state(const std::string& text, const tg::EvalContext& ctx) {
  const auto parts = split_tuple(text);
  tg::ExactVector v;
  for (int n = 0; n < 3; ++n) {
    const tg::EvalResult r = tg::evaluate(parts[static_cast<std::size_t>(n)], ctx);
    const auto* s = std::get_if<tg::CycScalar>(&r);
    if (!s) throw tg::TypeMismatch("state entries must be scalars");
    v(n) = *s;
  }
  return v;
}

std::string complex_text(tg::Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

int run_repl(Globals g) {
  const bool interactive = isatty(STDIN_FILENO);
  std::string line;
  while (true) {
    if (interactive) std::cout << "tg> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == ':') {
      std::istringstream in(line.substr(1));
      std::string cmd, arg;
      in >> cmd >> arg;
      if (cmd == "quit" || cmd == "q") break;
      if (cmd == "mode") g.mode = arg;
      else if (cmd == "convention") g.convention = arg;
      else if (cmd == "n") g.n_generators = std::atoi(arg.c_str());
      else if (cmd == "json") g.json_out = arg != "off";
      else
        std::cout << ":mode constrained|relational  :convention NAME  :n N  :json on|off  :quit\n";
      continue;
    }
    try {
      emit_result(g, tg::evaluate(line, make_context(g)));
    } catch (const tg::Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus for Z3-graded Grassmann variables and the k=3 parafermion"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("TG_DEFAULT_CONVENTION")) g.convention = env;
  app.add_option("--mode", g.mode, "constrained|relational")
      ->check(CLI::IsMember({"constrained", "relational"}));
  app.add_option("--convention", g.convention, "paper|uniform-eq5, optionally /transported");
  app.add_option("--n-generators", g.n_generators, "generator pairs (default: from the expression)")
      ->check(CLI::Range(0, tg::kMaxEnumerationGenerators));
  app.add_flag("--json", g.json_out, "JSON output");

  std::string expr_text;
  auto* normalize_cmd = app.add_subcommand("normalize", "evaluate an expression to normal form");
  normalize_cmd->add_option("expr,--expr", expr_text, "expression")->required();

  std::string var_text;
  auto* integrate_cmd = app.add_subcommand("integrate", "integrate over one variable");
  integrate_cmd->add_option("--var", var_text, "xi(a) or xb(a)")->required();
  integrate_cmd->add_option("--expr", expr_text, "integrand")->required();

  auto* coherent_cmd = app.add_subcommand("coherent", "coherent ket and bra");
  auto* overlap_cmd = app.add_subcommand("overlap", "<xb(0)|xi(1)> in two generator pairs");

  std::string form = "left";
  auto* weight_cmd = app.add_subcommand("weight-solve", "solve for the resolution weight");
  weight_cmd->add_option("--form", form, "left|sandwich")->check(CLI::IsMember({"left", "sandwich"}));

  auto* bargmann_cmd = app.add_subcommand("bargmann", "Grassmann representatives");
  bargmann_cmd->require_subcommand(1);
  std::string state_text;
  auto* rep_cmd = bargmann_cmd->add_subcommand("rep", "representative of a Fock vector");
  rep_cmd->add_option("--state", state_text, "(c0, c1, c2)")->required();
  auto* gram_cmd = bargmann_cmd->add_subcommand("gram", "Gram matrix of the basis");

  auto* susy_cmd = app.add_subcommand("susy", "boson x parafermion coherent states");
  susy_cmd->require_subcommand(1);
  std::string z_text = "0.5";
  int trunc = 16;
  auto* susy_coherent_cmd = susy_cmd->add_subcommand("coherent", "|z> (x) |xi>");
  susy_coherent_cmd->add_option("--z", z_text, "complex parameter, e.g. 0.5+0.25i");
  susy_coherent_cmd->add_option("--trunc", trunc, "boson truncation")->check(CLI::Range(1, 170));

  auto* audit_cmd = app.add_subcommand("audit", "check printed identities under every convention");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run self-checks");
  verify_cmd->add_option("--suite", suite, "scalars|grassmann|oscillator|states|bargmann|susy|all")
      ->check(CLI::IsMember(tg::suite_names()));

  auto* repl_cmd = app.add_subcommand("repl", "read-eval-print loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*repl_cmd) return run_repl(g);
    const tg::EvalContext ctx = make_context(g);
    const tg::ConventionConfig& conv = ctx.convention;

    if (*normalize_cmd) {
      emit_result(g, tg::evaluate(expr_text, ctx));
    } else if (*integrate_cmd) {
      auto call = std::make_shared<tg::Expr>();
      call->kind = tg::ExprKind::call;
      call->name = "integrate";
      call->children = {tg::parse(expr_text), tg::parse(var_text)};
      emit_result(g, tg::evaluate(*call, ctx));
    } else if (*coherent_cmd) {
      const tg::StateVec ket = tg::coherent_ket(conv);
      const tg::OperatorKet op = tg::coherent_ket_operator_form();
      const tg::BraVec bra = tg::coherent_bra(conv);
      emit(g,
           {{"convention", conv.name}, {"ket", tg::to_json(ket)}, {"operator_form", tg::to_json(op)},
            {"bra", tg::to_json(bra)}},
           "ket: " + tg::to_string(ket) + "\noperator form: " + tg::to_string(op) + "\nbra: " + tg::to_string(bra));
    } else if (*overlap_cmd) {
      const tg::GElement ov = tg::overlap(tg::coherent_bra(conv, 0), tg::coherent_ket(conv, 1), conv, tg::two_pairs());
      emit(g, {{"convention", conv.name}, {"overlap", tg::to_json(ov)}, {"text", tg::to_string(ov)}},
           tg::to_string(ov));
    } else if (*weight_cmd) {
      const auto f = form == "left" ? tg::ResolutionForm::measure_left : tg::ResolutionForm::sandwiched;
      const tg::WeightFunction w = tg::solve_weight(conv, f);
      const tg::ExactMatrix check = tg::identity_resolution(conv, w, f);
      emit(g, {{"convention", conv.name}, {"form", form}, {"weight", tg::to_json(w)}, {"resolution", tg::to_json(check)}},
           "w = " + tg::to_string(w) + "\nresolution: " + tg::to_string(check));
    } else if (*rep_cmd) {
      const tg::ExactVector psi = parse_state(state_text, ctx);
      const tg::BargmannRep r = tg::to_rep(psi, conv);
      const tg::AdjointRep a = tg::to_adjoint_rep(psi, conv);
      emit(g,
           {{"convention", conv.name}, {"rep", tg::to_json(r.element())}, {"adjoint", tg::to_json(a.element())},
            {"text", tg::to_string(r.element())}},
           "rep: " + tg::to_string(r.element()) + "\nadjoint: " + tg::to_string(a.element()));
    } else if (*gram_cmd) {
      const tg::WeightFunction w = tg::bargmann_weight(conv);
      const tg::ExactMatrix m = tg::gram_matrix(conv, w);
      emit(g, {{"convention", conv.name}, {"weight", tg::to_json(w)}, {"gram", tg::to_json(m)}},
           "w = " + tg::to_string(w) + "\ngram: " + tg::to_string(m));
    } else if (*susy_coherent_cmd) {
      const tg::Complex z = tg::parse_complex(z_text);
      const tg::SusyState s = tg::susy_coherent(z, conv, trunc);
      const tg::SusyChecks c = tg::check_susy(s);
      json boson = json::array();
      for (Eigen::Index m = 0; m < s.boson.vec.size(); ++m) boson.push_back({s.boson.vec(m).real(), s.boson.vec(m).imag()});
      const bool ok = c.boson_residual <= c.residual_bound && c.annihilation_exact;
      std::ostringstream text;
      text << "z = " << complex_text(z) << ", truncation " << trunc << "\n"
           << "parafermion factor: " << tg::to_string(s.para) << "\n"
           << "tail mass: " << s.boson.tail_mass << "\n"
           << "|(b x 1)psi - z psi| = " << c.boson_residual << " <= bound " << c.residual_bound << "\n"
           << "(1 x a)psi = xi psi exactly: " << (c.annihilation_exact ? "yes" : "no") << "\n"
           << "f(xi ad) agrees with f(ad xi): " << (c.grassmann_first_agrees ? "yes" : "no");
      emit(g,
           {{"z", {z.real(), z.imag()}},
            {"truncation", trunc},
            {"convention", conv.name},
            {"boson", boson},
            {"parafermion", tg::to_json(s.para)},
            {"tail_mass", s.boson.tail_mass},
            {"boson_residual", c.boson_residual},
            {"residual_bound", c.residual_bound},
            {"annihilation_exact", c.annihilation_exact},
            {"displacement_error", c.displacement_error},
            {"grassmann_first_agrees", c.grassmann_first_agrees}},
           text.str());
      return ok ? 0 : 1;
    } else if (*audit_cmd) {
      const tg::AuditReport report = tg::audit();
      emit(g, tg::to_json(report), tg::to_table(report));
    } else if (*verify_cmd) {
      const tg::VerifyReport report = tg::verify(suite);
      emit(g, tg::to_json(report), tg::to_text(report));
      return report.passed() ? 0 : 1;
    }
  } catch (const tg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
