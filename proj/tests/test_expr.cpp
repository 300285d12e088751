#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tg/errors.hpp"
#include "tg/eval.hpp"
#include "tg/expr.hpp"
#include "tg/render.hpp"

using tg::CycScalar;
using tg::GElement;
using tg::GeneratorSym;

namespace {

std::string random_expr(std::mt19937& rng, int depth) {
  static const std::vector<std::string> atoms = {"q",      "i",      "3",      "2/5",    "xi(0)",   "xb(1)", "dxi(0)",
                                                 "dxb(2)", "a",      "ad",     "Nop",    "qN(-2)",  "ket(1)", "bra(2)",
                                                 "0",      "qN(1)",  "xi(3)",  "7/3"};
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 8 : 0);
  switch (pick(rng)) {
    case 0: return atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)];
    case 1: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 2: return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 3: return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
    case 4: return "-" + random_expr(rng, depth - 1);
    case 5: return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(std::uniform_int_distribution<int>(-3, 4)(rng));
    case 6: return "(" + random_expr(rng, depth - 1) + ")";
    case 7: return "conj(" + random_expr(rng, depth - 1) + ")";
    default: return "integrate(" + random_expr(rng, depth - 1) + ", xi(0))";
  }
}

template <class T>
const T& as(const tg::EvalResult& r) {
  REQUIRE(std::holds_alternative<T>(r));
  return std::get<T>(r);
}

bool is_zero(const tg::EvalResult& r) {
  return std::visit([](const auto& x) {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, tg::StateVec> || std::is_same_v<T, tg::BraVec>) {
      for (const auto& c : x.components)
        if (!c.is_zero()) return false;
      return true;
    } else {
      return x.is_zero();
    }
  }, r);
}

const tg::EvalContext kPaper{};

tg::EvalContext uniform() {
  tg::EvalContext ctx;
  ctx.convention = tg::uniform_eq5_convention();
  return ctx;
}

}  // namespace

TEST_SUITE("expr") {
  TEST_CASE("parse shapes") {
    const auto e = tg::parse("xi(0)^2*xb(0) - q");
    CHECK(e->kind == tg::ExprKind::sub);
    CHECK(e->children[0]->kind == tg::ExprKind::product);
    CHECK(e->children[0]->children[0]->kind == tg::ExprKind::power);
    CHECK(e->children[0]->children[0]->index == 2);
    CHECK(tg::parse("2/6")->value == tg::Rational(1, 3));
    CHECK(tg::parse("qN(-1)")->index == -1);
    CHECK(tg::parse("integrate(xi(0), xi(0))")->kind == tg::ExprKind::call);
    // unary minus binds looser than ^
    CHECK(tg::parse("-q^2")->kind == tg::ExprKind::neg);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      tg::parse("xi(0)**");
      FAIL("no error");
    } catch (const tg::ParseError& e) {
      CHECK(e.line == 1);
      CHECK(e.column == 7);
    }
    try {
      tg::parse("q +\n  foo(1)");
      FAIL("no error");
    } catch (const tg::ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.column == 3);
      CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
    CHECK_THROWS_AS(tg::parse("ket(3)"), tg::ParseError);
    CHECK_THROWS_AS(tg::parse("xi(0"), tg::ParseError);
    CHECK_THROWS_AS(tg::parse("q^x"), tg::ParseError);
    CHECK_THROWS_AS(tg::parse(""), tg::ParseError);
  }

  TEST_CASE("print and parse round trip") {
    const std::vector<std::string> fixed = {"-(q - 1)^2",       "xi(0)*(xb(0) + q)", "a - (ad - Nop)",  "-(-q)",
                                            "(q^2)^-1",         "bra(0)*xb(0)*ket(0)", "1/2*i - -3",     "conj(dint(xi(0)))",
                                            "bracket(2) + q",   "(xi(0)*xb(0))^2",  "q - (i + 1)"};
    std::vector<std::string> all = fixed;
    std::mt19937 rng(7);
    while (all.size() < fixed.size() + 100) all.push_back(random_expr(rng, 4));
    for (const auto& text : all) {
      CAPTURE(text);
      const auto e = tg::parse(text);
      const std::string printed = tg::print(*e);
      const auto back = tg::parse(printed);
      CHECK(tg::same_tree(*e, *back));
      CHECK(tg::print(*back) == printed);
    }
  }

  TEST_CASE("scalar arithmetic") {
    CHECK(as<CycScalar>(tg::evaluate("q^3", kPaper)) == CycScalar(1L));
    CHECK(as<CycScalar>(tg::evaluate("i^2", kPaper)) == CycScalar(-1L));
    CHECK(as<CycScalar>(tg::evaluate("1 + q + q^2", kPaper)).is_zero());
    CHECK(as<CycScalar>(tg::evaluate("bracket(2)", kPaper)) == CycScalar(-1L));
    CHECK(as<CycScalar>(tg::evaluate("conj(i)", kPaper)) == -CycScalar::i());
    CHECK(as<CycScalar>(tg::evaluate("(1/2)^-2", kPaper)) == CycScalar(4L));
    CHECK_THROWS_AS(tg::evaluate("(q - q)^-1", kPaper), tg::DivisionByZero);
    CHECK_THROWS_AS(tg::evaluate("xi(0)^-1", kPaper), tg::TypeMismatch);
  }

  TEST_CASE("operator relations evaluate to zero") {
    CHECK(is_zero(tg::evaluate("a*ad - q*ad*a - qN(-1)", kPaper)));
    CHECK(is_zero(tg::evaluate("a*ad - qN(1)*ad*a - qN(-1)*ad*a - qN(-1)", kPaper)) == false);
    CHECK(is_zero(tg::evaluate("a^3", kPaper)));
    CHECK(is_zero(tg::evaluate("ad^3", kPaper)));
    CHECK(is_zero(tg::evaluate("qN(3) - 1", kPaper)));
  }

  TEST_CASE("grassmann evaluation") {
    CHECK(is_zero(tg::evaluate("xi(0)^3", kPaper)));
    CHECK(tg::evaluate_grassmann("xb(0)*xi(0)", kPaper) ==
          GElement::word({GeneratorSym::xi(0), GeneratorSym::xb(0)}, CycScalar::q_pow(2)));
    CHECK(tg::evaluate_grassmann("integrate(xi(0)^2, xi(0))", kPaper) == GElement(CycScalar(1L)));
    CHECK(tg::evaluate_grassmann("xi(0)^2*dxi(0)", kPaper) == GElement(CycScalar(1L)));
    CHECK(tg::evaluate_grassmann("integrate(xi(0), xi(0))", kPaper).is_zero());
    CHECK(tg::evaluate_grassmann("dint(xi(0)^2*xb(0)^2)", kPaper) == GElement(CycScalar(1L)));
    CHECK_THROWS_AS(tg::evaluate_grassmann("a", kPaper), tg::TypeMismatch);
    CHECK_THROWS_AS(tg::evaluate("dxi(0)*xi(0)", kPaper), tg::TypeMismatch);
  }

  TEST_CASE("type and relation errors") {
    CHECK_THROWS_AS(tg::evaluate("ket(0)*ket(1)", kPaper), tg::TypeMismatch);
    CHECK_THROWS_AS(tg::evaluate("ket(0) + bra(0)", kPaper), tg::TypeMismatch);
    CHECK_THROWS_AS(tg::evaluate("xi(0)*a", kPaper), tg::UndefinedRelation);
    CHECK_THROWS_AS(tg::evaluate("xb(0)*ad", kPaper), tg::UndefinedRelation);
    tg::EvalContext small;
    small.n_generators = 1;
    CHECK_THROWS_AS(tg::evaluate("xi(1)", small), tg::IndexOutOfRange);
  }

  TEST_CASE("coherent state from its generator") {
    for (const auto& ctx : {kPaper, uniform()}) {
      const auto r = tg::evaluate("ket(0) + ad*xi(0)*ket(0) - (ad*xi(0))^2*ket(0)", ctx);
      CHECK(as<tg::StateVec>(r) == tg::coherent_ket(ctx.convention));
      const auto alt = tg::evaluate("(1 + ad*xi(0) - (ad*xi(0))^2)*ket(0)", ctx);
      CHECK(as<tg::StateVec>(alt) == tg::coherent_ket(ctx.convention));
    }
    CHECK(as<tg::StateVec>(tg::evaluate("a*(1 + ad*xi(0) - (ad*xi(0))^2)*ket(0)", kPaper)) ==
          tg::annihilate(tg::paper_convention()));
  }

  TEST_CASE("bra ket contractions") {
    CHECK(as<CycScalar>(tg::evaluate("bra(1)*ket(1)", kPaper)) == CycScalar(1L));
    CHECK(is_zero(tg::evaluate("bra(0)*ket(1)", kPaper)));
    CHECK(as<CycScalar>(tg::evaluate("bra(0)*a*ket(1)", kPaper)) == CycScalar(1L));
    CHECK(as<CycScalar>(tg::evaluate("bra(1)*a*ket(2)", kPaper)) == CycScalar::i());
    CHECK(tg::evaluate_grassmann("bra(0)*xb(0)*ket(0)", kPaper) == GElement::word({GeneratorSym::xb(0)}));
    CHECK(tg::evaluate_grassmann("bra(1)*xb(0)*ket(1)", kPaper) ==
          GElement::word({GeneratorSym::xb(0)}, CycScalar::q_pow(2)));
    const auto bra = tg::evaluate("bra(0) + q*bra(1)*xb(0) - i*bra(2)*xb(0)^2", kPaper);
    CHECK(as<tg::BraVec>(bra) == tg::coherent_bra(tg::paper_convention()));
  }

  TEST_CASE("result kinds and json") {
    CHECK(std::string(tg::result_kind(tg::evaluate("q", kPaper))) == "scalar");
    CHECK(std::string(tg::result_kind(tg::evaluate("xi(0)", kPaper))) == "grassmann");
    CHECK(std::string(tg::result_kind(tg::evaluate("ad", kPaper))) == "operator");
    CHECK(std::string(tg::result_kind(tg::evaluate("ad*xi(0)", kPaper))) == "mixed");
    CHECK(std::string(tg::result_kind(tg::evaluate("ket(0)", kPaper))) == "state");
    CHECK(std::string(tg::result_kind(tg::evaluate("bra(0)", kPaper))) == "bra");
    const auto j = tg::to_json(tg::evaluate("xi(0)^2", kPaper));
    CHECK(j.at("kind") == "grassmann");
    CHECK(j.at("text") == "xi(0)^2");
  }
}
