#include <random>

#include "doctest.h"
#include "tg/eval.hpp"
#include "tg/render.hpp"

using tg::CycScalar;
using tg::GElement;
using tg::GeneratorSym;

namespace {

CycScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  CycScalar::Coeffs c;
  for (auto& r : c) {
    r = tg::Rational(num(rng), den(rng));
    r.canonicalize();
  }
  return CycScalar(c);
}

GElement random_element(std::mt19937& rng, const tg::AlgebraSignature& sig) {
  const auto basis = tg::enumerate_basis(sig);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  GElement e;
  for (int k = 0; k < 4; ++k) e = e + GElement::word(basis[pick(rng)], random_scalar(rng));
  return e;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("scalar text") {
    CHECK(tg::to_string(CycScalar(0L)) == "0");
    CHECK(tg::to_string(CycScalar::q()) == "q");
    CHECK(tg::to_string(CycScalar::i()) == "i");
    CHECK(tg::to_string(-CycScalar::i() * CycScalar::q_pow(2)) == "-i*q^2");
    CHECK(tg::to_string(CycScalar(tg::Rational(1, 2))) == "1/2");
  }

  TEST_CASE("scalars survive text and json") {
    std::mt19937 rng(3);
    const tg::EvalContext ctx;
    for (int k = 0; k < 100; ++k) {
      const CycScalar x = random_scalar(rng);
      CAPTURE(tg::to_string(x));
      CHECK(std::get<CycScalar>(tg::evaluate(tg::to_string(x), ctx)) == x);
      CHECK(tg::scalar_from_json(tg::to_json(x)) == x);
      CHECK(tg::scalar_from_json(nlohmann::json::parse(tg::to_json(x).dump())) == x);
    }
  }

  TEST_CASE("grassmann elements survive text") {
    std::mt19937 rng(4);
    for (const int n : {1, 2}) {
      const tg::AlgebraSignature sig{n, tg::RuleMode::relational};
      tg::EvalContext ctx;
      ctx.n_generators = n;
      for (int k = 0; k < 50; ++k) {
        const GElement e = random_element(rng, sig);
        CAPTURE(tg::to_string(e));
        CHECK(tg::evaluate_grassmann(tg::to_string(e), ctx) == e);
      }
    }
  }

  TEST_CASE("states survive text") {
    for (const auto& conv : tg::shipped_conventions()) {
      tg::EvalContext ctx;
      ctx.convention = conv;
      const tg::StateVec k = tg::coherent_ket(conv);
      CHECK(std::get<tg::StateVec>(tg::evaluate(tg::to_string(k), ctx)) == k);
      const tg::BraVec b = tg::coherent_bra(conv);
      CHECK(std::get<tg::BraVec>(tg::evaluate(tg::to_string(b), ctx)) == b);
      if (conv.name == "paper") CHECK(tg::to_string(k) == "ket(0) + q^2*xi(0)*ket(1) - i*xi(0)^2*ket(2)");
    }
  }

  TEST_CASE("matrix and weight text") {
    CHECK(tg::to_string(tg::exact_identity()) == "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]");
    CHECK(tg::to_string(tg::printed_weight()).find("-q") == 0);
    const auto j = tg::to_json(tg::exact_identity());
    CHECK(j.size() == 3);
    CHECK(j[1][1] == "1");
  }
}
