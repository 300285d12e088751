#include "doctest.h"
#include "tg/errors.hpp"
#include "tg/mixed.hpp"

using tg::CycScalar;
using tg::GeneratorSym;
using tg::MixedWord;
using tg::OpSym;

TEST_SUITE("mixed") {
  TEST_CASE("exchange phases") {
    CHECK(tg::exchange_phase(GeneratorSym::xi(0), OpSym::ad()) == CycScalar::q());
    CHECK(tg::exchange_phase(GeneratorSym::xb(0), OpSym::a()) == CycScalar::q_pow(2));
    CHECK(tg::exchange_phase(GeneratorSym::xi(0), OpSym::num()) == CycScalar(1L));
    CHECK(tg::exchange_phase(GeneratorSym::xb(0), OpSym::qN(2)) == CycScalar(1L));
    CHECK_THROWS_AS(tg::exchange_phase(GeneratorSym::xi(0), OpSym::a()), tg::UndefinedRelation);
    CHECK_THROWS_AS(tg::exchange_phase(GeneratorSym::xb(0), OpSym::ad()), tg::UndefinedRelation);
  }

  TEST_CASE("pushing generators right") {
    const MixedWord w{GeneratorSym::xi(0), OpSym::ad(), GeneratorSym::xi(0), OpSym::ad()};
    const tg::Segregated s = tg::push_grassmann_right(w);
    // first xi passes two ad, the second one
    CHECK(s.phase == CycScalar::q_pow(3));
    CHECK(s.ops.size() == 2);
    CHECK(s.gens.size() == 2);
    CHECK_THROWS_AS(tg::push_grassmann_right(MixedWord{GeneratorSym::xi(0), OpSym::a()}), tg::UndefinedRelation);
  }

  TEST_CASE("normal form") {
    const tg::AlgebraSignature sig{1, tg::RuleMode::relational};
    const tg::MixedElement m = tg::mixed_normalize(MixedWord{GeneratorSym::xi(0), OpSym::ad()}, sig);
    tg::MixedElement want;
    want.add_term({tg::OpKey{1, 0, 0, 0}, tg::GWord{GeneratorSym::xi(0)}}, CycScalar::q());
    CHECK(m == want);
    const tg::MixedElement n = tg::mixed_normalize(MixedWord{GeneratorSym::xb(0), OpSym::num(), GeneratorSym::xi(0)}, sig);
    CHECK(n.terms().size() == 1);
    CHECK(n.terms().begin()->second == CycScalar::q_pow(2));
    CHECK(tg::mixed_normalize(MixedWord{OpSym::ad(), GeneratorSym::xi(0), OpSym::ad(), GeneratorSym::xi(0),
                                        OpSym::ad(), GeneratorSym::xi(0)},
                              sig)
              .is_zero());
  }
}
