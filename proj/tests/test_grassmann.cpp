#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tg/errors.hpp"
#include "tg/grassmann.hpp"

using tg::CycScalar;
using tg::GElement;
using tg::GeneratorSym;
using tg::GWord;

namespace {

std::vector<GeneratorSym> alphabet(int n) {
  std::vector<GeneratorSym> out;
  for (int a = 0; a < n; ++a) {
    out.push_back(GeneratorSym::xi(a));
    out.push_back(GeneratorSym::xb(a));
  }
  return out;
}

std::vector<GWord> words_up_to(int n, int max_len) {
  const auto alpha = alphabet(n);
  std::vector<GWord> out{{}}, layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GWord> next;
    for (const auto& w : layer)
      for (const auto& s : alpha) {
        GWord v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

GWord random_word(std::mt19937& rng, int n, int max_len) {
  const auto alpha = alphabet(n);
  std::uniform_int_distribution<int> len(0, max_len), pick(0, static_cast<int>(alpha.size()) - 1);
  GWord w(static_cast<std::size_t>(len(rng)));
  for (auto& s : w) s = alpha[static_cast<std::size_t>(pick(rng))];
  return w;
}

}  // namespace

TEST_SUITE("grassmann") {
  TEST_CASE("single pair agrees with the regular representation on 200 random words") {
    std::mt19937 rng(42);
    const tg::AlgebraSignature sig = {1, tg::RuleMode::relational};
    for (int k = 0; k < 200; ++k) {
      const GWord w = random_word(rng, 1, 6);
      CHECK(oracle::coordinates(tg::normalize(w, sig)) == oracle::act(w));
    }
  }

  TEST_CASE("transposition traces, two pairs, length <= 4") {
    const tg::AlgebraSignature sig{2, tg::RuleMode::relational};
    int checked = 0;
    for (const auto& w : words_up_to(2, 4)) {
      const auto trace = oracle::transposition_trace(w);
      if (!trace) continue;
      ++checked;
      CHECK(tg::normalize(w, sig) == GElement::word(trace->second, trace->first));
    }
    CHECK(checked > 100);
  }

  TEST_CASE("nilpotency and long blocks") {
    const tg::AlgebraSignature sig{2, tg::RuleMode::relational};
    const auto xi = GeneratorSym::xi(0), xb = GeneratorSym::xb(0), eta = GeneratorSym::xi(1);
    CHECK(tg::normalize(GWord{xi, xi, xi}, sig).is_zero());
    CHECK(tg::normalize(GWord{xb, xb, xb}, sig).is_zero());
    CHECK(tg::normalize(GWord{xi, eta, xi, eta}, sig).is_zero());
    CHECK(tg::normalize(GWord{xi, xb, xi, xi}, sig).is_zero());
    CHECK_FALSE(tg::normalize(GWord{xi, xi, xb, xb}, sig).is_zero());
  }

  TEST_CASE("ternary rotation") {
    for (int n = 1; n <= 3; ++n) {
      const tg::AlgebraSignature sig{n, tg::RuleMode::relational};
      for (const auto& w : words_up_to(n, 3)) {
        if (w.size() != 3 || w[0].kind != w[1].kind || w[1].kind != w[2].kind) continue;
        const CycScalar unit = w[0].kind == tg::GenKind::unbarred ? CycScalar::q() : CycScalar::q_pow(2);
        GWord r = w;
        CycScalar phase(1L);
        for (int k = 0; k < 3; ++k) {
          std::rotate(r.begin(), r.begin() + 1, r.end());
          phase *= unit;
          CHECK(tg::normalize(w, sig) == tg::normalize(r, sig) * phase);
        }
        CHECK(r == w);
        CHECK(phase == CycScalar(1L));
      }
    }
  }

  TEST_CASE("idempotence and congruence, N <= 2, length <= 6") {
    for (const auto mode : {tg::RuleMode::relational, tg::RuleMode::constrained}) {
      for (int n = 1; n <= 2; ++n) {
        const tg::AlgebraSignature sig{n, mode};
        for (const auto& w : words_up_to(n, n == 1 ? 6 : 5)) {
          const GElement once = tg::normalize(w, sig);
          CHECK(tg::normalize(once, sig) == once);
        }
        std::mt19937 rng(7 + n);
        for (int k = 0; k < 300; ++k) {
          const GWord u = random_word(rng, n, 3), v = random_word(rng, n, 3);
          GWord uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          CHECK(tg::multiply(tg::normalize(u, sig), tg::normalize(v, sig), sig) == tg::normalize(uv, sig));
        }
      }
    }
  }

  TEST_CASE("basis dimensions") {
    for (long n = 1; n <= 3; ++n) {
      const auto basis = tg::enumerate_basis({static_cast<int>(n), tg::RuleMode::constrained});
      CHECK(static_cast<long>(basis.size()) == (3 + 4 * n + 9 * n * n + 2 * n * n * n) / 3);
      CHECK(static_cast<long>(basis.size()) == 1 + 2 * n + 3 * n * n + 2 * (n * n * n - n) / 3);
    }
    CHECK(tg::enumerate_basis({1, tg::RuleMode::constrained}).size() == 6);
    CHECK(tg::enumerate_basis({2, tg::RuleMode::constrained}).size() == 21);
    CHECK(tg::enumerate_basis({3, tg::RuleMode::constrained}).size() == 50);
    CHECK(tg::enumerate_basis({1, tg::RuleMode::relational}).size() == 9);
    CHECK_THROWS_AS(tg::enumerate_basis({7, tg::RuleMode::constrained}), tg::GuardExceeded);
  }

  TEST_CASE("constrained mode drops shapes off the survival list") {
    const auto xi = GeneratorSym::xi(0), xb = GeneratorSym::xb(0);
    CHECK(tg::normalize(GWord{xi, xi, xb}, {1, tg::RuleMode::constrained}).is_zero());
    CHECK_FALSE(tg::normalize(GWord{xi, xi, xb}, {1, tg::RuleMode::relational}).is_zero());
    CHECK_FALSE(tg::normalize(GWord{xi, xb}, {1, tg::RuleMode::constrained}).is_zero());
    CHECK(tg::survives_grading(3, 0));
    CHECK_FALSE(tg::survives_grading(2, 2));
  }

  TEST_CASE("index range") {
    CHECK_THROWS_AS(tg::normalize(GWord{GeneratorSym::xi(1)}, {1, tg::RuleMode::relational}), tg::IndexOutOfRange);
  }
}
