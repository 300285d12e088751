#pragma once

// Independent references for the tests. Nothing here calls the routine it is
// used to check: numbers come from the defining rules written out directly.

#include <complex>
#include <optional>
#include <span>
#include <utility>

#include <Eigen/Core>

#include "tg/grassmann.hpp"
#include "tg/matrix.hpp"
#include "tg/oscillator.hpp"

namespace oracle {

using cd = std::complex<double>;

// sum_k c_k exp(i pi k / 6)
cd embed(const tg::CycScalar& x);

cd q();
cd i();

// Ladder matrices from a|n> = sqrt[n]|n-1>, with sqrt[1] = 1, sqrt[2] = i.
Eigen::Matrix3cd a();
Eigen::Matrix3cd ad();
Eigen::Matrix3cd num();
Eigen::Matrix3cd qN(int s);
Eigen::Matrix3cd word_matrix(std::span<const tg::OpSym> word);

// Left-regular representation of the single-pair relational algebra on the
// basis xi^m xb^n (index 3m + n): xi raises m, xb raises n after passing m
// unbarred symbols at q^2 each.
using Mat9 = Eigen::Matrix<tg::CycScalar, 9, 9>;
using Vec9 = Eigen::Matrix<tg::CycScalar, 9, 1>;
Mat9 left_xi();
Mat9 left_xb();
Vec9 act(std::span<const tg::GeneratorSym> word);
Vec9 coordinates(const tg::GElement& e);

// For words with at most two symbols of each kind: q^(2 * inversions) and the
// stably sorted word. nullopt otherwise.
std::optional<std::pair<tg::CycScalar, tg::GWord>> transposition_trace(const tg::GWord& w);

// k-th coefficient of f(x)|0>, f = 1 + x - x^2, in operator layout |k> g_k xi^k.
// creation_first: x = ad xi, each xi passes the ad's to its right.
tg::CycScalar generator_coefficient(int k, bool creation_first);

}  // namespace oracle
