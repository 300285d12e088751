#pragma once

// Dense Fock-space types, templated on the scalar so the same code serves the
// exact field and its complex embedding.

#include <complex>

#include <Eigen/Core>

#include "tg/scalars.hpp"

namespace Eigen {

template <>
struct NumTraits<tg::CycScalar> : GenericNumTraits<tg::CycScalar> {
  using Real = tg::CycScalar;
  using NonInteger = tg::CycScalar;
  using Nested = tg::CycScalar;
  using Literal = tg::CycScalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };

  static inline Real epsilon() { return Real(0L); }
  static inline Real dummy_precision() { return Real(0L); }
  static inline int digits10() { return 0; }
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<tg::CycScalar, tg::CycScalar, BinaryOp> {
  using ReturnType = tg::CycScalar;
};

}  // namespace Eigen

namespace tg {

inline constexpr int kFockDim = 3;

template <typename Scalar>
using FockMatrix = Eigen::Matrix<Scalar, kFockDim, kFockDim>;

template <typename Scalar>
using FockVector = Eigen::Matrix<Scalar, kFockDim, 1>;

using ExactMatrix = FockMatrix<CycScalar>;
using ExactVector = FockVector<CycScalar>;

template <typename Derived>
auto to_numeric(const Eigen::MatrixBase<Derived>& m) {
  return m.unaryExpr([](const CycScalar& x) { return x.to_complex(); }).eval();
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

inline ExactMatrix exact_zero() {
  ExactMatrix m;
  m.setConstant(CycScalar(0L));
  return m;
}

inline ExactMatrix exact_identity() {
  ExactMatrix m = exact_zero();
  for (int k = 0; k < kFockDim; ++k) m(k, k) = CycScalar(1L);
  return m;
}

}  // namespace tg
