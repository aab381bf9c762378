#pragma once

#include <Eigen/Core>

#include "lgfano/complexnum.hpp"
#include "lgfano/rational.hpp"
#include "lgfano/real.hpp"

namespace Eigen {

template <>
struct NumTraits<lgfano::Real> : GenericNumTraits<lgfano::Real> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  typedef lgfano::Real Real;
  typedef lgfano::Real NonInteger;
  typedef lgfano::Real Nested;
  static inline Real epsilon() { return Real::two_pow(-63, 64); }
  static inline Real dummy_precision() { return Real::two_pow(-48, 64); }
  static inline int digits10() { return 18; }
};

template <>
struct NumTraits<lgfano::Complex> : GenericNumTraits<lgfano::Complex> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 1,
    RequireInitialization = 1,
    ReadCost = 2 * HugeCost,
    AddCost = 2 * HugeCost,
    MulCost = 4 * HugeCost
  };
  typedef lgfano::Real Real;
  typedef lgfano::Complex NonInteger;
  typedef lgfano::Complex Nested;
  static inline Real epsilon() { return Real::two_pow(-63, 64); }
  static inline Real dummy_precision() { return Real::two_pow(-48, 64); }
  static inline int digits10() { return 18; }
};

template <>
struct NumTraits<lgfano::Rational> : GenericNumTraits<lgfano::Rational> {
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = HugeCost,
    AddCost = HugeCost,
    MulCost = HugeCost
  };
  typedef lgfano::Rational Real;
  typedef lgfano::Rational NonInteger;
  typedef lgfano::Rational Nested;
  static inline lgfano::Rational epsilon() { return lgfano::Rational(0); }
  static inline lgfano::Rational dummy_precision() { return lgfano::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lgfano {

using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using MatrixXr = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace lgfano
