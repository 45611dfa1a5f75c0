#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>

namespace isel {

// Exact scalars. Positions, distances and margins stay rational so that
// ties are decided exactly; doubles appear only at realization and plotting
// boundaries.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Index = Eigen::Index;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMat = Mat<Rational>;
using RatVec = Vec<Rational>;

/// |base|^p for small integral p >= 1.
Rational pow_abs(const Rational& base, int p);

/// Exact dyadic rational equal to a finite double.
Rational rational_from_double(double x);

double to_double(const Rational& r);

}  // namespace isel
