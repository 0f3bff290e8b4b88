#pragma once

#include <Eigen/Dense>

#include "cliff/multivector.hpp"

namespace cliff {

inline constexpr int kMaxOracleDimension = 8;

// Left-regular representation: the 2^d x 2^d matrix of x -> a x on the blade
// basis. Built from the action of single basis vectors on ascending index
// lists, independently of the blade-product kernel, so it serves as a
// brute-force oracle. Throws Unsupported for d > 8.
Eigen::MatrixXcd matrix_rep(const Multivector& a);

// Inverse of matrix_rep on its image: the multivector is the column acting on
// the scalar blade.
Multivector from_matrix_rep(const Signature& sig, const Eigen::MatrixXcd& m);

}  // namespace cliff
