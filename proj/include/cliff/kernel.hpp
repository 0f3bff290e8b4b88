#pragma once

// Dense blade-product kernels over real coefficient tables of length 2^d.
//
// Two implementations are kept side by side:
//   * serial  - scatter form: loop over (i, j) pairs, accumulate into out[i^j].
//               This is the reference implementation used by the tests.
//   * openmp  - gather form: one independent output blade per iteration,
//               out[k] = sum_i sign(i, i^k) a[i] b[i^k]. No write conflicts.
// Both visit the contributions to each output blade in ascending i, so they
// agree bit for bit.

#include <span>

#include "cliff/signature.hpp"

namespace cliff::kernel {

enum class Product {
  Geometric,
  Outer,            // only pairs with disjoint support
  LeftContraction,  // only pairs with support(a) inside support(b)
};

// Below this dimension the OpenMP variant costs more than it saves.
inline constexpr int kParallelThreshold = 8;

// out must be zero-initialized by the caller; results are accumulated.
void product_serial(const Signature& sig, Product kind, std::span<const double> a,
                    std::span<const double> b, std::span<double> out);
void product_openmp(const Signature& sig, Product kind, std::span<const double> a,
                    std::span<const double> b, std::span<double> out);

// Picks the implementation by dimension.
void product(const Signature& sig, Product kind, std::span<const double> a,
             std::span<const double> b, std::span<double> out);

}  // namespace cliff::kernel
