#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cliff/decomposition.hpp"
#include "cliff/points.hpp"

namespace cliff {

// Isotropic eigenvectors of b x (.) in a boost or rotation plane.
struct NullPair {
  Multivector plus;   // b x w+ = mu w+
  Multivector minus;  // b x w- = -mu w-
  Complex mu;         // +sqrt(b^2): real for boosts, +i|b| for rotations
};

// The null direction of a translation plane (mu = 0).
struct HorizonVector {
  Multivector u;
};

using NullEigenvectors = std::variant<NullPair, HorizonVector>;

// Eigenvectors for the plane b = u v. When u and v are omitted they are taken
// from the blade's support.
NullEigenvectors null_eigenvectors(const SimpleFactor& b, double tol = kDefaultTolerance);
NullPair null_pair(const Multivector& u, const Multivector& v, double tol = kDefaultTolerance);

struct NullBasis {
  std::vector<Multivector> plus;   // w+_j
  std::vector<Multivector> minus;  // w-_j, scaled so that {w+_j, w-_j} = 1
  std::vector<Complex> mu;
  std::vector<Multivector> cartan;  // b_j
  std::vector<Multivector> beta;    // b_j / mu_j
  std::optional<Multivector> extra;

  int k() const { return static_cast<int>(plus.size()); }
};

// Null basis from a point frame: w+-_j built from (v_{2j-1}, v_{2j}).
NullBasis null_basis(const PointFrame& f, double tol = kDefaultTolerance);

// prod_j w+_j w-_j
Multivector master_idempotent(const NullBasis& nb);

struct SpinorState {
  Multivector value;
  LabelVector label;
};

// [prod_j (w-_j)^{(1 - s_j)/2}] times the master idempotent, j ascending.
SpinorState basis_spinor(const NullBasis& nb, const LabelVector& s);

// prod_j beta_j
Multivector chiral_operator(const NullBasis& nb);

enum class WeylSide { Left, Right };
// (1 +- Gamma) eta / 2, Left taking the + sign.
Multivector weyl_project(const Multivector& eta, const NullBasis& nb, WeylSide side);

// Coefficients c_s with eta = sum_s c_s eta_s. Throws Domain when eta is not
// in the span of the basis spinors.
std::map<LabelVector, Complex> spinor_expand(const Multivector& eta, const NullBasis& nb,
                                             double tol = 1e-10);

// Complex rank of the coefficient matrix of the given multivectors.
int complex_rank(const std::vector<Multivector>& elements, double tol = 1e-10);

}  // namespace cliff
