#pragma once

#include <optional>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

enum class FactorKind { Boost, Translation, Rotation };

const char* to_string(FactorKind kind);

// A 2-blade b with its square lambda = b^2.
struct SimpleFactor {
  Multivector bivector;
  double lambda = 0.0;
  FactorKind kind = FactorKind::Translation;
};

SimpleFactor make_simple_factor(const Multivector& b, double tol = kDefaultTolerance);

struct BivectorSplit {
  // Ordered by descending |lambda|; translation (null) parts come last.
  std::vector<SimpleFactor> factors;
  // Set when two planes share a lambda; the pairing inside that eigenspace is
  // then one of many valid choices.
  bool degenerate = false;
};

// Splits a bivector into mutually commuting simple bivectors summing to B.
//
// The adjoint map w -> B x w is assembled as a d x d matrix A. Its square has
// eigenvalue lambda_j on the invariant plane of the j-th component; each plane
// is recovered from the eigenspace and B is projected onto its blade. Whatever
// remains (null directions, degenerate metrics) must itself be simple.
// Throws Unsupported for non-real spectra and Decomposition when the remainder
// is not simple.
BivectorSplit bivector_split(const Multivector& b, double tol = kDefaultTolerance);

struct InvariantDecomposition {
  Multivector source;
  // Commuting simple factors c + s b. Each has U~U = +-1 except a translation
  // factor, which is 1 + t with t null.
  std::vector<Multivector> factors;
  // Unit vector for odd versors; commutes with every factor.
  std::optional<Multivector> residual_reflection;
  // Overall magnitude and sign: source == scale * prod(factors) * residual.
  double scale = 1.0;
  bool degenerate = false;

  Multivector reconstruct() const;
  // Number of parts: bireflections plus the residual reflection.
  std::size_t count() const { return factors.size() + (residual_reflection ? 1 : 0); }
};

// Factorizes a versor into ceil(l/2) commuting simple parts, l being its
// minimal reflection count.
//
// Works on the orthogonal map T(x) = U^ x U^{-1} on vectors. For odd U the
// residual reflection is a real eigenvector of T with eigenvalue -1; dividing
// it out leaves an even versor. For even U, T + T^{-1} has eigenvalue 2 cos(phi)
// (or 2 cosh(phi)) on each invariant plane. The bireflection in each plane is
// rebuilt from the action of T on one vector of the plane. What is left after
// dividing all planes out is a scalar, possibly times a null translation.
InvariantDecomposition invariant_decompose(const Multivector& u, double tol = kDefaultTolerance);

// Principal logarithm of a normalized even versor (R~R = 1): exp(rotor_log(R)) == R.
// Throws Branch for R == -1 and for boost factors whose scalar part is not
// positive, which have no real logarithm.
Multivector rotor_log(const Multivector& r, double tol = kDefaultTolerance);

struct GaugedPair {
  Multivector u;
  Multivector v;
  bool parallel = false;  // u and v share no bivector; inputs returned unchanged
};

// Rotates the mirror pair (u, v) around their intersection by angle alpha:
// G = exp(alpha * normalize(<vu>_2)), returns (G u G~, G v G~). v'u' == vu.
GaugedPair gauge_pair(const Multivector& u, const Multivector& v, double alpha,
                      double tol = kDefaultTolerance);

// Re-factorizes a product of vectors into its invariant form: pairs of vectors
// spanning each commuting plane, then the residual reflection. The product is
// unchanged. Lists that are already mutually orthogonal are returned as is.
std::vector<Multivector> orthogonalize_factorization(const std::vector<Multivector>& vectors,
                                                     double tol = kDefaultTolerance);

struct PolarDecomposition {
  Multivector self_reverse;  // S == reverse(S)
  Multivector rotor;         // R~R == 1
};

// psi == S R for even psi whose norm psi~psi has grades {0, 4} only.
PolarDecomposition polar_decompose(const Multivector& psi, double tol = kDefaultTolerance);

// Principal square root of X = x0 + x4 where x4^2 is a scalar.
Multivector sqrt_self_reverse(const Multivector& x, double tol = kDefaultTolerance);

}  // namespace cliff
