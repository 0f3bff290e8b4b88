#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff {

// Eigenvalue signs s_j = +-1, one per Cartan bivector.
using LabelVector = std::vector<int>;

// All 2^k labels, (+,...,+) first; entry j flips fastest for larger j.
std::vector<LabelVector> all_labels(int k);
std::string to_string(const LabelVector& s);

struct PointFrame {
  Multivector point;
  std::vector<Multivector> vectors;  // mutually orthogonal, product == point
  std::vector<Multivector> cartan;   // b_j = v_{2j-1} v_{2j}
  std::optional<Multivector> extra;  // v_{2k+1} when the point has odd grade

  int grade() const { return static_cast<int>(vectors.size()); }
  int k() const { return static_cast<int>(cartan.size()); }
  // Largest deviation from the frame invariants (0 for an exact frame).
  double invariant_residual() const;
};

// Builds a frame from an ordered list of orthogonal vectors.
PointFrame frame_from_vectors(std::vector<Multivector> vectors);

// Factors a non-null blade into mutually orthogonal vectors, largest |x^2|
// first; overall magnitude and sign sit on the first vector.
PointFrame factor_point(const Multivector& o, double tol = kDefaultTolerance);

// Conjugates every frame vector by the rotor G, which must fix the point.
PointFrame gauge_frame(const PointFrame& f, const Multivector& g, double tol = kDefaultTolerance);

// Part of zeta outside the subalgebra spanned by the frame vectors.
double subalgebra_residual(const Multivector& zeta, const PointFrame& f);

// zeta_s = prod_j (zeta + s_j b_j zeta b_j^{-1}) / 2
Multivector label_project(const Multivector& zeta, const PointFrame& f, const LabelVector& s,
                          double tol = kDefaultTolerance);
std::map<LabelVector, Multivector> label_decompose(const Multivector& zeta, const PointFrame& f,
                                                   double tol = kDefaultTolerance);

// (zeta + C zeta C^{-1}) / 2 and (zeta - C zeta C^{-1}) / 2, with C the point
// for even grade and the product of the Cartan bivectors for odd grade.
std::pair<Multivector, Multivector> chiral_split(const Multivector& zeta, const PointFrame& f,
                                                 double tol = kDefaultTolerance);

}  // namespace cliff
