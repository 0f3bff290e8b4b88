#pragma once

// Internal helpers: vectors of Cl(p,q,r) as coordinate columns, metric
// Gram-Schmidt and real eigenspaces.

#include <Eigen/Dense>
#include <vector>

#include "cliff/multivector.hpp"

namespace cliff::detail {

Eigen::VectorXd coords(const Multivector& v);
Multivector from_coords(const Signature& sig, const Eigen::VectorXd& x);
Eigen::VectorXd metric_diagonal(const Signature& sig);
double mdot(const Eigen::VectorXd& g, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Matrix whose i-th column is the grade-1 part of f(e_i).
template <typename F>
Eigen::MatrixXd vector_map_matrix(const Signature& sig, F&& f) {
  const int d = sig.dim();
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i) m.col(i) = coords(f(Multivector::basis_vector(sig, i)));
  return m;
}

// Euclidean-orthonormal basis of the column span, dropping directions whose
// pivot falls below rel_tol times the largest (or below abs_tol).
Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& columns, double rel_tol = 1e-8,
                                 double abs_tol = 0.0);

// Basis for the null space of m (columns).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol = 1e-9);

// Vectors x with x ^ blade == 0, as orthonormal columns.
Eigen::MatrixXd outer_support(const Multivector& blade);

struct RealEigenGroup {
  double value;
  Eigen::MatrixXd basis;  // orthonormal columns spanning the eigenspace
};

// Groups real eigenvalues closer than group_tol (relative) and returns an
// eigenspace basis for each group. Eigenvalues with a significant imaginary
// part are reported through `complex_found`.
std::vector<RealEigenGroup> real_eigen_groups(const Eigen::MatrixXd& m, bool symmetric,
                                              double group_tol, bool* complex_found);

// Picks the direction in span(basis) maximizing |x.x| / |x|^2. A projected
// standard basis vector is used when it attains the optimum (the lowest index,
// or the highest with prefer_high). Returns zero when the span is null.
Eigen::VectorXd pick_non_null(const Eigen::VectorXd& g, const Eigen::MatrixXd& basis,
                              bool prefer_high = false);

// Removes the metric components along the given mutually orthogonal non-null
// vectors from every (unit) column, then re-orthonormalizes.
Eigen::MatrixXd remove_directions(const Eigen::VectorXd& g, const Eigen::MatrixXd& basis,
                                  const std::vector<Eigen::VectorXd>& dirs);

}  // namespace cliff::detail
