#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cliff/points.hpp"
#include "cliff/spinors.hpp"

namespace cliff {

// psi = rho_plus R + rho_minus P with R an even and P an odd normalized versor.
struct Pointor {
  double rho_plus = 1.0;
  Multivector rotor;
  double rho_minus = 0.0;
  std::optional<Multivector> reflector;
  PointFrame frame;

  Multivector assemble() const;
};

// Validates parity, normalization and subalgebra membership, and that the
// sum actually preserves the frame's point.
Pointor make_pointor(double rho_plus, const Multivector& r, double rho_minus,
                     const std::optional<Multivector>& p, const PointFrame& frame,
                     double tol = kDefaultTolerance);

struct PointorCheck {
  bool ok = false;
  double rho = 0.0;       // <psi O psi~ O^{-1}>_0
  double residual = 0.0;  // |psi O psi~ - rho O| / (|psi|^2 |O|)
};

// psi O psi~ == rho O for real rho.
PointorCheck is_pointor(const Multivector& psi, const Multivector& o, double tol = kDefaultTolerance);

std::pair<Multivector, Multivector> pointor_weyl_split(const Multivector& psi, const PointFrame& f,
                                                       double tol = kDefaultTolerance);

// prod_{j : s_j = -1} u_j, u_j the unit first vector of the j-th plane. In odd
// grade an odd product is followed by the unit extra vector, keeping it even.
Multivector reference_state(const PointFrame& f, const LabelVector& s);

// Unit Cartan bivectors b_j / sqrt(|b_j^2|).
std::vector<Multivector> unit_cartan(const PointFrame& f);

struct LabeledPointorComponent {
  LabelVector label;
  Multivector component;  // psi_s
  double rho = 0.0;
  std::vector<double> thetas;
  Multivector ref;
  // |rho exp(sum theta_j b_j) ref - psi_s| relative to |psi_s|
  double residual = 0.0;
};

// sum_s rho_s exp(sum_j theta_sj b_j) ref_s over unit Cartan bivectors.
struct LabelTerm {
  LabelVector label;
  double rho = 0.0;
  std::vector<double> thetas;
};
Multivector compose_label_sum(const PointFrame& f, const std::vector<LabelTerm>& terms);

// Label components of psi with (rho, theta) read off against the reference
// states. Components that are not of that form keep a large residual.
std::vector<LabeledPointorComponent> pointor_label_decompose(const Multivector& psi,
                                                             const PointFrame& f,
                                                             double tol = kDefaultTolerance);

struct ChiralNorms {
  Multivector left, right;           // chiral halves
  Multivector left_norm, right_norm;  // psi_L psi_L~, psi_R psi_R~
  double residual = 0.0;             // largest non-scalar part, relative
};
// Computes the norms of the chiral halves for any number of planes.
ChiralNorms chiral_norms(const Multivector& psi, const PointFrame& f, double tol = kDefaultTolerance);

struct ChiralNormVerdict {
  bool holds = false;
  double residual = 0.0;
  // Normalized halves psi_L / sqrt|n_L| and psi_R / sqrt|n_R| when nonzero.
  std::optional<Multivector> left_versor, right_versor;
  double rho_left = 0.0, rho_right = 0.0;
};

// For frames with fewer than three Cartan planes: both chiral halves have
// real norms. Throws Unsupported for k >= 3.
ChiralNormVerdict chiral_norm_check(const Multivector& psi, const PointFrame& f,
                                    double tol = kDefaultTolerance);

// psi times the master idempotent of nb; nb must come from the same Cartan frame.
Multivector to_algebraic_spinor(const Multivector& psi, const PointFrame& f, const NullBasis& nb,
                                double tol = kDefaultTolerance);

struct HestenesCheck {
  bool ok = false;
  double rho = 0.0;
  Multivector y;
  double residual = 0.0;  // non-vector part of phi x phi~, relative
};

// phi x phi~ == rho y with y a vector, y^2 == x^2.
HestenesCheck hestenes_check(const Multivector& phi, const Multivector& x,
                             double tol = kDefaultTolerance);

}  // namespace cliff
