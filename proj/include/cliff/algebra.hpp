#pragma once

#include <optional>
#include <vector>

#include "cliff/kernel.hpp"
#include "cliff/multivector.hpp"

namespace cliff {

Multivector product(kernel::Product kind, const Multivector& a, const Multivector& b);

inline Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }
inline Multivector outer_product(const Multivector& a, const Multivector& b) { return a ^ b; }
Multivector left_contraction(const Multivector& a, const Multivector& b);
// a x b = (ab - ba) / 2
Multivector commutator_product(const Multivector& a, const Multivector& b);
// Grade-0 part of ab.
Complex scalar_product(const Multivector& a, const Multivector& b);
// Metric inner product of two vectors (real coefficients).
double vector_dot(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& a);
Multivector grade_involution(const Multivector& a);
Multivector clifford_conjugate(const Multivector& a);
// Throws Domain when k exceeds the dimension.
Multivector grade_select(const Multivector& a, int k);
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);

// Bitmask of grades carrying a coefficient above tol (bit g set = grade g present).
unsigned grades_present(const Multivector& a, double tol = 0.0);
// True when every grade other than k is below tol * max(1, |a|).
bool is_pure_grade(const Multivector& a, int k, double tol = kDefaultTolerance);
// Norm of everything outside grade k.
double off_grade_norm(const Multivector& a, int k);

// |a - b| <= tol * max(1, |a|, |b|)
bool approx_equal(const Multivector& a, const Multivector& b, double tol = kDefaultTolerance);
double relative_difference(const Multivector& a, const Multivector& b);

// Product e_1 e_2 ... e_d in ascending bit order, times `orientation` (+1/-1).
// The orientation convention is left to the caller.
Multivector pseudoscalar(const Signature& sig, int orientation = 1);

enum class Parity { Even, Odd };

struct VersorCertificate {
  Multivector subject;
  Parity parity;
  double norm;  // scalar value of U reverse(U)
};

// Probabilistic certification: U reverse(U) is a nonzero real scalar, U has
// pure parity, and conjugation by U keeps every basis vector grade 1.
std::optional<VersorCertificate> certify_versor(const Multivector& u,
                                                double tol = kDefaultTolerance);

// reverse(u) / (u reverse(u)). Throws NotInvertible when u reverse(u) is not an
// invertible scalar (null versors, mixed elements).
Multivector versor_inverse(const Multivector& u, double tol = kDefaultTolerance);
// u w u^{-1}
Multivector sandwich(const Multivector& u, const Multivector& w, double tol = kDefaultTolerance);

// True when B^B vanishes (relative to |B|^2).
bool is_simple_bivector(const Multivector& b, double tol = kDefaultTolerance);

// exp of a pure bivector. Simple bivectors use the closed form picked by the
// sign of B^2; others are split into commuting simple parts first.
Multivector exp_bivector(const Multivector& b, double tol = kDefaultTolerance);

}  // namespace cliff
