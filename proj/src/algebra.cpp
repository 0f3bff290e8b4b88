#include "cliff/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "cliff/decomposition.hpp"
#include "cliff/error.hpp"

namespace cliff {
namespace {

// Applies a per-grade sign pattern to every coefficient.
template <typename SignOfGrade>
Multivector map_grades(const Multivector& a, SignOfGrade sign_of) {
  Multivector out = a;
  auto re = out.real_table();
  auto im = out.imag_table();
  for (BladeMask m = 0; m < re.size(); ++m) {
    const double s = sign_of(grade_of(m));
    re[m] *= s;
    if (!im.empty()) im[m] *= s;
  }
  return out;
}

}  // namespace

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  return product(kernel::Product::LeftContraction, a, b);
}

Multivector commutator_product(const Multivector& a, const Multivector& b) {
  Multivector c = a * b;
  c -= b * a;
  return c *= 0.5;
}

Complex scalar_product(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::SignatureMismatch, "signature mismatch in scalar product");
  const Signature& sig = a.signature();
  Complex s = 0.0;
  for (BladeMask m = 0; m < a.size(); ++m) {
    const Complex am = a[m];
    if (am == 0.0) continue;
    const Complex bm = b[m];
    if (bm == 0.0) continue;
    s += static_cast<double>(blade_product_sign(sig, m, m)) * am * bm;
  }
  return s;
}

double vector_dot(const Multivector& a, const Multivector& b) {
  const Signature& sig = a.signature();
  double s = 0.0;
  for (int bit = 0; bit < sig.dim(); ++bit) {
    const BladeMask m = BladeMask{1} << bit;
    s += sig.metric(bit) * a.real_at(m) * b.real_at(m);
  }
  return s;
}

Multivector reverse(const Multivector& a) {
  return map_grades(a, [](int g) { return (g % 4 == 2 || g % 4 == 3) ? -1.0 : 1.0; });
}

Multivector grade_involution(const Multivector& a) {
  return map_grades(a, [](int g) { return (g % 2) ? -1.0 : 1.0; });
}

Multivector clifford_conjugate(const Multivector& a) {
  return map_grades(a, [](int g) { return (g % 4 == 1 || g % 4 == 2) ? -1.0 : 1.0; });
}

Multivector grade_select(const Multivector& a, int k) {
  if (k < 0 || k > a.signature().dim())
    throw Error(ErrorKind::Domain, "grade " + std::to_string(k) + " exceeds dimension " +
                                       std::to_string(a.signature().dim()));
  return map_grades(a, [k](int g) { return g == k ? 1.0 : 0.0; });
}

Multivector even_part(const Multivector& a) {
  return map_grades(a, [](int g) { return (g % 2) ? 0.0 : 1.0; });
}

Multivector odd_part(const Multivector& a) {
  return map_grades(a, [](int g) { return (g % 2) ? 1.0 : 0.0; });
}

unsigned grades_present(const Multivector& a, double tol) {
  unsigned mask = 0;
  for (BladeMask m = 0; m < a.size(); ++m)
    if (std::abs(a[m]) > tol) mask |= 1u << grade_of(m);
  return mask;
}

double off_grade_norm(const Multivector& a, int k) {
  double s = 0.0;
  for (BladeMask m = 0; m < a.size(); ++m)
    if (grade_of(m) != k) s += std::norm(a[m]);
  return std::sqrt(s);
}

bool is_pure_grade(const Multivector& a, int k, double tol) {
  return off_grade_norm(a, k) <= tol * std::max(1.0, a.norm());
}

double relative_difference(const Multivector& a, const Multivector& b) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return relative_difference(a, b) <= tol;
}

Multivector pseudoscalar(const Signature& sig, int orientation) {
  return Multivector::blade(sig, sig.full_mask(), orientation < 0 ? -1.0 : 1.0);
}

Multivector versor_inverse(const Multivector& u, double tol) {
  const Multivector rev = reverse(u);
  const Multivector n = u * rev;
  const double scale = std::max(1e-300, u.norm() * u.norm());
  const Complex n0 = n.scalar_part();
  if (off_grade_norm(n, 0) > tol * scale || std::abs(n0) <= tol * scale)
    throw Error(ErrorKind::NotInvertible, "element is not an invertible versor (u~u is not a "
                                          "nonzero scalar)");
  return rev * (1.0 / n0);
}

Multivector sandwich(const Multivector& u, const Multivector& w, double tol) {
  return u * w * versor_inverse(u, tol);
}

std::optional<VersorCertificate> certify_versor(const Multivector& u, double tol) {
  const double un = u.norm();
  if (un == 0.0) return std::nullopt;
  const double even = even_part(u).norm(), odd = odd_part(u).norm();
  Parity parity;
  if (odd <= tol * un)
    parity = Parity::Even;
  else if (even <= tol * un)
    parity = Parity::Odd;
  else
    return std::nullopt;
  const Multivector n = u * reverse(u);
  if (off_grade_norm(n, 0) > tol * un * un || n.scalar_part().imag() != 0.0 ||
      std::abs(n.scalar_part()) <= tol * un * un)
    return std::nullopt;
  const Multivector inv = reverse(u) * (1.0 / n.scalar_part().real());
  const Signature& sig = u.signature();
  for (int bit = 0; bit < sig.dim(); ++bit) {
    const Multivector image = u * Multivector::basis_vector(sig, bit) * inv;
    if (!is_pure_grade(image, 1, tol)) return std::nullopt;
  }
  return VersorCertificate{u, parity, n.scalar_part().real()};
}

bool is_simple_bivector(const Multivector& b, double tol) {
  const double n = b.norm();
  return (b ^ b).norm() <= tol * std::max(1.0, n * n);
}

Multivector exp_bivector(const Multivector& b, double tol) {
  if (b.is_complex()) throw Error(ErrorKind::Domain, "exp_bivector expects a real bivector");
  if (!is_pure_grade(b, 2, tol)) throw Error(ErrorKind::Domain, "exp_bivector expects a bivector");
  const Signature& sig = b.signature();
  const Multivector bb = grade_select(b, 2);
  const double n2 = bb.norm() * bb.norm();
  if (n2 == 0.0) return Multivector::scalar(sig, 1.0);

  if (!is_simple_bivector(bb, tol)) {
    const BivectorSplit split = bivector_split(bb, tol);
    Multivector result = Multivector::scalar(sig, 1.0);
    for (const SimpleFactor& f : split.factors) result = result * exp_bivector(f.bivector, tol);
    return result;
  }

  const double lambda = (bb * bb).scalar_part().real();
  if (std::abs(lambda) <= tol * n2) return bb + 1.0;
  const double theta = std::sqrt(std::abs(lambda));
  if (lambda < 0.0) return bb * (std::sin(theta) / theta) + std::cos(theta);
  return bb * (std::sinh(theta) / theta) + std::cosh(theta);
}

}  // namespace cliff
