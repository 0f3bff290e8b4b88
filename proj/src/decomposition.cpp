#include "cliff/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "linalg.hpp"

namespace cliff {
namespace {

using detail::coords;
using detail::from_coords;
using detail::mdot;

constexpr double kGroupTol = 1e-9;

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

Multivector unit_vector(const Eigen::VectorXd& g, const Signature& sig, Eigen::VectorXd x) {
  const double n2 = mdot(g, x, x);
  x /= std::sqrt(std::abs(n2));
  return from_coords(sig, x);
}

double scalar_of(const Multivector& m) { return m.scalar_part().real(); }

}  // namespace

const char* to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::Boost: return "boost";
    case FactorKind::Translation: return "translation";
    case FactorKind::Rotation: return "rotation";
  }
  return "?";
}

SimpleFactor make_simple_factor(const Multivector& b, double tol) {
  if (!is_pure_grade(b, 2, tol)) fail(ErrorKind::Domain, "simple factor must be a bivector");
  if (!is_simple_bivector(b, tol)) fail(ErrorKind::Domain, "bivector is not simple (b^b != 0)");
  const double n2 = b.norm() * b.norm();
  const double lambda = scalar_of(b * b);
  FactorKind kind = FactorKind::Translation;
  if (lambda > tol * n2)
    kind = FactorKind::Boost;
  else if (lambda < -tol * n2)
    kind = FactorKind::Rotation;
  return {b, std::abs(lambda) > tol * n2 ? lambda : 0.0, kind};
}

BivectorSplit bivector_split(const Multivector& bivector, double tol) {
  if (bivector.is_complex()) fail(ErrorKind::Domain, "bivector_split expects a real bivector");
  if (!is_pure_grade(bivector, 2, tol)) fail(ErrorKind::Domain, "bivector_split expects a bivector");
  const Multivector b = grade_select(bivector, 2);
  const Signature& sig = b.signature();
  BivectorSplit out;
  const double bn = b.norm();
  if (bn == 0.0) return out;
  if (is_simple_bivector(b, tol)) {
    out.factors.push_back(make_simple_factor(b, tol));
    return out;
  }

  const Eigen::VectorXd g = detail::metric_diagonal(sig);
  const Eigen::MatrixXd adj =
      detail::vector_map_matrix(sig, [&](const Multivector& e) { return commutator_product(b, e); });
  const Eigen::MatrixXd sq = adj * adj;
  bool complex_found = false;
  const auto groups = detail::real_eigen_groups(sq, sig.euclidean(), kGroupTol, &complex_found);
  if (complex_found)
    fail(ErrorKind::Unsupported,
         "bivector has a non-real spectrum; only Euclidean and Lorentzian structures are supported");

  Multivector sum(sig);
  for (const auto& group : groups) {
    if (std::abs(group.value) <= 1e-8 * bn * bn) continue;
    if (group.basis.cols() % 2 != 0)
      fail(ErrorKind::Decomposition, "odd-dimensional invariant subspace in bivector split");
    if (group.basis.cols() > 2) out.degenerate = true;
    Eigen::MatrixXd rest = group.basis;
    while (rest.cols() >= 2) {
      const Eigen::VectorXd u = detail::pick_non_null(g, rest);
      if (u.squaredNorm() == 0.0) fail(ErrorKind::Decomposition, "null invariant plane");
      Eigen::VectorXd v = adj * u;
      v -= (mdot(g, v, u) / mdot(g, u, u)) * u;
      if (std::abs(mdot(g, v, v)) <= 1e-12 * v.squaredNorm() || v.norm() < 1e-12)
        fail(ErrorKind::Decomposition, "degenerate invariant plane");
      const Multivector plane = from_coords(sig, u) ^ from_coords(sig, v);
      const Multivector part = plane * (scalar_of(b * versor_inverse(plane, tol)));
      out.factors.push_back(make_simple_factor(part, 1e-6));
      sum += part;
      rest = detail::remove_directions(g, rest, {u, v});
    }
    if (rest.cols() != 0) fail(ErrorKind::Decomposition, "unpaired direction in bivector split");
  }

  const Multivector remainder = b - sum;
  if (remainder.norm() > tol * std::max(1.0, bn)) {
    if (!is_simple_bivector(remainder, 1e-8))
      fail(ErrorKind::Decomposition, "null part of the bivector is not simple");
    out.factors.push_back(make_simple_factor(remainder, 1e-6));
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const SimpleFactor& a, const SimpleFactor& c) {
                     return std::abs(a.lambda) > std::abs(c.lambda);
                   });
  return out;
}

Multivector InvariantDecomposition::reconstruct() const {
  Multivector out = Multivector::scalar(source.signature(), scale);
  for (const auto& f : factors) out = out * f;
  if (residual_reflection) out = out * *residual_reflection;
  return out;
}

namespace {

// Bireflection in the plane spanned by the unit vectors uc (taken first) and
// the component of T uc orthogonal to it.
Multivector plane_factor(const Signature& sig, const Eigen::VectorXd& g, const Eigen::MatrixXd& t,
                         const Eigen::MatrixXd& plane, Eigen::VectorXd uc, Eigen::VectorXd& vc) {
  uc /= std::sqrt(std::abs(mdot(g, uc, uc)));
  const Eigen::VectorXd tu = t * uc;
  vc = tu - (mdot(g, tu, uc) / mdot(g, uc, uc)) * uc;
  if (vc.norm() <= 1e-6 * tu.norm()) {
    // T = -1 on this plane: any orthogonal partner will do.
    vc = detail::pick_non_null(g, detail::remove_directions(g, plane, {uc}));
  }
  if (vc.squaredNorm() == 0.0 || std::abs(mdot(g, vc, vc)) <= 1e-12 * vc.squaredNorm())
    fail(ErrorKind::Decomposition, "degenerate invariant plane");
  vc /= std::sqrt(std::abs(mdot(g, vc, vc)));

  const double eu = mdot(g, uc, uc) > 0 ? 1.0 : -1.0;
  const double ev = mdot(g, vc, vc) > 0 ? 1.0 : -1.0;
  const Multivector bl = from_coords(sig, uc) * from_coords(sig, vc);
  // T(u) = C u - S eu v  for the rotor  cos/cosh(phi/2) + sin/sinh(phi/2) b
  const double c = mdot(g, tu, uc) / eu;
  const double sn = -mdot(g, tu, vc) / (eu * ev);
  if (eu * ev > 0) {  // b^2 = -1
    const double phi = std::atan2(sn, c);
    return bl * std::sin(phi / 2) + std::cos(phi / 2);
  }
  if (c > 0) {  // b^2 = +1, orthochronous: C = cosh, S = sinh
    const double phi = std::asinh(sn);
    return bl * std::sinh(phi / 2) + std::cosh(phi / 2);
  }
  const double phi = std::asinh(-sn);
  return bl * (bl * std::sinh(phi / 2) + std::cosh(phi / 2));
}

// Decomposes an even versor with U~U != 0 into unit plane factors and a scale.
// Planes are peeled one at a time, the one farthest from the identity first,
// and the map is rebuilt from what remains: a large boost makes the other
// eigenvectors of T + T^{-1} ill-conditioned until it has been divided out.
void decompose_even(const Multivector& u, double tol, InvariantDecomposition& out) {
  const Signature& sig = u.signature();
  const Eigen::VectorXd g = detail::metric_diagonal(sig);
  Multivector rem = u;
  for (int step = 0; step <= sig.dim() / 2; ++step) {
    const Multivector inv = versor_inverse(rem, tol);
    const Eigen::MatrixXd t =
        detail::vector_map_matrix(sig, [&](const Multivector& e) { return rem * e * inv; });
    const Eigen::MatrixXd t_inv =
        detail::vector_map_matrix(sig, [&](const Multivector& e) { return inv * e * rem; });
    bool complex_found = false;
    const auto groups = detail::real_eigen_groups(t + t_inv, sig.euclidean(), kGroupTol, &complex_found);
    if (complex_found) fail(ErrorKind::Unsupported, "versor has a non-real invariant spectrum");

    const detail::RealEigenGroup* pick = nullptr;
    for (const auto& group : groups) {
      if (std::abs(group.value - 2.0) <= 1e-7) continue;  // fixed directions
      if (!pick || std::abs(group.value - 2.0) > std::abs(pick->value - 2.0)) pick = &group;
    }
    if (!pick) break;
    if (pick->basis.cols() % 2 != 0)
      fail(ErrorKind::Decomposition, "odd-dimensional invariant subspace in versor");
    if (pick->basis.cols() > 2) out.degenerate = true;
    const Eigen::VectorXd uc = detail::pick_non_null(g, pick->basis);
    if (uc.squaredNorm() == 0.0) fail(ErrorKind::Decomposition, "null invariant plane");
    Eigen::VectorXd vc;
    const Multivector factor = plane_factor(sig, g, t, pick->basis, uc, vc);
    out.factors.push_back(factor);
    rem = rem * versor_inverse(factor, tol);
  }

  // What is left must be scale * (1 + t) with t a null bivector.
  const double s0 = scalar_of(rem);
  const double rn = rem.norm();
  if (std::abs(s0) <= tol * rn) fail(ErrorKind::Decomposition, "versor remainder has no scalar part");
  const Multivector t2 = grade_select(rem, 2) / s0;
  if ((rem - (t2 + 1.0) * s0).norm() > 1e-8 * rn)
    fail(ErrorKind::Decomposition, "versor remainder is not a simple bireflection");
  const double tn = t2.norm();
  if (tn > tol) {
    // The remainder is a null rotation or translation (t^2 = 0), or a plane
    // turned by too small an angle to separate from the fixed directions.
    // Tiny non-null leftovers are round-off from ill-conditioned planes.
    const bool null = std::abs(scalar_of(t2 * t2)) <= 1e-6 * tn * tn;
    if (null || tn > 1e-7) {
      if (!is_simple_bivector(t2, 1e-8))
        fail(ErrorKind::Decomposition, "versor remainder bivector is not simple");
      out.factors.push_back(t2 + 1.0);
    }
  }
  out.scale = s0;
}

}  // namespace

InvariantDecomposition invariant_decompose(const Multivector& u, double tol) {
  if (u.is_complex()) fail(ErrorKind::Domain, "invariant_decompose expects a real versor");
  const auto cert = certify_versor(u, 1e-7);
  if (!cert) {
    const Multivector n = u * reverse(u);
    if (off_grade_norm(n, 0) <= 1e-7 * std::max(1.0, n.norm()) &&
        std::abs(n.scalar_part()) <= 1e-7 * u.norm() * u.norm())
      fail(ErrorKind::NotInvertible, "null versor cannot be decomposed");
    fail(ErrorKind::Domain, "input is not a versor");
  }
  const Signature& sig = u.signature();
  InvariantDecomposition out;
  out.source = u;

  if (cert->parity == Parity::Even) {
    decompose_even(u, tol, out);
  } else {
    // Residual reflection: real eigenvector of T(x) = -u x u^{-1} for eigenvalue -1.
    const Eigen::VectorXd g = detail::metric_diagonal(sig);
    const Multivector inv = versor_inverse(u, tol);
    const Eigen::MatrixXd t =
        detail::vector_map_matrix(sig, [&](const Multivector& e) { return -(u * e * inv); });
    Eigen::EigenSolver<Eigen::MatrixXd> es(t);
    Eigen::MatrixXd cols(sig.dim(), 0);
    for (int i = 0; i < sig.dim(); ++i) {
      const auto lambda = es.eigenvalues()[i];
      if (std::abs(lambda.imag()) <= 1e-7 && std::abs(lambda.real() + 1.0) <= 1e-6) {
        cols.conservativeResize(Eigen::NoChange, cols.cols() + 2);
        cols.col(cols.cols() - 2) = es.eigenvectors().col(i).real();
        cols.col(cols.cols() - 1) = es.eigenvectors().col(i).imag();
      }
    }
    const Eigen::MatrixXd span = detail::orthonormal_span(cols, 1e-6);
    const Eigen::VectorXd w = detail::pick_non_null(g, span, /*prefer_high=*/true);
    if (w.squaredNorm() == 0.0)
      fail(ErrorKind::Decomposition, "odd versor has no non-null residual reflection");
    const Multivector wv = unit_vector(g, sig, w);
    const Multivector even = u * versor_inverse(wv, tol);
    decompose_even(even, tol, out);
    out.residual_reflection = wv;
  }
  // Prefer a positive scale: -1 is absorbed by the first factor.
  if (out.scale < 0 && !out.factors.empty()) {
    out.factors.front() *= -1.0;
    out.scale = -out.scale;
  }

  if (relative_difference(out.reconstruct(), u) > 1e-7)
    fail(ErrorKind::Decomposition, "invariant decomposition failed to reconstruct the versor");
  return out;
}

Multivector rotor_log(const Multivector& r, double tol) {
  if (r.is_complex()) fail(ErrorKind::Domain, "rotor_log expects a real rotor");
  const Signature& sig = r.signature();
  if (odd_part(r).norm() > tol * r.norm()) fail(ErrorKind::Domain, "rotor_log expects an even element");
  const Multivector n = r * reverse(r);
  if (!approx_equal(n, Multivector::scalar(sig, 1.0), 1e-8))
    fail(ErrorKind::Domain, "rotor_log expects a normalized rotor (R~R = 1)");
  if (approx_equal(r, Multivector::scalar(sig, -1.0), tol))
    fail(ErrorKind::Branch, "log(-1) is ambiguous: the rotation plane is undetermined");

  InvariantDecomposition dec = invariant_decompose(r, tol);
  // A sign may sit on any factor. Boosts and bare scalars need c > 0, so push
  // every sign onto a rotation factor, where it is a half turn.
  bool negative = dec.scale < 0;
  std::optional<std::size_t> rotation;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    Multivector& f = dec.factors[i];
    const Multivector bv = grade_select(f, 2);
    const double bn = bv.norm();
    const bool is_rotation = bn > tol * std::max(1.0, std::abs(scalar_of(f))) &&
                             scalar_of(bv * bv) < -tol * bn * bn;
    if (is_rotation) {
      if (!rotation) rotation = i;
    } else if (scalar_of(f) < 0) {
      f *= -1.0;
      negative = !negative;
    }
  }
  if (negative) {
    if (!rotation) fail(ErrorKind::Branch, "rotor is -1 times a boost or translation; no real logarithm");
    dec.factors[*rotation] *= -1.0;
  }
  Multivector out(sig);
  for (const Multivector& f : dec.factors) {
    const double c = scalar_of(f);
    const Multivector bv = grade_select(f, 2);
    const double bn = bv.norm();
    if (bn <= tol * std::max(1.0, std::abs(c))) continue;
    const double lambda = scalar_of(bv * bv);
    if (lambda < -tol * bn * bn) {
      const double m = std::sqrt(-lambda);
      out += bv * (std::atan2(m, c) / m);
    } else if (lambda > tol * bn * bn) {
      const double m = std::sqrt(lambda);
      if (c <= m) fail(ErrorKind::Branch, "boost factor has no real logarithm");
      out += bv * (std::atanh(m / c) / m);
    } else {
      out += bv / c;
    }
  }
  return out;
}

GaugedPair gauge_pair(const Multivector& u, const Multivector& v, double alpha, double tol) {
  if (!is_pure_grade(u, 1, tol) || !is_pure_grade(v, 1, tol))
    fail(ErrorKind::Domain, "gauge_pair expects two vectors");
  (void)versor_inverse(u, tol);
  (void)versor_inverse(v, tol);
  const Multivector biv = grade_select(v * u, 2);
  const double bn = biv.norm();
  if (bn <= tol * u.norm() * v.norm()) return {u, v, true};
  const double lambda = scalar_of(biv * biv);
  const double scale = std::abs(lambda) > tol * bn * bn ? std::sqrt(std::abs(lambda)) : bn;
  const Multivector gauge = exp_bivector(biv * (alpha / scale), tol);
  const Multivector gauge_rev = reverse(gauge);
  return {grade_select(gauge * u * gauge_rev, 1), grade_select(gauge * v * gauge_rev, 1), false};
}

std::vector<Multivector> orthogonalize_factorization(const std::vector<Multivector>& vectors,
                                                     double tol) {
  if (vectors.empty()) return {};
  const Signature& sig = vectors.front().signature();
  for (const auto& v : vectors) {
    if (!is_pure_grade(v, 1, tol)) fail(ErrorKind::Domain, "factorization entries must be vectors");
    (void)versor_inverse(v, tol);
  }
  bool orthogonal = true;
  for (std::size_t i = 0; i < vectors.size() && orthogonal; ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (std::abs(vector_dot(vectors[i], vectors[j])) > tol * vectors[i].norm() * vectors[j].norm()) {
        orthogonal = false;
        break;
      }
  if (orthogonal) return vectors;

  Multivector product = Multivector::scalar(sig, 1.0);
  for (const auto& v : vectors) product = product * v;
  const InvariantDecomposition dec = invariant_decompose(product, tol);
  if (dec.factors.empty() && !dec.residual_reflection) return vectors;

  const Eigen::VectorXd g = detail::metric_diagonal(sig);
  std::vector<Multivector> out;
  for (const Multivector& f : dec.factors) {
    const Eigen::MatrixXd plane = detail::outer_support(grade_select(f, 2));
    const Eigen::VectorXd x = detail::pick_non_null(g, plane);
    if (x.squaredNorm() == 0.0) fail(ErrorKind::Decomposition, "factor plane has no non-null vector");
    const Multivector xv = unit_vector(g, sig, x);
    const Multivector y = versor_inverse(xv, tol) * f;
    if (!is_pure_grade(y, 1, 1e-8)) fail(ErrorKind::Decomposition, "factor does not split into two vectors");
    out.push_back(xv);
    out.push_back(grade_select(y, 1));
  }
  if (dec.residual_reflection)
    out.push_back(*dec.residual_reflection * dec.scale);
  else
    out.front() *= dec.scale;
  return out;
}

Multivector sqrt_self_reverse(const Multivector& x, double tol) {
  if (x.is_complex()) fail(ErrorKind::Domain, "sqrt_self_reverse expects a real element");
  const Signature& sig = x.signature();
  const double xn = std::max(1.0, x.norm());
  const double x0 = scalar_of(x);
  const Multivector x4 = sig.dim() >= 4 ? grade_select(x, 4) : Multivector(sig);
  if ((x - x4 - Multivector::scalar(sig, x0)).norm() > tol * xn)
    fail(ErrorKind::Domain, "sqrt_self_reverse expects grades {0, 4} only");
  const double n4 = x4.norm();
  if (n4 <= tol * xn) {
    if (x0 <= 0) fail(ErrorKind::Domain, "no real principal square root");
    return Multivector::scalar(sig, std::sqrt(x0));
  }
  const Multivector sq = x4 * x4;
  if (off_grade_norm(sq, 0) > 1e-8 * n4 * n4)
    fail(ErrorKind::Unsupported, "grade-4 part does not square to a scalar");
  const double kappa = scalar_of(sq);
  if (kappa > 1e-10 * n4 * n4) {
    const double m = std::sqrt(kappa);
    if (x0 <= m) fail(ErrorKind::Domain, "no real principal square root (x0 <= |x4|)");
    const double a = std::sqrt(x0 + m), c = std::sqrt(x0 - m);
    return x4 * (0.5 * (a - c) / m) + 0.5 * (a + c);
  }
  if (kappa < -1e-10 * n4 * n4) {
    const double m = std::sqrt(-kappa);
    const Complex z = std::sqrt(Complex(x0, m));
    return x4 * (z.imag() / m) + z.real();
  }
  if (x0 <= 0) fail(ErrorKind::Domain, "no real principal square root");
  const double r = std::sqrt(x0);
  return x4 * (0.5 / r) + r;
}

PolarDecomposition polar_decompose(const Multivector& psi, double tol) {
  if (psi.is_complex()) fail(ErrorKind::Domain, "polar_decompose expects a real element");
  if (odd_part(psi).norm() > tol * psi.norm()) fail(ErrorKind::Domain, "polar_decompose expects an even element");
  const Multivector n = psi * reverse(psi);
  const unsigned grades = grades_present(n, tol * std::max(1.0, n.norm()));
  if (grades & ~0b10001u)
    fail(ErrorKind::Unsupported, "psi~psi has grades beyond {0, 4}; polar form not supported");
  const Multivector s = sqrt_self_reverse(n, tol);
  Multivector r;
  try {
    r = versor_inverse(s, tol) * psi;
  } catch (const Error&) {
    // S = s0 + s4 with s4^2 scalar: S^{-1} = (s0 - s4) / (s0^2 - s4^2)
    const double s0 = scalar_of(s);
    const Multivector s4 = s - Multivector::scalar(psi.signature(), s0);
    const double den = s0 * s0 - scalar_of(s4 * s4);
    if (std::abs(den) <= tol) fail(ErrorKind::NotInvertible, "psi~psi is not invertible");
    r = (Multivector::scalar(psi.signature(), s0) - s4) * psi / den;
  }
  return {s, r};
}

}  // namespace cliff
