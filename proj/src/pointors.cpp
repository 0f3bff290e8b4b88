#include "cliff/pointors.hpp"

#include <cmath>
#include <numbers>

#include "cliff/algebra.hpp"
#include "cliff/decomposition.hpp"
#include "cliff/error.hpp"

namespace cliff {
namespace {

Multivector normalized(const Multivector& v) {
  return v / std::sqrt(std::abs(vector_dot(v, v)));
}

double rel_norm(const Multivector& diff, double scale) { return diff.norm() / std::max(1.0, scale); }

}  // namespace

Multivector Pointor::assemble() const {
  Multivector out = rotor * rho_plus;
  if (reflector) out += *reflector * rho_minus;
  return out;
}

Pointor make_pointor(double rho_plus, const Multivector& r, double rho_minus,
                     const std::optional<Multivector>& p, const PointFrame& frame, double tol) {
  const auto rc = certify_versor(r, 1e-9);
  if (!rc || rc->parity != Parity::Even)
    throw Error(ErrorKind::Domain, "R must be an even versor");
  if (std::abs(rc->norm - 1.0) > 1e-9) throw Error(ErrorKind::Domain, "R must satisfy R R~ = 1");
  if (subalgebra_residual(r, frame) > tol)
    throw Error(ErrorKind::Domain, "R lies outside the frame's subalgebra");
  if (p) {
    const auto pc = certify_versor(*p, 1e-9);
    if (!pc || pc->parity != Parity::Odd) throw Error(ErrorKind::Domain, "P must be an odd versor");
    if (std::abs(std::abs(pc->norm) - 1.0) > 1e-9)
      throw Error(ErrorKind::Domain, "P must satisfy P P~ = +-1");
    if (subalgebra_residual(*p, frame) > tol)
      throw Error(ErrorKind::Domain, "P lies outside the frame's subalgebra");
  } else if (rho_minus != 0.0) {
    throw Error(ErrorKind::Domain, "rho_minus is nonzero but no odd versor was given");
  }
  Pointor out{rho_plus, r, rho_minus, p, frame};
  const PointorCheck check = is_pointor(out.assemble(), frame.point, std::max(tol, 1e-9));
  if (!check.ok)
    throw Error(ErrorKind::Domain, "rho+ R + rho- P does not preserve the point (residual " +
                                       std::to_string(check.residual) + ")");
  return out;
}

PointorCheck is_pointor(const Multivector& psi, const Multivector& o, double tol) {
  PointorCheck out;
  const double scale = psi.norm() * psi.norm() * o.norm();
  const Multivector image = psi * o * reverse(psi);
  const Complex rho = scalar_product(image, versor_inverse(o));
  out.rho = rho.real();
  out.residual = scale == 0.0 ? 0.0 : (image - o * rho).norm() / scale;
  out.ok = out.residual <= tol && std::abs(rho.imag()) <= tol * std::max(1.0, scale);
  return out;
}

std::pair<Multivector, Multivector> pointor_weyl_split(const Multivector& psi, const PointFrame& f,
                                                       double tol) {
  return chiral_split(psi, f, tol);
}

Multivector reference_state(const PointFrame& f, const LabelVector& s) {
  if (static_cast<int>(s.size()) != f.k())
    throw Error(ErrorKind::Domain, "label length must equal the number of Cartan bivectors");
  Multivector out = Multivector::scalar(f.point.signature(), 1.0);
  int flips = 0;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (s[j] == -1) {
      out = out * normalized(f.vectors[2 * j]);
      ++flips;
    }
  if (f.extra && flips % 2 == 1) out = out * normalized(*f.extra);
  return out;
}

std::vector<Multivector> unit_cartan(const PointFrame& f) {
  std::vector<Multivector> out;
  for (const auto& b : f.cartan) out.push_back(b / std::sqrt(std::abs((b * b).scalar_part().real())));
  return out;
}

namespace {

Multivector plane_exponential(const std::vector<Multivector>& bhat, const std::vector<double>& thetas) {
  Multivector out = Multivector::scalar(bhat.front().signature(), 1.0);
  for (std::size_t j = 0; j < bhat.size(); ++j) out = out * exp_bivector(bhat[j] * thetas[j]);
  return out;
}

}  // namespace

Multivector compose_label_sum(const PointFrame& f, const std::vector<LabelTerm>& terms) {
  const auto bhat = unit_cartan(f);
  Multivector out(f.point.signature());
  for (const auto& t : terms) {
    if (t.thetas.size() != bhat.size())
      throw Error(ErrorKind::Domain, "one angle per Cartan bivector is required");
    out += plane_exponential(bhat, t.thetas) * reference_state(f, t.label) * t.rho;
  }
  return out;
}

std::vector<LabeledPointorComponent> pointor_label_decompose(const Multivector& psi,
                                                             const PointFrame& f, double tol) {
  if (psi.is_complex()) throw Error(ErrorKind::Domain, "pointors are real");
  const auto bhat = unit_cartan(f);
  std::vector<LabeledPointorComponent> out;
  for (auto& [label, part] : label_decompose(psi, f, tol)) {
    LabeledPointorComponent c;
    c.label = label;
    c.component = part;
    c.ref = reference_state(f, label);
    c.thetas.assign(bhat.size(), 0.0);
    c.residual = 1.0;
    const Multivector x = part * versor_inverse(c.ref);
    const double n = (x * reverse(x)).scalar_part().real();
    if (n > 0) {
      c.rho = std::sqrt(n);
      const Multivector y = x / c.rho;
      try {
        if (approx_equal(y, Multivector::scalar(y.signature(), -1.0), 1e-9) && !bhat.empty() &&
            (bhat.front() * bhat.front()).scalar_part().real() < 0) {
          c.thetas.front() = std::numbers::pi;
        } else {
          const Multivector log = rotor_log(y, 1e-9);
          for (std::size_t j = 0; j < bhat.size(); ++j)
            c.thetas[j] = scalar_product(log, versor_inverse(bhat[j])).real();
        }
        c.residual = rel_norm(plane_exponential(bhat, c.thetas) * c.ref * c.rho - part, part.norm());
      } catch (const Error&) {
        // Not of the form rho exp(sum theta b) ref: residual stays at 1.
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

ChiralNorms chiral_norms(const Multivector& psi, const PointFrame& f, double tol) {
  ChiralNorms out;
  std::tie(out.left, out.right) = chiral_split(psi, f, tol);
  out.left_norm = out.left * reverse(out.left);
  out.right_norm = out.right * reverse(out.right);
  const double scale = std::max(1.0, psi.norm() * psi.norm());
  out.residual = std::max(off_grade_norm(out.left_norm, 0), off_grade_norm(out.right_norm, 0)) / scale;
  return out;
}

ChiralNormVerdict chiral_norm_check(const Multivector& psi, const PointFrame& f, double tol) {
  if (f.k() >= 3)
    throw Error(ErrorKind::Unsupported,
                "chiral norms are only guaranteed real for fewer than three planes; use is_pointor instead");
  const ChiralNorms n = chiral_norms(psi, f, tol);
  ChiralNormVerdict out;
  out.residual = n.residual;
  out.holds = n.residual <= std::max(tol, 1e-9);
  if (!out.holds) return out;
  const double nl = n.left_norm.scalar_part().real(), nr = n.right_norm.scalar_part().real();
  const double floor = tol * std::max(1.0, psi.norm() * psi.norm());
  if (std::abs(nl) > floor) {
    out.rho_left = std::sqrt(std::abs(nl));
    out.left_versor = n.left / out.rho_left;
  }
  if (std::abs(nr) > floor) {
    out.rho_right = std::sqrt(std::abs(nr));
    out.right_versor = n.right / out.rho_right;
  }
  return out;
}

Multivector to_algebraic_spinor(const Multivector& psi, const PointFrame& f, const NullBasis& nb,
                                double tol) {
  if (nb.k() != f.k()) throw Error(ErrorKind::Domain, "null basis and frame have different sizes");
  for (int j = 0; j < f.k(); ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (relative_difference(nb.cartan[idx], f.cartan[idx]) > 1e-9)
      throw Error(ErrorKind::Domain, "null basis was not built from this frame");
  }
  if (subalgebra_residual(psi, f) > tol)
    throw Error(ErrorKind::Domain, "element lies outside the frame's subalgebra");
  return psi * master_idempotent(nb);
}

HestenesCheck hestenes_check(const Multivector& phi, const Multivector& x, double tol) {
  if (!is_pure_grade(x, 1, tol)) throw Error(ErrorKind::Domain, "x must be a vector");
  const double xx = vector_dot(x, x);
  if (std::abs(xx) <= tol * x.norm() * x.norm()) throw Error(ErrorKind::Domain, "x must be invertible");
  HestenesCheck out;
  const Multivector image = phi * x * reverse(phi);
  const double scale = std::max(1e-300, phi.norm() * phi.norm() * x.norm());
  out.residual = off_grade_norm(image, 1) / scale;
  if (out.residual > tol) return out;
  const Multivector v = grade_select(image, 1);
  const double ratio = vector_dot(v, v) / xx;
  if (ratio < -tol) {
    out.residual = std::abs(ratio);
    return out;
  }
  out.rho = std::sqrt(std::max(ratio, 0.0));
  const double norm = (phi * reverse(phi)).scalar_part().real();
  if (norm < 0) out.rho = -out.rho;
  if (out.rho == 0.0) return out;
  out.y = v / out.rho;
  out.ok = true;
  return out;
}

}  // namespace cliff
