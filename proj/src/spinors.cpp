#include "cliff/spinors.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "linalg.hpp"

namespace cliff {
namespace {

const Complex kI{0.0, 1.0};

Multivector anticommutator(const Multivector& a, const Multivector& b) { return a * b + b * a; }

Eigen::MatrixXcd coefficient_matrix(const std::vector<Multivector>& elements) {
  if (elements.empty()) return {};
  const auto n = static_cast<Eigen::Index>(elements.front().size());
  Eigen::MatrixXcd m(n, static_cast<Eigen::Index>(elements.size()));
  for (std::size_t c = 0; c < elements.size(); ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      m(r, static_cast<Eigen::Index>(c)) = elements[c][static_cast<BladeMask>(r)];
  return m;
}

}  // namespace

NullPair null_pair(const Multivector& u, const Multivector& v, double tol) {
  const double uu = vector_dot(u, u), vv = vector_dot(v, v);
  const double scale = u.norm() * v.norm();
  if (std::abs(uu) <= tol * u.norm() * u.norm() || std::abs(vv) <= tol * v.norm() * v.norm())
    throw Error(ErrorKind::Domain, "null pair needs two non-null vectors");
  if (std::abs(vector_dot(u, v)) > 1e-9 * scale)
    throw Error(ErrorKind::Domain, "null pair needs orthogonal vectors");
  const Multivector b = u * v;
  const double lambda = (b * b).scalar_part().real();
  // Rescale v so that u^2 = +-v^2, then w = (u + c v)/2 is null.
  const Multivector vs = v * std::sqrt(std::abs(uu / vv));
  NullPair out;
  if (lambda > 0) {
    const double m = std::sqrt(lambda);
    out.mu = m;
    out.plus = (u - vs) * 0.5;
    out.minus = (u + vs) * 0.5;
  } else {
    const double m = std::sqrt(-lambda);
    out.mu = Complex(0.0, m);
    out.plus = (u.to_complex() + vs * kI) * 0.5;
    out.minus = (u.to_complex() - vs * kI) * 0.5;
  }
  // Orient so that w+ carries +mu.
  const Multivector image = commutator_product(b, out.plus);
  if (relative_difference(image, out.plus * out.mu) > 1e-8) std::swap(out.plus, out.minus);
  if (relative_difference(commutator_product(b, out.plus), out.plus * out.mu) > 1e-8)
    throw Error(ErrorKind::Decomposition, "failed to orient null eigenvectors");
  // Normalize {w+, w-} = 1 so that w+ w- is idempotent.
  const Complex s = anticommutator(out.plus, out.minus).scalar_part();
  out.minus = out.minus * (1.0 / s);
  return out;
}

NullEigenvectors null_eigenvectors(const SimpleFactor& f, double tol) {
  const Multivector& b = f.bivector;
  const Signature& sig = b.signature();
  if (!is_pure_grade(b, 2, tol) || !is_simple_bivector(b, tol) || b.norm() == 0.0)
    throw Error(ErrorKind::Domain, "null_eigenvectors expects a nonzero simple bivector");
  const Eigen::MatrixXd plane = detail::outer_support(b);
  if (plane.cols() != 2) throw Error(ErrorKind::Domain, "bivector is not a 2-blade");
  const Eigen::VectorXd g = detail::metric_diagonal(sig);
  if (f.kind == FactorKind::Translation) {
    // The null direction of the plane: kernel of the metric restricted to it.
    const Eigen::MatrixXd gram = plane.transpose() * g.asDiagonal() * plane;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    const Eigen::VectorXd x = plane * es.eigenvectors().col(0);
    const Eigen::VectorXd y = plane * es.eigenvectors().col(1);
    const Eigen::VectorXd null_dir = std::abs(es.eigenvalues()[0]) <= std::abs(es.eigenvalues()[1]) ? x : y;
    return HorizonVector{detail::from_coords(sig, null_dir / null_dir.norm())};
  }
  const Eigen::VectorXd x = detail::pick_non_null(g, plane);
  if (x.squaredNorm() == 0.0) throw Error(ErrorKind::Domain, "plane has no non-null vector");
  const Multivector u = detail::from_coords(sig, x / std::sqrt(std::abs(detail::mdot(g, x, x))));
  const Multivector v = grade_select(versor_inverse(u, tol) * b, 1);
  return null_pair(u, v, tol);
}

NullBasis null_basis(const PointFrame& f, double tol) {
  NullBasis nb;
  for (int j = 0; j < f.k(); ++j) {
    const auto idx = static_cast<std::size_t>(2 * j);
    const NullPair p = null_pair(f.vectors[idx], f.vectors[idx + 1], tol);
    nb.plus.push_back(p.plus);
    nb.minus.push_back(p.minus);
    nb.mu.push_back(p.mu);
    nb.cartan.push_back(f.cartan[static_cast<std::size_t>(j)]);
    nb.beta.push_back(f.cartan[static_cast<std::size_t>(j)] * (1.0 / p.mu));
  }
  nb.extra = f.extra;
  return nb;
}

Multivector master_idempotent(const NullBasis& nb) {
  if (nb.k() == 0) throw Error(ErrorKind::Domain, "null basis is empty");
  Multivector out = Multivector::scalar(nb.plus.front().signature(), Complex(1.0, 0.0));
  for (int j = 0; j < nb.k(); ++j) out = out * nb.plus[static_cast<std::size_t>(j)] * nb.minus[static_cast<std::size_t>(j)];
  return out;
}

SpinorState basis_spinor(const NullBasis& nb, const LabelVector& s) {
  if (static_cast<int>(s.size()) != nb.k())
    throw Error(ErrorKind::Domain, "label length must equal the number of null pairs");
  Multivector lower = Multivector::scalar(nb.plus.front().signature(), Complex(1.0, 0.0));
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == -1)
      lower = lower * nb.minus[j];
    else if (s[j] != 1)
      throw Error(ErrorKind::Domain, "label entries must be +1 or -1");
  }
  return {lower * master_idempotent(nb), s};
}

Multivector chiral_operator(const NullBasis& nb) {
  if (nb.k() == 0) throw Error(ErrorKind::Domain, "null basis is empty");
  Multivector out = Multivector::scalar(nb.plus.front().signature(), Complex(1.0, 0.0));
  for (const auto& b : nb.beta) out = out * b;
  return out;
}

Multivector weyl_project(const Multivector& eta, const NullBasis& nb, WeylSide side) {
  const Multivector gamma_eta = chiral_operator(nb) * eta;
  return side == WeylSide::Left ? (eta + gamma_eta) * 0.5 : (eta - gamma_eta) * 0.5;
}

std::map<LabelVector, Complex> spinor_expand(const Multivector& eta, const NullBasis& nb,
                                             double tol) {
  const auto labels = all_labels(nb.k());
  std::vector<Multivector> states;
  for (const auto& s : labels) states.push_back(basis_spinor(nb, s).value);
  const Eigen::MatrixXcd a = coefficient_matrix(states);
  const Eigen::MatrixXcd rhs = coefficient_matrix({eta});
  const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(rhs.col(0));
  const double res = (a * c - rhs.col(0)).norm();
  if (res > tol * std::max(1.0, eta.norm()))
    throw Error(ErrorKind::Domain,
                "element is outside the spinor ideal (residual " + std::to_string(res) + ")");
  std::map<LabelVector, Complex> out;
  for (std::size_t i = 0; i < labels.size(); ++i) out.emplace(labels[i], c[static_cast<Eigen::Index>(i)]);
  return out;
}

int complex_rank(const std::vector<Multivector>& elements, double tol) {
  if (elements.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coefficient_matrix(elements));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > tol * sv[0]) ++rank;
  return rank;
}

}  // namespace cliff
