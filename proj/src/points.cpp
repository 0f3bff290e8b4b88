#include "cliff/points.hpp"

#include <algorithm>
#include <cmath>

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "linalg.hpp"

namespace cliff {

std::vector<LabelVector> all_labels(int k) {
  std::vector<LabelVector> out;
  for (unsigned bits = 0; bits < (1u << k); ++bits) {
    LabelVector s(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) s[static_cast<std::size_t>(j)] = (bits >> (k - 1 - j)) & 1u ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::string to_string(const LabelVector& s) {
  std::string out = "(";
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j) out += ',';
    out += s[j] > 0 ? '+' : '-';
  }
  return out + ")";
}

double PointFrame::invariant_residual() const {
  const double on = std::max(1.0, point.norm());
  Multivector prod = Multivector::scalar(point.signature(), 1.0);
  for (const auto& v : vectors) prod = prod * v;
  double worst = (prod - point).norm() / on;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      worst = std::max(worst, std::abs(vector_dot(vectors[i], vectors[j])) /
                                  (vectors[i].norm() * vectors[j].norm()));
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    const double bi = std::max(1.0, cartan[i].norm());
    worst = std::max(worst, (cartan[i] ^ cartan[i]).norm() / (bi * bi));
    for (std::size_t j = i + 1; j < cartan.size(); ++j)
      worst = std::max(worst, commutator_product(cartan[i], cartan[j]).norm() /
                                  (bi * std::max(1.0, cartan[j].norm())));
    if (extra)
      worst = std::max(worst, commutator_product(cartan[i], *extra).norm() /
                                  (bi * std::max(1.0, extra->norm())));
  }
  return worst;
}

PointFrame frame_from_vectors(std::vector<Multivector> vectors) {
  if (vectors.empty()) throw Error(ErrorKind::Domain, "a frame needs at least one vector");
  PointFrame f;
  f.point = Multivector::scalar(vectors.front().signature(), 1.0);
  for (const auto& v : vectors) f.point = f.point * v;
  for (std::size_t j = 0; j + 1 < vectors.size(); j += 2) f.cartan.push_back(vectors[j] * vectors[j + 1]);
  if (vectors.size() % 2 == 1) f.extra = vectors.back();
  f.vectors = std::move(vectors);
  return f;
}

PointFrame factor_point(const Multivector& o, double tol) {
  const Signature& sig = o.signature();
  const int m = sig.dim() - sig.r();
  if (o.is_complex() || m == 0 || !is_pure_grade(o, m, tol) || o.norm() == 0.0)
    throw Error(ErrorKind::Domain, "point must be a real blade of grade " + std::to_string(m));
  const Multivector blade = grade_select(o, m);
  Eigen::MatrixXd support = detail::outer_support(blade);
  if (support.cols() != m) throw Error(ErrorKind::Domain, "point is not a blade");

  const Eigen::VectorXd g = detail::metric_diagonal(sig);
  std::vector<Multivector> vectors;
  while (support.cols() > 0) {
    Eigen::VectorXd x = detail::pick_non_null(g, support);
    if (x.squaredNorm() == 0.0) throw Error(ErrorKind::Domain, "point is a null blade");
    x /= std::sqrt(std::abs(detail::mdot(g, x, x)));
    vectors.push_back(detail::from_coords(sig, x));
    support = detail::remove_directions(g, support, {x});
  }
  if (static_cast<int>(vectors.size()) != m) throw Error(ErrorKind::Domain, "point is not a blade");

  Multivector unit = Multivector::scalar(sig, 1.0);
  for (const auto& v : vectors) unit = unit * v;
  vectors.front() *= (blade * versor_inverse(unit, tol)).scalar_part().real();
  PointFrame f = frame_from_vectors(std::move(vectors));
  if (relative_difference(f.point, blade) > 1e-8)
    throw Error(ErrorKind::Decomposition, "blade factorization does not reproduce the point");
  f.point = blade;
  return f;
}

PointFrame gauge_frame(const PointFrame& f, const Multivector& g, double tol) {
  const auto cert = certify_versor(g, 1e-9);
  if (!cert || cert->parity != Parity::Even || std::abs(cert->norm - 1.0) > 1e-9)
    throw Error(ErrorKind::Domain, "gauge element must be a normalized rotor (even, G~G = 1)");
  const Multivector grev = reverse(g);
  if (relative_difference(g * f.point * grev, f.point) > std::max(tol, 1e-9))
    throw Error(ErrorKind::Domain, "gauge element moves the point");
  std::vector<Multivector> vectors;
  for (const auto& v : f.vectors) vectors.push_back(grade_select(g * v * grev, 1));
  PointFrame out = frame_from_vectors(std::move(vectors));
  out.point = f.point;
  return out;
}

double subalgebra_residual(const Multivector& zeta, const PointFrame& f) {
  const Signature& sig = zeta.signature();
  const int m = f.grade();
  if (m == sig.dim()) return 0.0;
  Multivector proj(sig, zeta.field());
  for (unsigned subset = 0; subset < (1u << m); ++subset) {
    Multivector va = Multivector::scalar(sig, 1.0);
    for (int i = 0; i < m; ++i)
      if (subset >> i & 1u) va = va * f.vectors[static_cast<std::size_t>(i)];
    proj += va * scalar_product(zeta, versor_inverse(va));
  }
  return (zeta - proj).norm() / std::max(1.0, zeta.norm());
}

namespace {

void require_subalgebra(const Multivector& zeta, const PointFrame& f, double tol) {
  const double res = subalgebra_residual(zeta, f);
  if (res > tol)
    throw Error(ErrorKind::Domain,
                "element lies outside the frame's tangent subalgebra (residual " + std::to_string(res) + ")");
}

Multivector project_unchecked(Multivector zeta, const std::vector<Multivector>& cartan,
                              const std::vector<Multivector>& inverses, const LabelVector& s) {
  for (std::size_t j = 0; j < cartan.size(); ++j)
    zeta = (zeta + cartan[j] * zeta * inverses[j] * static_cast<double>(s[j])) * 0.5;
  return zeta;
}

std::vector<Multivector> cartan_inverses(const PointFrame& f, double tol) {
  std::vector<Multivector> out;
  for (const auto& b : f.cartan) out.push_back(versor_inverse(b, tol));
  return out;
}

}  // namespace

Multivector label_project(const Multivector& zeta, const PointFrame& f, const LabelVector& s,
                          double tol) {
  if (static_cast<int>(s.size()) != f.k())
    throw Error(ErrorKind::Domain, "label length must equal the number of Cartan bivectors");
  for (int sj : s)
    if (sj != 1 && sj != -1) throw Error(ErrorKind::Domain, "label entries must be +1 or -1");
  require_subalgebra(zeta, f, tol);
  return project_unchecked(zeta, f.cartan, cartan_inverses(f, tol), s);
}

std::map<LabelVector, Multivector> label_decompose(const Multivector& zeta, const PointFrame& f,
                                                   double tol) {
  require_subalgebra(zeta, f, tol);
  const auto inverses = cartan_inverses(f, tol);
  const double floor = tol * std::max(1.0, zeta.norm());
  std::map<LabelVector, Multivector> out;
  for (const auto& s : all_labels(f.k())) {
    Multivector part = project_unchecked(zeta, f.cartan, inverses, s);
    if (part.norm() > floor) out.emplace(s, std::move(part));
  }
  return out;
}

std::pair<Multivector, Multivector> chiral_split(const Multivector& zeta, const PointFrame& f,
                                                 double tol) {
  require_subalgebra(zeta, f, tol);
  const Signature& sig = zeta.signature();
  Multivector c = Multivector::scalar(sig, 1.0);
  if (f.grade() % 2 == 0) {
    c = f.point;
  } else {
    for (const auto& b : f.cartan) c = c * b;
  }
  const Multivector conj = c * zeta * versor_inverse(c, tol);
  return {(zeta + conj) * 0.5, (zeta - conj) * 0.5};
}

}  // namespace cliff
