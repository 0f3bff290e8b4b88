#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cliff::detail {

Eigen::VectorXd coords(const Multivector& v) {
  const Signature& sig = v.signature();
  Eigen::VectorXd x(sig.dim());
  for (int b = 0; b < sig.dim(); ++b) x[b] = v.real_at(BladeMask{1} << b);
  return x;
}

Multivector from_coords(const Signature& sig, const Eigen::VectorXd& x) {
  Multivector v(sig);
  for (int b = 0; b < sig.dim(); ++b) v.set(BladeMask{1} << b, x[b]);
  return v;
}

Eigen::VectorXd metric_diagonal(const Signature& sig) {
  Eigen::VectorXd g(sig.dim());
  for (int b = 0; b < sig.dim(); ++b) g[b] = sig.metric(b);
  return g;
}

double mdot(const Eigen::VectorXd& g, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  return (g.array() * x.array() * y.array()).sum();
}

Eigen::MatrixXd orthonormal_span(const Eigen::MatrixXd& columns, double rel_tol, double abs_tol) {
  if (columns.cols() == 0) return Eigen::MatrixXd(columns.rows(), 0);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(columns);
  const double largest = std::abs(qr.matrixQR()(0, 0));
  const double cut = std::max(rel_tol * largest, abs_tol);
  if (largest <= cut) return Eigen::MatrixXd(columns.rows(), 0);
  int rank = 0;
  const int lim = static_cast<int>(std::min(columns.rows(), columns.cols()));
  while (rank < lim && std::abs(qr.matrixQR()(rank, rank)) > cut) ++rank;
  Eigen::MatrixXd q = qr.householderQ();
  return q.leftCols(rank);
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(rel_tol);
  if (lu.dimensionOfKernel() == 0) return Eigen::MatrixXd(m.cols(), 0);
  return orthonormal_span(lu.kernel());
}

Eigen::MatrixXd outer_support(const Multivector& blade) {
  const Signature& sig = blade.signature();
  const Multivector re = blade.real_part();
  const auto n = static_cast<Eigen::Index>(sig.blade_count());
  Eigen::MatrixXd m(n, sig.dim());
  for (int i = 0; i < sig.dim(); ++i) {
    const Multivector w = Multivector::basis_vector(sig, i) ^ re;
    for (Eigen::Index k = 0; k < n; ++k) m(k, i) = w.real_at(static_cast<BladeMask>(k));
  }
  return null_space(m);
}

std::vector<RealEigenGroup> real_eigen_groups(const Eigen::MatrixXd& m, bool symmetric,
                                              double group_tol, bool* complex_found) {
  const int n = static_cast<int>(m.rows());
  std::vector<double> values;
  std::vector<Eigen::VectorXd> vectors;
  if (complex_found) *complex_found = false;
  if (symmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
    for (int i = 0; i < n; ++i) {
      values.push_back(es.eigenvalues()[i]);
      vectors.push_back(es.eigenvectors().col(i));
    }
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    double scale = 1.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(es.eigenvalues()[i]));
    for (int i = 0; i < n; ++i) {
      const auto lambda = es.eigenvalues()[i];
      if (std::abs(lambda.imag()) > 1e-7 * scale) {
        if (complex_found) *complex_found = true;
        continue;
      }
      // A repeated real eigenvalue can come back as a conjugate pair with a
      // round-off imaginary part; both halves of its vector span the space.
      values.push_back(lambda.real());
      vectors.push_back(es.eigenvectors().col(i).real());
      if (lambda.imag() != 0.0) {
        values.push_back(lambda.real());
        vectors.push_back(es.eigenvectors().col(i).imag());
      }
    }
  }
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));

  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });

  std::vector<RealEigenGroup> groups;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < order.size() && values[order[j]] - values[order[i]] <= group_tol * scale)
      sum += values[order[j++]];
    Eigen::MatrixXd cols(n, static_cast<Eigen::Index>(j - i));
    for (std::size_t k = i; k < j; ++k) cols.col(static_cast<Eigen::Index>(k - i)) = vectors[order[k]];
    groups.push_back({sum / static_cast<double>(j - i), orthonormal_span(cols, 1e-6)});
    i = j;
  }
  return groups;
}

Eigen::VectorXd pick_non_null(const Eigen::VectorXd& g, const Eigen::MatrixXd& basis,
                              bool prefer_high) {
  const int n = static_cast<int>(basis.rows());
  Eigen::VectorXd best = Eigen::VectorXd::Zero(n);
  if (basis.cols() == 0) return best;
  // The largest attainable |x.x| / |x|^2 is the extreme eigenvalue of the
  // restricted Gram matrix.
  const Eigen::MatrixXd gram = basis.transpose() * g.asDiagonal() * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  Eigen::Index top = 0;
  es.eigenvalues().cwiseAbs().maxCoeff(&top);
  const double optimum = std::abs(es.eigenvalues()[top]);
  if (optimum < 1e-6) return best;

  // Prefer a projected basis vector when it is (nearly) optimal.
  double best_score = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd x = basis * basis.row(i).transpose();
    const double nn = x.squaredNorm();
    if (nn < 1e-20) continue;
    const double score = std::abs(mdot(g, x, x)) / nn;
    if (score < (1.0 - 1e-9) * optimum) continue;
    if (best.squaredNorm() == 0.0 || prefer_high || score > best_score + 1e-12) {
      best = x;
      best_score = score;
    }
  }
  if (best.squaredNorm() == 0.0) {
    best = basis * es.eigenvectors().col(top);
    Eigen::Index lead = 0;
    best.cwiseAbs().maxCoeff(&lead);
    if (best[lead] < 0) best = -best;
  }
  return best / best.norm();
}

Eigen::MatrixXd remove_directions(const Eigen::VectorXd& g, const Eigen::MatrixXd& basis,
                                  const std::vector<Eigen::VectorXd>& dirs) {
  Eigen::MatrixXd out = basis;
  for (int c = 0; c < out.cols(); ++c) {
    Eigen::VectorXd x = out.col(c);
    for (const auto& d : dirs) x -= (mdot(g, x, d) / mdot(g, d, d)) * d;
    out.col(c) = x;
  }
  return orthonormal_span(out, 1e-6, 1e-6);
}

}  // namespace cliff::detail
