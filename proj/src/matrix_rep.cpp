#include "cliff/matrix_rep.hpp"

#include <vector>

#include "cliff/error.hpp"

namespace cliff {
namespace {

struct SignedBlade {
  BladeMask mask;
  int sign;  // 0 when annihilated by a null vector
};

// e_bit * (e_j1 e_j2 ... ) with j ascending: move e_bit left-to-right past
// every index below it, then either merge (square by the metric) or insert.
SignedBlade vector_times_blade(const Signature& sig, int bit, BladeMask blade) {
  int below = 0;
  for (int j = 0; j < bit; ++j)
    if (blade & (BladeMask{1} << j)) ++below;
  int sign = (below % 2) ? -1 : 1;
  const BladeMask b = BladeMask{1} << bit;
  if (blade & b) return {blade & ~b, sign * sig.metric(bit)};
  return {blade | b, sign};
}

}  // namespace

Eigen::MatrixXcd matrix_rep(const Multivector& a) {
  const Signature& sig = a.signature();
  if (sig.dim() > kMaxOracleDimension)
    throw Error(ErrorKind::Unsupported, "matrix representation limited to d <= 8");
  const int n = static_cast<int>(sig.blade_count());
  Eigen::MatrixXcd rep = Eigen::MatrixXcd::Zero(n, n);
  std::vector<int> bits;
  for (BladeMask m = 0; m < static_cast<BladeMask>(n); ++m) {
    const Complex coef = a[m];
    if (coef == 0.0) continue;
    bits.clear();
    for (int b = 0; b < sig.dim(); ++b)
      if (m & (BladeMask{1} << b)) bits.push_back(b);
    // e_{i1} e_{i2} ... e_{ik} acting on e_J: apply e_{ik} first.
    for (BladeMask col = 0; col < static_cast<BladeMask>(n); ++col) {
      SignedBlade cur{col, 1};
      for (auto it = bits.rbegin(); it != bits.rend() && cur.sign != 0; ++it) {
        const SignedBlade next = vector_times_blade(sig, *it, cur.mask);
        cur = {next.mask, cur.sign * next.sign};
      }
      if (cur.sign != 0) rep(cur.mask, col) += static_cast<double>(cur.sign) * coef;
    }
  }
  return rep;
}

Multivector from_matrix_rep(const Signature& sig, const Eigen::MatrixXcd& m) {
  if (m.rows() != static_cast<Eigen::Index>(sig.blade_count()))
    throw Error(ErrorKind::Domain, "matrix size does not match signature");
  Multivector out(sig, Field::Complex);
  for (BladeMask k = 0; k < sig.blade_count(); ++k) out.set(k, m(k, 0));
  return out;
}

}  // namespace cliff
