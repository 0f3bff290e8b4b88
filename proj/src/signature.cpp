#include "cliff/signature.hpp"

#include "cliff/error.hpp"

namespace cliff {

Signature::Signature(int p, int q, int r) : p_(p), q_(q), r_(r) {
  if (p < 0 || q < 0 || r < 0)
    throw Error(ErrorKind::Domain, "signature counts must be non-negative");
  if (p + q + r > kMaxDimension)
    throw Error(ErrorKind::Unsupported,
                "dimension " + std::to_string(p + q + r) + " exceeds the dense-table limit of " +
                    std::to_string(kMaxDimension));
  for (int b = 0; b < r; ++b) null_mask_ |= BladeMask{1} << b;
  for (int b = r + p; b < r + p + q; ++b) negative_mask_ |= BladeMask{1} << b;
}

int Signature::metric(int bit) const noexcept {
  if (bit < r_) return 0;
  if (bit < r_ + p_) return 1;
  return -1;
}

int Signature::bit_of(int label) const noexcept {
  const int bit = r_ == 1 ? label : label - 1;
  return (bit >= 0 && bit < dim()) ? bit : -1;
}

std::string Signature::to_string() const {
  return "Cl(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(r_) + ")";
}

}  // namespace cliff
