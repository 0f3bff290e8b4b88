#pragma once

#include <cstdint>
#include <string>

namespace cliff {

using BladeMask = std::uint32_t;

inline constexpr int kMaxDimension = 12;
inline constexpr double kDefaultTolerance = 1e-9;

// Metric signature Cl(p,q,r). Basis vectors are stored as bit positions:
// the r null vectors occupy the lowest bits, then p vectors squaring to +1,
// then q vectors squaring to -1.
//
// Text labels: with r == 1 the null vector is e0 and the rest are e1..e(p+q);
// otherwise labels run 1..d in bit order.
class Signature {
 public:
  Signature() = default;
  Signature(int p, int q, int r = 0);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int r() const noexcept { return r_; }
  int dim() const noexcept { return p_ + q_ + r_; }
  std::size_t blade_count() const noexcept { return std::size_t{1} << dim(); }

  // +1, -1 or 0 for the basis vector at bit position `bit`.
  int metric(int bit) const noexcept;
  BladeMask null_mask() const noexcept { return null_mask_; }
  BladeMask negative_mask() const noexcept { return negative_mask_; }
  BladeMask full_mask() const noexcept { return static_cast<BladeMask>(blade_count() - 1); }

  int label_of(int bit) const noexcept { return r_ == 1 ? bit : bit + 1; }
  // Returns -1 when the label does not name a basis vector.
  int bit_of(int label) const noexcept;

  bool euclidean() const noexcept { return q_ == 0 && r_ == 0; }
  bool degenerate() const noexcept { return r_ > 0; }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_ = 0, q_ = 0, r_ = 0;
  BladeMask null_mask_ = 0, negative_mask_ = 0;
};

// Sign of the product of two basis blades (reordering parity times metric
// squares of shared vectors). Zero when a shared vector is null.
inline int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) noexcept {
  const BladeMask common = a & b;
  if (common & sig.null_mask()) return 0;
  int swaps = __builtin_popcount(common & sig.negative_mask());
  for (BladeMask x = a >> 1; x != 0; x >>= 1) swaps += __builtin_popcount(x & b);
  return (swaps & 1) ? -1 : 1;
}

inline int grade_of(BladeMask m) noexcept { return __builtin_popcount(m); }

}  // namespace cliff
