#include "cliff/kernel.hpp"

#include <cassert>

namespace cliff::kernel {
namespace {

template <Product Kind>
inline bool admits(BladeMask i, BladeMask j) {
  if constexpr (Kind == Product::Outer) return (i & j) == 0;
  if constexpr (Kind == Product::LeftContraction) return (i & j) == i;
  return true;
}

template <Product Kind>
void scatter(const Signature& sig, std::span<const double> a, std::span<const double> b,
             std::span<double> out) {
  const BladeMask n = static_cast<BladeMask>(a.size());
  for (BladeMask i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (BladeMask j = 0; j < n; ++j) {
      const double bj = b[j];
      if (bj == 0.0 || !admits<Kind>(i, j)) continue;
      const int s = blade_product_sign(sig, i, j);
      if (s == 0) continue;
      out[i ^ j] += s > 0 ? ai * bj : -(ai * bj);
    }
  }
}

template <Product Kind>
void gather(const Signature& sig, std::span<const double> a, std::span<const double> b,
            std::span<double> out) {
  const long n = static_cast<long>(a.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    double acc = out[k];
    for (BladeMask i = 0; i < static_cast<BladeMask>(n); ++i) {
      const double ai = a[i];
      if (ai == 0.0) continue;
      const BladeMask j = i ^ static_cast<BladeMask>(k);
      const double bj = b[j];
      if (bj == 0.0 || !admits<Kind>(i, j)) continue;
      const int s = blade_product_sign(sig, i, j);
      if (s == 0) continue;
      acc += s > 0 ? ai * bj : -(ai * bj);
    }
    out[k] = acc;
  }
}


}  // namespace

void product_serial(const Signature& sig, Product kind, std::span<const double> a,
                    std::span<const double> b, std::span<double> out) {
  assert(a.size() == sig.blade_count() && b.size() == a.size() && out.size() == a.size());
  switch (kind) {
    case Product::Geometric: return scatter<Product::Geometric>(sig, a, b, out);
    case Product::Outer: return scatter<Product::Outer>(sig, a, b, out);
    case Product::LeftContraction: return scatter<Product::LeftContraction>(sig, a, b, out);
  }
}

void product_openmp(const Signature& sig, Product kind, std::span<const double> a,
                    std::span<const double> b, std::span<double> out) {
  assert(a.size() == sig.blade_count() && b.size() == a.size() && out.size() == a.size());
  switch (kind) {
    case Product::Geometric: return gather<Product::Geometric>(sig, a, b, out);
    case Product::Outer: return gather<Product::Outer>(sig, a, b, out);
    case Product::LeftContraction: return gather<Product::LeftContraction>(sig, a, b, out);
  }
}

void product(const Signature& sig, Product kind, std::span<const double> a,
             std::span<const double> b, std::span<double> out) {
  if (sig.dim() >= kParallelThreshold)
    product_openmp(sig, kind, a, b, out);
  else
    product_serial(sig, kind, a, b, out);
}

}  // namespace cliff::kernel
