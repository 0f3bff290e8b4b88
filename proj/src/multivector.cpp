#include "cliff/multivector.hpp"

#include <algorithm>
#include <cmath>

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "cliff/kernel.hpp"

namespace cliff {

Multivector::Multivector(const Signature& sig, Field field)
    : sig_(sig), re_(sig.blade_count(), 0.0) {
  if (field == Field::Complex) im_.assign(sig.blade_count(), 0.0);
}

Multivector Multivector::scalar(const Signature& sig, double value) {
  Multivector m(sig);
  m.re_[0] = value;
  return m;
}

Multivector Multivector::scalar(const Signature& sig, Complex value) {
  Multivector m(sig, value.imag() != 0.0 ? Field::Complex : Field::Real);
  m.set(0, value);
  return m;
}

Multivector Multivector::blade(const Signature& sig, BladeMask mask, double coefficient) {
  if (mask >= sig.blade_count()) throw Error(ErrorKind::Domain, "blade mask out of range");
  Multivector m(sig);
  m.re_[mask] = coefficient;
  return m;
}

Multivector Multivector::basis_vector(const Signature& sig, int bit) {
  if (bit < 0 || bit >= sig.dim()) throw Error(ErrorKind::Domain, "basis index out of range");
  return blade(sig, BladeMask{1} << bit);
}

Multivector Multivector::vector(const Signature& sig, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != sig.dim())
    throw Error(ErrorKind::Domain, "vector coordinate count does not match dimension");
  Multivector m(sig);
  for (int b = 0; b < sig.dim(); ++b) m.re_[BladeMask{1} << b] = coords[b];
  return m;
}

void Multivector::set(BladeMask m, Complex value) {
  if (value.imag() != 0.0) promote();
  re_[m] = value.real();
  if (!im_.empty()) im_[m] = value.imag();
}

void Multivector::add(BladeMask m, Complex value) {
  if (value.imag() != 0.0) promote();
  re_[m] += value.real();
  if (!im_.empty()) im_[m] += value.imag();
}

void Multivector::promote() {
  if (im_.empty()) im_.assign(re_.size(), 0.0);
}

Multivector Multivector::to_complex() const {
  Multivector m = *this;
  m.promote();
  return m;
}

Multivector Multivector::real_part() const {
  Multivector m(sig_);
  m.re_ = re_;
  return m;
}

Multivector Multivector::imag_part() const {
  Multivector m(sig_);
  if (!im_.empty()) m.re_ = im_;
  return m;
}

double Multivector::norm() const noexcept {
  double s = 0.0;
  for (double x : re_) s += x * x;
  for (double x : im_) s += x * x;
  return std::sqrt(s);
}

double Multivector::max_abs() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < re_.size(); ++i) m = std::max(m, std::abs((*this)[i]));
  return m;
}

double Multivector::imag_norm() const noexcept {
  double s = 0.0;
  for (double x : im_) s += x * x;
  return std::sqrt(s);
}

void Multivector::check_same(const Multivector& o) const {
  if (!(sig_ == o.sig_))
    throw Error(ErrorKind::SignatureMismatch,
                "signature mismatch: " + sig_.to_string() + " vs " + o.sig_.to_string());
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same(o);
  if (o.is_complex()) promote();
  for (std::size_t i = 0; i < re_.size(); ++i) re_[i] += o.re_[i];
  if (o.is_complex())
    for (std::size_t i = 0; i < im_.size(); ++i) im_[i] += o.im_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same(o);
  if (o.is_complex()) promote();
  for (std::size_t i = 0; i < re_.size(); ++i) re_[i] -= o.re_[i];
  if (o.is_complex())
    for (std::size_t i = 0; i < im_.size(); ++i) im_[i] -= o.im_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& x : re_) x *= s;
  for (double& x : im_) x *= s;
  return *this;
}

Multivector& Multivector::operator*=(Complex s) {
  if (s.imag() == 0.0) return *this *= s.real();
  promote();
  for (std::size_t i = 0; i < re_.size(); ++i) {
    const Complex z = Complex(re_[i], im_[i]) * s;
    re_[i] = z.real();
    im_[i] = z.imag();
  }
  return *this;
}

Multivector product(kernel::Product kind, const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature()))
    throw Error(ErrorKind::SignatureMismatch, "signature mismatch: " +
                                                  a.signature().to_string() + " vs " +
                                                  b.signature().to_string());
  const Signature& sig = a.signature();
  const bool complex = a.is_complex() || b.is_complex();
  Multivector out(sig, complex ? Field::Complex : Field::Real);
  kernel::product(sig, kind, a.real_table(), b.real_table(), out.real_table());
  if (!complex) return out;
  // (ar + i ai)(br + i bi) = ar br - ai bi + i (ar bi + ai br)
  if (a.is_complex() && b.is_complex()) {
    std::vector<double> t(sig.blade_count(), 0.0);
    kernel::product(sig, kind, a.imag_table(), b.imag_table(), t);
    auto re = out.real_table();
    for (std::size_t i = 0; i < t.size(); ++i) re[i] -= t[i];
  }
  if (b.is_complex()) kernel::product(sig, kind, a.real_table(), b.imag_table(), out.imag_table());
  if (a.is_complex()) kernel::product(sig, kind, a.imag_table(), b.real_table(), out.imag_table());
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return product(kernel::Product::Geometric, a, b);
}

Multivector operator^(const Multivector& a, const Multivector& b) {
  return product(kernel::Product::Outer, a, b);
}

bool operator==(const Multivector& a, const Multivector& b) {
  if (!(a.sig_ == b.sig_)) return false;
  for (std::size_t i = 0; i < a.re_.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace cliff
