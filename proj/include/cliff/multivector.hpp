#pragma once

#include <complex>
#include <span>
#include <vector>

#include "cliff/signature.hpp"

namespace cliff {

using Complex = std::complex<double>;

enum class Field { Real, Complex };

// Dense multivector of Cl(p,q,r): one coefficient per basis blade, indexed by
// blade mask. Complex multivectors keep a second (imaginary) table; a real
// multivector has none. Mixed operations promote to complex.
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(const Signature& sig, Field field = Field::Real);

  static Multivector scalar(const Signature& sig, double value);
  static Multivector scalar(const Signature& sig, Complex value);
  static Multivector blade(const Signature& sig, BladeMask mask, double coefficient = 1.0);
  // Basis vector by bit position (see Signature for the label mapping).
  static Multivector basis_vector(const Signature& sig, int bit);
  // Vector with the given coordinates in bit order.
  static Multivector vector(const Signature& sig, std::span<const double> coords);

  const Signature& signature() const noexcept { return sig_; }
  Field field() const noexcept { return im_.empty() ? Field::Real : Field::Complex; }
  bool is_complex() const noexcept { return !im_.empty(); }
  std::size_t size() const noexcept { return re_.size(); }

  Complex operator[](BladeMask m) const noexcept {
    return {re_[m], im_.empty() ? 0.0 : im_[m]};
  }
  double real_at(BladeMask m) const noexcept { return re_[m]; }
  void set(BladeMask m, Complex value);
  void set(BladeMask m, double value) { re_[m] = value; if (!im_.empty()) im_[m] = 0.0; }
  void add(BladeMask m, Complex value);

  std::span<const double> real_table() const noexcept { return re_; }
  std::span<const double> imag_table() const noexcept { return im_; }
  std::span<double> real_table() noexcept { return re_; }
  std::span<double> imag_table() noexcept { return im_; }

  Multivector to_complex() const;
  // Drops the imaginary table.
  Multivector real_part() const;
  Multivector imag_part() const;

  // Scalar (grade-0) coefficient.
  Complex scalar_part() const noexcept { return (*this)[0]; }

  // Euclidean 2-norm of the coefficient table (complex modulus).
  double norm() const noexcept;
  double max_abs() const noexcept;
  bool is_zero(double tol = 0.0) const noexcept { return norm() <= tol; }
  // Largest imaginary coefficient magnitude (0 for real multivectors).
  double imag_norm() const noexcept;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  Multivector& operator*=(Complex s);
  Multivector& operator/=(double s) { return *this *= (1.0 / s); }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator*(Multivector a, Complex s) { return a *= s; }
  friend Multivector operator*(Complex s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }

  // Geometric and outer products.
  friend Multivector operator*(const Multivector& a, const Multivector& b);
  friend Multivector operator^(const Multivector& a, const Multivector& b);

  // Adds a scalar.
  friend Multivector operator+(Multivector a, double s) { a.re_[0] += s; return a; }
  friend Multivector operator+(double s, Multivector a) { a.re_[0] += s; return a; }
  friend Multivector operator-(Multivector a, double s) { a.re_[0] -= s; return a; }
  friend Multivector operator-(double s, Multivector a) { a *= -1.0; a.re_[0] += s; return a; }

  // Exact coefficient equality (used by round-trip tests).
  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  void promote();
  void check_same(const Multivector& o) const;

  Signature sig_;
  std::vector<double> re_;
  std::vector<double> im_;
};

}  // namespace cliff
