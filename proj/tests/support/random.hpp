#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <random>
#include <vector>

#include "cliff/algebra.hpp"
#include "cliff/multivector.hpp"

namespace testing {

using Rng = std::mt19937_64;
using cliff::Multivector;
using cliff::Signature;

inline double normal(Rng& rng) { return std::normal_distribution<double>{}(rng); }
inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>{lo, hi}(rng);
}

inline Multivector random_multivector(const Signature& sig, Rng& rng) {
  Multivector m(sig);
  for (double& c : m.real_table()) c = normal(rng);
  return m;
}

inline Multivector random_complex_multivector(const Signature& sig, Rng& rng) {
  Multivector m = random_multivector(sig, rng).to_complex();
  for (double& c : m.imag_table()) c = normal(rng);
  return m;
}

inline Multivector random_grade(const Signature& sig, int k, Rng& rng) {
  return cliff::grade_select(random_multivector(sig, rng), k);
}

// Random combination of the given vectors, kept well away from the null cone.
inline Multivector random_vector_in(const std::vector<Multivector>& span, Rng& rng) {
  while (true) {
    Multivector v(span.front().signature());
    for (const auto& e : span) v += e * normal(rng);
    const double n = v.norm();
    if (n > 0.1 && std::abs(cliff::vector_dot(v, v)) >= 0.1 * n * n) return v;
  }
}

inline std::vector<Multivector> basis_vectors(const Signature& sig) {
  std::vector<Multivector> out;
  for (int b = 0; b < sig.dim(); ++b) out.push_back(Multivector::basis_vector(sig, b));
  return out;
}

inline Multivector random_vector(const Signature& sig, Rng& rng) {
  return random_vector_in(basis_vectors(sig), rng);
}

inline Multivector unit(const Multivector& v) {
  return v / std::sqrt(std::abs(cliff::vector_dot(v, v)));
}

inline Multivector random_unit_vector(const Signature& sig, Rng& rng) {
  return unit(random_vector(sig, rng));
}

// Product of l random non-null vectors.
inline Multivector random_versor(const Signature& sig, int l, Rng& rng) {
  Multivector u = Multivector::scalar(sig, 1.0);
  for (int i = 0; i < l; ++i) u = u * random_vector(sig, rng);
  return u;
}

// Normalized rotor (R R~ = 1) built from simple exponentials inside span.
inline Multivector random_rotor_in(const std::vector<Multivector>& span, Rng& rng, int planes = 3) {
  Multivector r = Multivector::scalar(span.front().signature(), 1.0);
  if (span.size() < 2) return r;
  for (int i = 0; i < planes; ++i) {
    const Multivector b = random_vector_in(span, rng) ^ random_vector_in(span, rng);
    const double n = b.norm();
    if (n < 1e-3) continue;
    r = r * cliff::exp_bivector(b * (uniform(rng, -1.5, 1.5) / n));
  }
  return r;
}

inline Multivector random_rotor(const Signature& sig, Rng& rng, int planes = 3) {
  return random_rotor_in(basis_vectors(sig), rng, planes);
}

// Random non-null point: a product of d - r mutually orthogonal vectors.
inline Multivector random_point(const Signature& sig, Rng& rng) {
  const int m = sig.dim() - sig.r();
  const double scale = uniform(rng, 0.5, 3.0);
  while (true) {
    std::vector<Multivector> vs;
    Multivector blade = Multivector::scalar(sig, scale);
    // The last direction is forced, so start over if it lands near the null cone.
    for (int tries = 0; tries < 20 && static_cast<int>(vs.size()) < m; ++tries) {
      Multivector x = random_vector(sig, rng);
      for (const auto& v : vs) x -= v * (cliff::vector_dot(x, v) / cliff::vector_dot(v, v));
      const double n = x.norm();
      if (std::abs(cliff::vector_dot(x, x)) < 0.05 * n * n) continue;
      vs.push_back(x);
      blade = blade * x;
    }
    if (static_cast<int>(vs.size()) == m) return blade;
  }
}

}  // namespace testing
