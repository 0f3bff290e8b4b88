#include <cmath>
#include <numbers>

#include "cliff/algebra.hpp"
#include "cliff/decomposition.hpp"
#include "cliff/error.hpp"
#include "cliff/text.hpp"
#include "doctest.h"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace cliff;
using testing::relative_gap;
using testing::Rng;

namespace {

Multivector mv(const Signature& sig, const char* text) { return parse(sig, text); }

double commutator(const Multivector& a, const Multivector& b) {
  return (a * b - b * a).norm() / std::max(1.0, a.norm() * b.norm());
}

void check_split(const Multivector& b, const BivectorSplit& split) {
  Multivector sum(b.signature());
  for (std::size_t i = 0; i < split.factors.size(); ++i) {
    const Multivector& bi = split.factors[i].bivector;
    sum += bi;
    CHECK(is_pure_grade(bi, 2, 1e-12));
    CHECK((bi ^ bi).norm() <= 1e-9 * std::max(1.0, bi.norm() * bi.norm()));
    CHECK(std::abs((bi * bi).scalar_part().real() - split.factors[i].lambda) <= 1e-8 * std::max(1.0, bi.norm() * bi.norm()));
    for (std::size_t j = i + 1; j < split.factors.size(); ++j)
      CHECK(commutator(bi, split.factors[j].bivector) <= 1e-9);
  }
  CHECK(relative_gap(sum, b) <= 1e-9);
}

// Minimal number of reflections for a product of l generic reflections in
// dimension d: parity is fixed and the count never exceeds d.
int minimal_reflections(int l, int d) { return l <= d ? l : (l % 2 == d % 2 ? d : d - 1); }

void check_decomposition(const Multivector& u, const InvariantDecomposition& dec) {
  CHECK(relative_gap(dec.reconstruct(), u) <= 1e-9);
  std::vector<Multivector> parts = dec.factors;
  if (dec.residual_reflection) parts.push_back(*dec.residual_reflection);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(commutator(parts[i], parts[j]) <= 1e-9);
  for (const auto& f : dec.factors) {
    CHECK(off_grade_norm(f, 0) == doctest::Approx(grade_select(f, 2).norm()).epsilon(1e-9));
    const Multivector b = grade_select(f, 2);
    CHECK((b ^ b).norm() <= 1e-9 * std::max(1.0, b.norm() * b.norm()));
  }
}

}  // namespace

TEST_CASE("bivector split examples") {
  const Signature c4(4, 0);
  const BivectorSplit one = bivector_split(mv(c4, "e12"));
  REQUIRE(one.factors.size() == 1);
  CHECK(one.factors[0].bivector == mv(c4, "e12"));
  CHECK(one.factors[0].kind == FactorKind::Rotation);

  const BivectorSplit two = bivector_split(mv(c4, "e12+2e34"));
  REQUIRE(two.factors.size() == 2);
  CHECK(relative_gap(two.factors[0].bivector, mv(c4, "2e34")) <= 1e-12);
  CHECK(relative_gap(two.factors[1].bivector, mv(c4, "e12")) <= 1e-12);
  CHECK(two.factors[0].lambda == doctest::Approx(-4.0));
  CHECK_FALSE(two.degenerate);

  const Multivector iso = mv(c4, "e12+e34");
  const BivectorSplit deg = bivector_split(iso);
  CHECK(deg.degenerate);
  CHECK(deg.factors.size() == 2);
  check_split(iso, deg);

  CHECK(to_string(make_simple_factor(mv(Signature(1, 1), "e12")).kind) == std::string("boost"));
  CHECK(make_simple_factor(mv(Signature(2, 0, 1), "e01")).kind == FactorKind::Translation);
  CHECK_THROWS_AS(bivector_split(mv(c4, "e1")), Error);
}

TEST_CASE("bivector split properties") {
  Rng rng(17);
  for (const Signature& sig : {Signature(4, 0), Signature(5, 0), Signature(6, 0), Signature(1, 3),
                               Signature(3, 0, 1), Signature(1, 4)}) {
    CAPTURE(sig.to_string());
    for (int t = 0; t < 40; ++t) {
      const Multivector b = testing::random_grade(sig, 2, rng);
      const BivectorSplit split = bivector_split(b);
      CHECK(static_cast<int>(split.factors.size()) <= sig.dim() / 2);
      check_split(b, split);
      for (std::size_t i = 1; i < split.factors.size(); ++i)
        CHECK(std::abs(split.factors[i - 1].lambda) >= std::abs(split.factors[i].lambda));
    }
  }
}

TEST_CASE("invariant decomposition examples") {
  const Signature c3(3, 0), c4(4, 0), c5(5, 0);
  const Multivector e123 = mv(c3, "e123");
  const InvariantDecomposition d3 = invariant_decompose(e123);
  REQUIRE(d3.residual_reflection);
  CHECK(relative_gap(*d3.residual_reflection, mv(c3, "e3")) <= 1e-12);
  REQUIRE(d3.factors.size() == 1);
  CHECK(relative_gap(d3.factors[0], mv(c3, "e12")) <= 1e-12);
  CHECK(d3.count() == 2);
  check_decomposition(e123, d3);

  const Multivector r = exp_bivector(mv(c4, "e12+2e34"));
  const InvariantDecomposition d4 = invariant_decompose(r);
  CHECK(d4.factors.size() == 2);
  CHECK_FALSE(d4.residual_reflection);
  check_decomposition(r, d4);

  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    Multivector u = Multivector::scalar(c5, 1.0);
    for (int i = 0; i < 5; ++i) u = u * testing::random_unit_vector(c5, rng);
    const InvariantDecomposition d = invariant_decompose(u);
    CHECK(d.factors.size() == 2);
    CHECK(d.residual_reflection.has_value());
    check_decomposition(u, d);
  }
}

TEST_CASE("invariant decomposition counts factors by minimal reflections") {
  Rng rng(23);
  for (const Signature& sig : {Signature(2, 0), Signature(3, 0), Signature(4, 0), Signature(5, 0),
                               Signature(1, 3), Signature(3, 1), Signature(2, 0, 1), Signature(3, 0, 1)}) {
    CAPTURE(sig.to_string());
    for (int l = 1; l <= 6; ++l)
      for (int t = 0; t < 20; ++t) {
        const Multivector u = testing::random_versor(sig, l, rng);
        const InvariantDecomposition d = invariant_decompose(u);
        CAPTURE(l);
        CHECK(static_cast<int>(d.count()) == (minimal_reflections(l, sig.dim()) + 1) / 2);
        check_decomposition(u, d);
      }
  }
}

TEST_CASE("invariant decomposition rejects non-versors") {
  const Signature c3(3, 0);
  CHECK_THROWS_AS(invariant_decompose(mv(c3, "1+e1")), Error);
  try {
    invariant_decompose(mv(Signature(2, 0, 1), "e0"));
    FAIL("null versor accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("rotor logarithm") {
  const Signature c2(2, 0), c4(4, 0);
  CHECK(rotor_log(mv(c2, "1")).is_zero());
  CHECK(relative_gap(rotor_log(mv(c2, "e12")), mv(c2, "e12") * (std::numbers::pi / 2)) <= 1e-12);
  const Multivector b = mv(c4, "0.3e12+0.7e34");
  CHECK(relative_gap(rotor_log(exp_bivector(b)), b) <= 1e-9);
  try {
    rotor_log(mv(c2, "-1"));
    FAIL("log(-1) accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Branch);
  }
  CHECK_THROWS_AS(rotor_log(mv(c2, "2")), Error);

  // Past a half turn the sign belongs to the rotation plane, not the boost.
  const Signature sta(1, 3);
  const Multivector mixed = exp_bivector(mv(sta, "0.5e12 + 2.9e34"));
  CHECK(relative_gap(exp_bivector(rotor_log(mixed)), mixed) <= 1e-9);
  CHECK_THROWS_AS(rotor_log(exp_bivector(mv(sta, "0.5e12")) * -1.0), Error);

  Rng rng(31);
  for (const Signature& sig : {Signature(3, 0), Signature(4, 0), Signature(1, 3), Signature(3, 0, 1)}) {
    CAPTURE(sig.to_string());
    for (int t = 0; t < 50; ++t) {
      const Multivector bv = testing::random_grade(sig, 2, rng) * 0.4;
      const Multivector r = exp_bivector(bv);
      CHECK(relative_gap(exp_bivector(rotor_log(r)), r) <= 1e-9);
    }
  }
}

TEST_CASE("gauge pair") {
  const Signature c3(3, 0);
  const Multivector e1 = mv(c3, "e1"), e2 = mv(c3, "e2");
  const GaugedPair zero = gauge_pair(e1, e2, 0.0);
  CHECK(relative_gap(zero.u, e1) <= 1e-15);
  CHECK(relative_gap(zero.v, e2) <= 1e-15);
  const GaugedPair quarter = gauge_pair(e1, e2, std::numbers::pi / 4);
  CHECK(relative_gap(quarter.v * quarter.u, e2 * e1) <= 1e-12);
  CHECK(relative_gap(quarter.u, e1) > 0.1);
  CHECK(gauge_pair(e1, e1, 0.3).parallel);

  Rng rng(41);
  for (const Signature& sig : {Signature(3, 0), Signature(1, 3), Signature(2, 0, 1)}) {
    for (int t = 0; t < 50; ++t) {
      const Multivector u = testing::random_vector(sig, rng), v = testing::random_vector(sig, rng);
      const GaugedPair g = gauge_pair(u, v, testing::uniform(rng, -3.0, 3.0));
      CHECK(relative_gap(g.v * g.u, v * u) <= 1e-10);
    }
  }
}

TEST_CASE("orthogonalized factorizations") {
  const Signature c3(3, 0);
  const std::vector<Multivector> ortho{mv(c3, "e1"), mv(c3, "e2")};
  CHECK(orthogonalize_factorization(ortho) == ortho);
  const Multivector v = mv(c3, "e1+2e2");
  CHECK(orthogonalize_factorization({v, v}) == std::vector<Multivector>{v, v});

  // Three line reflections in the plane: a glide reflection.
  const Signature pga(2, 0, 1);
  const std::vector<Multivector> lines{mv(pga, "e1"), mv(pga, "0.6e1+0.8e2+e0"),
                                       mv(pga, "e2+0.5e0")};
  const std::vector<Multivector> glide = orthogonalize_factorization(lines);
  REQUIRE(glide.size() == 3);
  CHECK(relative_gap(glide[0] * glide[1] * glide[2], lines[0] * lines[1] * lines[2]) <= 1e-10);
  CHECK(std::abs(vector_dot(glide[2], glide[0])) <= 1e-10);
  CHECK(std::abs(vector_dot(glide[2], glide[1])) <= 1e-10);

  Rng rng(43);
  for (const Signature& sig : {Signature(3, 0), Signature(4, 0), Signature(1, 3)}) {
    for (int l = 2; l <= 4; ++l) {
      std::vector<Multivector> vs;
      Multivector prod = Multivector::scalar(sig, 1.0);
      for (int i = 0; i < l; ++i) {
        vs.push_back(testing::random_vector(sig, rng));
        prod = prod * vs.back();
      }
      const auto out = orthogonalize_factorization(vs);
      Multivector again = Multivector::scalar(sig, 1.0);
      for (const auto& x : out) again = again * x;
      CHECK(relative_gap(again, prod) <= 1e-9);
      CHECK(out.size() <= vs.size());
    }
  }
}

TEST_CASE("polar decomposition and square roots") {
  const Signature c2(2, 0), c4(4, 0);
  const Multivector rot = exp_bivector(mv(c2, "e12"));
  const PolarDecomposition p = polar_decompose(rot * 3.0);
  CHECK(relative_gap(p.self_reverse, mv(c2, "3")) <= 1e-12);
  CHECK(relative_gap(p.rotor, rot) <= 1e-12);

  const PolarDecomposition q = polar_decompose(mv(c4, "2+e1234"));
  CHECK(relative_gap(q.self_reverse, mv(c4, "2+e1234")) <= 1e-12);
  CHECK(relative_gap(q.rotor, mv(c4, "1")) <= 1e-12);

  CHECK(relative_gap(sqrt_self_reverse(mv(c4, "4")), mv(c4, "2")) <= 1e-15);
  CHECK(relative_gap(sqrt_self_reverse(mv(c4, "1")), mv(c4, "1")) <= 1e-15);
  const Multivector x = mv(c4, "2+e1234");
  CHECK(relative_gap(sqrt_self_reverse(x * x), x) <= 1e-12);
  CHECK_THROWS_AS(sqrt_self_reverse(mv(c4, "-1")), Error);
  CHECK_THROWS_AS(polar_decompose(mv(c4, "e1")), Error);

  Rng rng(47);
  for (const Signature& sig : {Signature(4, 0), Signature(1, 3), Signature(3, 0)}) {
    CAPTURE(sig.to_string());
    for (int t = 0; t < 100; ++t) {
      const double rho = testing::uniform(rng, 0.2, 5.0);
      const Multivector r = exp_bivector(testing::random_grade(sig, 2, rng) * 0.5);
      const PolarDecomposition pd = polar_decompose(r * rho);
      CHECK(pd.self_reverse.scalar_part().real() == doctest::Approx(rho).epsilon(1e-9));
      CHECK(relative_gap(pd.rotor, r) <= 1e-9);
      // General even elements: S self-reverse, R normalized, S R == psi.
      const Multivector psi = even_part(testing::random_multivector(sig, rng));
      const PolarDecomposition g = polar_decompose(psi);
      CHECK(relative_gap(g.self_reverse, reverse(g.self_reverse)) <= 1e-12);
      CHECK(relative_gap(g.rotor * reverse(g.rotor), Multivector::scalar(sig, 1.0)) <= 1e-9);
      CHECK(relative_gap(g.self_reverse * g.rotor, psi) <= 1e-9);
    }
  }
}
