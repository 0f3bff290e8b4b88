#include <omp.h>

#include <cmath>
#include <numbers>

#include "cliff/algebra.hpp"
#include "cliff/error.hpp"
#include "cliff/kernel.hpp"
#include "cliff/matrix_rep.hpp"
#include "cliff/text.hpp"
#include "doctest.h"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace cliff;
using testing::Rng;

namespace {

const Signature kSignatures[] = {Signature(2, 0), Signature(3, 0), Signature(4, 0), Signature(1, 1),
                                 Signature(1, 3), Signature(3, 0, 1), Signature(2, 2), Signature(0, 3)};

Multivector mv(const Signature& sig, const char* text) { return parse(sig, text); }

}  // namespace

TEST_CASE("signature layout and labels") {
  const Signature pga(3, 0, 1);
  CHECK(pga.dim() == 4);
  CHECK(pga.metric(0) == 0);
  CHECK(pga.metric(1) == 1);
  CHECK(pga.label_of(0) == 0);
  CHECK(pga.bit_of(3) == 3);
  CHECK(pga.bit_of(4) == -1);

  const Signature sta(1, 3);
  CHECK(sta.metric(0) == 1);
  CHECK(sta.metric(3) == -1);
  CHECK(sta.label_of(0) == 1);
  CHECK(sta.to_string() == "Cl(1,3,0)");

  CHECK_THROWS_AS(Signature(7, 6), Error);
  CHECK_THROWS_AS(Signature(-1, 0), Error);
}

TEST_CASE("blade products agree with the matrix representation") {
  for (const Signature& sig : kSignatures) {
    CAPTURE(sig.to_string());
    for (BladeMask a = 0; a < sig.blade_count(); ++a)
      for (BladeMask b = 0; b < sig.blade_count(); ++b) {
        const Multivector x = Multivector::blade(sig, a), y = Multivector::blade(sig, b);
        const Eigen::MatrixXcd expect = matrix_rep(x) * matrix_rep(y);
        REQUIRE((matrix_rep(x * y) - expect).norm() == 0.0);
      }
  }
}

TEST_CASE("matrix representation basics") {
  const Signature sig(1, 0);
  CHECK(matrix_rep(Multivector::scalar(sig, 1.0)).isIdentity());
  const Eigen::MatrixXcd e1 = matrix_rep(Multivector::basis_vector(sig, 0));
  CHECK((e1 * e1).isIdentity());
  CHECK_THROWS_AS(matrix_rep(Multivector(Signature(9, 0))), Error);

  Rng rng(3);
  const Signature pga(3, 0, 1);
  for (int t = 0; t < 20; ++t) {
    const Multivector a = testing::random_multivector(pga, rng);
    CHECK(from_matrix_rep(pga, matrix_rep(a)) == a);
  }
}

TEST_CASE("geometric product examples") {
  const Signature c2(2, 0), c1(1, 0), c3(3, 0);
  CHECK(approx_equal(mv(c2, "e1") * mv(c2, "e1"), mv(c2, "1")));
  CHECK((mv(c1, "1+e1") * mv(c1, "1-e1")).is_zero());
  CHECK(approx_equal(mv(c3, "e12") * mv(c3, "e13"), mv(c3, "-e23")));
  CHECK(approx_equal(mv(c2, "e1") ^ mv(c2, "e2"), mv(c2, "e12")));
  CHECK(commutator_product(mv(c2, "e12"), mv(c2, "e12")).is_zero());
  CHECK(approx_equal(commutator_product(mv(c2, "e12"), mv(c2, "e1")), mv(c2, "-e2")));
}

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  omp_set_num_threads(4);
  Rng rng(11);
  using kernel::Product;
  for (int d = 2; d <= 10; ++d) {
    const Signature sig(d - d / 3, d / 3 - (d > 6 ? 1 : 0), d > 6 ? 1 : 0);
    for (Product kind : {Product::Geometric, Product::Outer, Product::LeftContraction}) {
      const Multivector a = testing::random_multivector(sig, rng), b = testing::random_multivector(sig, rng);
      std::vector<double> s(sig.blade_count()), p(sig.blade_count());
      kernel::product_serial(sig, kind, a.real_table(), b.real_table(), s);
      kernel::product_openmp(sig, kind, a.real_table(), b.real_table(), p);
      CAPTURE(d);
      CHECK(s == p);
    }
  }
}

TEST_CASE("outer product and left contraction match grade selection") {
  Rng rng(5);
  for (const Signature& sig : kSignatures) {
    for (int r = 0; r <= sig.dim(); ++r)
      for (int s = 0; s <= sig.dim(); ++s) {
        const Multivector a = testing::random_grade(sig, r, rng), b = testing::random_grade(sig, s, rng);
        const Multivector ab = a * b;
        const Multivector outer = r + s <= sig.dim() ? grade_select(ab, r + s) : Multivector(sig);
        const Multivector inner = r <= s ? grade_select(ab, s - r) : Multivector(sig);
        CHECK(approx_equal(a ^ b, outer, 1e-12));
        CHECK(approx_equal(left_contraction(a, b), inner, 1e-12));
      }
  }
}

TEST_CASE("complex products follow the matrix representation") {
  Rng rng(8);
  for (const Signature& sig : {Signature(3, 0), Signature(1, 3)}) {
    for (int t = 0; t < 50; ++t) {
      const Multivector a = testing::random_complex_multivector(sig, rng);
      const Multivector b = t % 2 ? testing::random_multivector(sig, rng)
                                  : testing::random_complex_multivector(sig, rng);
      const Eigen::MatrixXcd expect = matrix_rep(a) * matrix_rep(b);
      CHECK((matrix_rep(a * b) - expect).norm() <= 1e-12 * expect.norm());
    }
  }
}

TEST_CASE("involutions") {
  const Signature c3(3, 0);
  CHECK(approx_equal(reverse(mv(c3, "e12")), mv(c3, "-e12")));
  CHECK(approx_equal(reverse(mv(c3, "3+e1")), mv(c3, "3+e1")));
  CHECK(approx_equal(clifford_conjugate(mv(c3, "1+e1+e12")), mv(c3, "1-e1-e12")));
  CHECK(approx_equal(grade_involution(mv(c3, "1+e1+e12+e123")), mv(c3, "1-e1+e12-e123")));
  CHECK_THROWS_AS(grade_select(mv(c3, "e1"), 4), Error);

  Rng rng(2);
  for (const Signature& sig : kSignatures) {
    const Multivector a = testing::random_multivector(sig, rng), b = testing::random_multivector(sig, rng);
    CHECK(approx_equal(reverse(a * b), reverse(b) * reverse(a), 1e-12));
    CHECK(approx_equal(grade_involution(a * b), grade_involution(a) * grade_involution(b), 1e-12));
    const Multivector c = testing::random_multivector(sig, rng);
    CHECK(approx_equal((a * b) * c, a * (b * c), 1e-12));
  }
}

TEST_CASE("sandwich and versor inverse") {
  const Signature c2(2, 0), c4(4, 0);
  CHECK(approx_equal(sandwich(mv(c2, "e1"), mv(c2, "e1")), mv(c2, "e1")));
  CHECK(approx_equal(sandwich(mv(c2, "e1"), mv(c2, "e2")), mv(c2, "-e2")));
  CHECK(approx_equal(sandwich(mv(c4, "e12"), mv(c4, "e13")), mv(c4, "-e13")));
  CHECK(approx_equal(versor_inverse(mv(c2, "e1")), mv(c2, "e1")));
  CHECK(approx_equal(versor_inverse(mv(c2, "2e12")), mv(c2, "-0.5e12")));
  const Signature pga(2, 0, 1);
  try {
    versor_inverse(mv(pga, "e0"));
    FAIL("null vector inverted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvertible);
  }
}

TEST_CASE("versor certification") {
  Rng rng(21);
  for (const Signature& sig : {Signature(4, 0), Signature(1, 3), Signature(3, 0, 1)}) {
    for (int l = 1; l <= 5; ++l) {
      const auto cert = certify_versor(testing::random_versor(sig, l, rng));
      REQUIRE(cert);
      CHECK((cert->parity == Parity::Odd) == (l % 2 == 1));
    }
  }
  const Signature c3(3, 0);
  CHECK_FALSE(certify_versor(mv(c3, "1+e1")));
  CHECK_FALSE(certify_versor(mv(c3, "1+e12+e23+e123")));
  CHECK_FALSE(certify_versor(Multivector(c3)));
}

TEST_CASE("bivector exponential") {
  const Signature c2(2, 0), c4(4, 0);
  CHECK(approx_equal(exp_bivector(mv(c2, "e12") * (std::numbers::pi / 2)), mv(c2, "e12"), 1e-12));
  CHECK(approx_equal(exp_bivector(mv(c2, "e12") * std::numbers::pi), mv(c2, "-1"), 1e-12));
  const Multivector b = mv(c4, "e12+2e34");
  CHECK(approx_equal(exp_bivector(b), exp_bivector(mv(c4, "e12")) * exp_bivector(mv(c4, "2e34")), 1e-12));
  CHECK(testing::relative_gap(exp_bivector(b), testing::exp_series(b)) <= 1e-10);
  CHECK_THROWS_AS(exp_bivector(mv(c4, "e1")), Error);

  Rng rng(4);
  for (const Signature& sig : {Signature(4, 0), Signature(1, 3), Signature(3, 0, 1), Signature(5, 0)}) {
    for (int t = 0; t < 30; ++t) {
      const Multivector bv = testing::random_grade(sig, 2, rng) * 0.7;
      CAPTURE(format(bv));
      CHECK(testing::relative_gap(exp_bivector(bv), testing::exp_series(bv)) <= 1e-10);
    }
  }
}

TEST_CASE("text parsing") {
  const Signature c4(4, 0);
  const Multivector m = mv(c4, "2.5 + 3e12 - e134");
  CHECK(m[0].real() == 2.5);
  CHECK(m[0b0011].real() == 3.0);
  CHECK(m[0b1101].real() == -1.0);
  const Multivector z = mv(c4, "(1+2i)e12");
  CHECK(z[0b0011] == Complex(1.0, 2.0));
  CHECK(mv(c4, "e21") == mv(c4, "-e12"));
  CHECK(mv(c4, "e{2,1}") == mv(c4, "-e12"));
  CHECK(mv(c4, "1e-05")[0].real() == 1e-5);
  CHECK(mv(c4, "2*e3") == mv(c4, "2e3"));
  CHECK(format(mv(c4, "e21")) == "-e12");
  CHECK(format(Multivector(c4)) == "0");
  CHECK(format(mv(c4, "e3 - 2 + e12")) == "-2 + e3 + e12");

  const Signature pga(3, 0, 1);
  CHECK(format(mv(pga, "e01 + e123")) == "e01 + e123");

  for (const char* bad : {"e99", "e11", "e5", "3 +", "(1+i", "e{1,", "x"}) {
    CAPTURE(bad);
    try {
      mv(c4, bad);
      FAIL("accepted malformed input");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
    }
  }
}

TEST_CASE("text and JSON round trips are exact") {
  Rng rng(9);
  for (const Signature& sig : kSignatures) {
    const Multivector a = testing::random_multivector(sig, rng);
    CHECK(parse(sig, format(a)) == a);
    CHECK(from_json(to_json(a)) == a);
    const Multivector z = testing::random_complex_multivector(sig, rng);
    CHECK(parse(sig, format(z)) == z);
    CHECK(from_json(to_json(z)) == z);
  }
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"sig":[2,0,0],"terms":[{"blade":[7]}]})")), Error);
}

TEST_CASE("pseudoscalar") {
  const Signature c3(3, 0);
  CHECK(pseudoscalar(c3) == mv(c3, "e123"));
  CHECK(pseudoscalar(c3, -1) == mv(c3, "-e123"));
}
