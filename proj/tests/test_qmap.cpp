#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qnt/eigen.hpp"
#include "qnt/integer_rep.hpp"
#include "qnt/qmap.hpp"

using namespace qnt;
using namespace qnt::qmap;

namespace {

HalfInt half(std::int64_t twice) { return HalfInt::from_twice(twice); }

}  // namespace

TEST_CASE("T matrices at d=3") {
  const double a = 1.0 / std::sqrt(2.0), b = 1.0 / std::sqrt(6.0);
  const ComplexMatrix t1{{1, 0, 0}, {0, a, 0}, {-b, 0, b}, {0, -a, 0}, {0, 0, -1}};
  const ComplexMatrix t2{{1, 0, 0}, {0, a, 0}, {b, 0, b}, {0, a, 0}, {0, 0, 1}};
  const ComplexMatrix t3{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(max_abs_diff(build_T(1, 3).matrix, t1) < 1e-15);
  CHECK(max_abs_diff(build_T(2, 3).matrix, t2) < 1e-15);
  CHECK(build_T(3, 3).matrix == t3);
  CHECK(build_T(1, 3).matrix(0, 0) == cplx(1.0));
  CHECK(build_T(1, 3).matrix(1, 1).real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(build_T(1, 3).d_to == 5);
  CHECK_THROWS_AS(build_T(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_T(0, 3), std::invalid_argument);
}

TEST_CASE("compositions") {
  CHECK(compose_T(2, 5, 7).matrix == build_T(2, 5).matrix);
  const auto c = compose_T(3, 3, 7);
  CHECK(c.matrix.rows() == 7);
  CHECK(max_abs_diff(c.matrix.adjoint() * c.matrix, ComplexMatrix::identity(3)) == 0.0);
  const auto shape = compose_T(1, 3, 9);
  CHECK(shape.matrix.rows() == 9);
  CHECK(shape.matrix.cols() == 3);
  CHECK(shape.d_to == 9);
  CHECK_THROWS_AS(compose_T(1, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(compose_T(1, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(compose_T(1, 5, 3), std::invalid_argument);
}

TEST_CASE("retractions") {
  for (std::size_t d = 2; d <= 15; ++d) CHECK(build_R(3, d) == ComplexMatrix::identity(d));

  // hand product of the d=3 T1 above: 7/6 on the corners, 1 in the centre
  const ComplexMatrix r1{{7.0 / 6, 0, -1.0 / 6}, {0, 1, 0}, {-1.0 / 6, 0, 7.0 / 6}};
  CHECK(max_abs_diff(build_R(1, 3), r1) < 1e-15);
  CHECK(max_off_diagonal(R_in_eigenbasis(1, 3)) < 1e-12);

  const auto e1 = hermitian_eigenvalues(build_R(1, 3));
  const auto e2 = hermitian_eigenvalues(build_R(2, 3));
  for (std::size_t k = 0; k < 3; ++k) CHECK(e1[k] == doctest::Approx(e2[k]).epsilon(1e-14));
  CHECK(e1[0] == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("r(m) law") {
  CHECK(r_eigenvalue(3, half(0)) == Rational(4, 3));
  CHECK(r_eigenvalue(3, half(2)) == 1);
  CHECK(r_eigenvalue(3, half(-2)) == 1);
  CHECK(r_eigenvalue(5, half(0)) == Rational(6, 5));
  CHECK(r_eigenvalue(2, half(1)) == Rational(4, 3));
  CHECK_THROWS_AS(r_eigenvalue(3, half(4)), std::invalid_argument);
  CHECK_THROWS_AS(r_eigenvalue(3, half(1)), std::invalid_argument);

  for (std::size_t d = 2; d <= 15; ++d) {
    const HalfInt n = HalfInt::from_dimension(d);
    CHECK(r_eigenvalue(d, n) == Rational(4, static_cast<long long>(d + 1)));
    for (HalfInt m = n; m >= -n; m = m - HalfInt::from_int(1)) {
      CHECK(r_eigenvalue(d, m) == r_eigenvalue(d, -m));
      CHECK(r_eigenvalue(d, m) == norm_ratio(d, m));
    }
  }
}

TEST_CASE("R diagonal values in the eigenbasis") {
  for (int p = 1; p <= 2; ++p)
    for (std::size_t d : {3, 5, 7, 9}) {
      const RReport r = r_report(p, d);
      CHECK(r.off_diagonal < 1e-12);
      CHECK(r.law_residual < 1e-10);
      CHECK(r.oracle_residual < 1e-10);
      // direct quotient |T v|^2 / |v|^2 for the first-component-1 eigenvectors
      const auto t = build_T(p, d).matrix;
      for (const auto& e : integer::z_eigensystem(p, d)) {
        const double ratio = std::pow(norm(t * e.vector), 2) / std::pow(e.norm, 2);
        CHECK(ratio == doctest::Approx(to_double(r_eigenvalue(d, e.m))).epsilon(1e-12));
      }
    }
  for (int p = 1; p <= 3; ++p)
    for (std::size_t d : {3, 5, 7}) CHECK(r_report(p, d).homomorphism_residual < 1e-8);
}

TEST_CASE("rational set") {
  const auto w = rational_set(3);
  for (const Rational& x : {Rational(4, 3), Rational(1), Rational(-4, 3), Rational(-1)}) CHECK(w.count(x) == 1);
  for (std::size_t dmax : {2, 5, 9}) {
    const auto s = rational_set(dmax);
    for (const auto& x : s) {
      CHECK(x != 0);
      CHECK(s.count(-x) == 1);
    }
  }
  CHECK(rational_set(3).size() == 4);
  CHECK_THROWS_AS(rational_set(1), std::invalid_argument);
}
