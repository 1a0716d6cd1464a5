#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qnt/eigen.hpp"
#include "qnt/error.hpp"
#include "qnt/integer_rep.hpp"

using namespace qnt;
using namespace qnt::integer;

namespace {

const cplx I(0.0, 1.0);
const double r2 = 1.0 / std::sqrt(2.0);

std::vector<Rational> coeffs(std::initializer_list<Rational> ascending) { return ascending; }

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("canonical matrices") {
  CHECK(build_Z(3, 3) == ComplexMatrix::diagonal({1.0, 0.0, -1.0}));
  const ComplexMatrix z1{{0, r2, 0}, {r2, 0, r2}, {0, r2, 0}};
  CHECK(max_abs_diff(build_Z(1, 3), z1) < 1e-15);
  const ComplexMatrix z2{{0, -I * r2, 0}, {I * r2, 0, -I * r2}, {0, I * r2, 0}};
  CHECK(max_abs_diff(build_Z(2, 3), z2) < 1e-15);
  const ComplexMatrix half_sigma1{{0, 0.5}, {0.5, 0}};
  CHECK(build_Z(1, 2) == half_sigma1);
  CHECK_THROWS_AS(build_Z(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_Z(4, 3), std::invalid_argument);
}

TEST_CASE("element formula against a direct evaluation") {
  for (std::size_t d = 2; d <= 12; ++d) {
    const double n = (d - 1) / 2.0;
    const auto z1 = build_Z(1, d);
    const auto z2 = build_Z(2, d);
    for (std::size_t r = 1; r <= d; ++r)
      for (std::size_t s = 1; s <= d; ++s) {
        const double rad = (n + 1) * (r + s - 1.0) - double(r) * double(s);
        const double up = (r == s + 1) ? 1.0 : 0.0;
        const double dn = (r + 1 == s) ? 1.0 : 0.0;
        const double root = (up + dn) > 0 ? std::sqrt(rad) : 0.0;
        CHECK(std::abs(z1(r - 1, s - 1) - 0.5 * (up + dn) * root) < 1e-14);
        CHECK(std::abs(z2(r - 1, s - 1) - 0.5 * I * (up - dn) * root) < 1e-14);
      }
  }
}

TEST_CASE("ladder operators") {
  const auto lower = ladder_Z(natural::Direction::lower, 3);
  CHECK(lower(1, 0).real() == doctest::Approx(std::sqrt(2.0)));
  const auto raise = ladder_Z(natural::Direction::raise, 3);
  const std::vector<cplx> top{1.0, 0.0, 0.0};
  for (const auto& x : raise * top) CHECK(std::abs(x) < 1e-16);
  const ComplexMatrix expected{{0, 1}, {0, 0}};
  CHECK(max_abs_diff(ladder_Z(natural::Direction::raise, 2), expected) < 1e-16);

  for (std::size_t d = 2; d <= 10; ++d) {
    const auto zp = ladder_Z(natural::Direction::raise, d);
    const auto zm = ladder_Z(natural::Direction::lower, d);
    CHECK(max_abs_diff(commutator(zp, zm), cplx(2.0) * build_Z(3, d)) < 1e-12);
  }
}

TEST_CASE("eigenvectors with first component 1") {
  auto v = z_eigensystem(1, 3);
  REQUIRE(v.size() == 3);
  CHECK(v[0].m == HalfInt::from_int(1));
  CHECK(std::abs(v[0].vector[1] - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(v[0].vector[2] - 1.0) < 1e-12);
  CHECK(v[0].norm == doctest::Approx(2.0));
  CHECK(v[1].m == HalfInt::from_int(0));
  CHECK(std::abs(v[1].vector[0] - 1.0) < 1e-15);
  CHECK(std::abs(v[1].vector[1]) < 1e-12);
  CHECK(std::abs(v[1].vector[2] + 1.0) < 1e-12);
  CHECK(v[1].norm == doctest::Approx(std::sqrt(2.0)));

  v = z_eigensystem(1, 2);
  CHECK(v[0].m == HalfInt::from_twice(1));
  CHECK(std::abs(v[0].vector[1] - 1.0) < 1e-12);
  CHECK(v[0].norm == doctest::Approx(std::sqrt(2.0)));

  for (int p = 1; p <= 3; ++p)
    for (std::size_t d = 2; d <= 11; ++d) {
      const auto z = build_Z(p, d);
      for (const auto& e : z_eigensystem(p, d)) {
        const auto zv = z * e.vector;
        for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(zv[i] - e.m.to_double() * e.vector[i]) < 1e-10);
      }
    }
}

TEST_CASE("norm formula") {
  CHECK(closed_form_norm_squared(HalfInt::from_int(1), HalfInt::from_int(1)) == 4);
  CHECK(closed_form_norm_squared(HalfInt::from_twice(3), HalfInt::from_twice(1)) == Rational(8 * 2, 6));
  for (int p = 1; p <= 2; ++p)
    for (std::size_t d = 2; d <= 11; ++d)
      for (const auto& e : z_eigensystem(p, d)) {
        const double n = (d - 1) / 2.0, m = e.m.to_double();
        // 2^n sqrt((n+m)!(n-m)!/(2n)!) in floating point
        const double expected = std::pow(2.0, n) * std::sqrt(factorial(int(n + m)) * factorial(int(n - m)) /
                                                             factorial(int(2 * n)));
        CHECK(std::abs(e.norm - expected) / expected <= 1e-9);
        CHECK(closed_form_norm(HalfInt::from_dimension(d), e.m) == doctest::Approx(expected).epsilon(1e-14));
      }
  CHECK_THROWS_AS(closed_form_norm(HalfInt::from_int(1), HalfInt::from_twice(1)), std::invalid_argument);
}

TEST_CASE("Lie algebra and Casimir") {
  for (std::size_t d = 2; d <= 15; ++d) {
    const auto z = ZRep::build(d);
    const double tol = 1e-12 * static_cast<double>(d);
    CHECK(max_abs_diff(commutator(z.z1, z.z2), I * z.z3) <= tol);
    CHECK(max_abs_diff(commutator(z.z2, z.z3), I * z.z1) <= tol);
    CHECK(max_abs_diff(commutator(z.z3, z.z1), I * z.z2) <= tol);
    for (int p = 1; p <= 3; ++p) {
      CHECK(hermitian_defect(z.component(p)) == 0.0);
      CHECK(std::abs(z.component(p).trace()) < 1e-14);
    }
    const auto res = casimir_check(d);
    CHECK(res.casimir_residual <= tol);
    CHECK(res.commutator_residual <= tol);
  }
  CHECK(casimir_check(3).value == 2);
  CHECK(casimir_check(2).value == Rational(3, 4));
  CHECK(casimir_check(7).value == 12);
  CHECK_THROWS_AS(casimir_check(5, 0.0), NumericalError);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly_D(HalfInt::from_int(3)) == RationalPolynomial(coeffs({0, 36, 0, -49, 0, 14, 0, -1})));
  CHECK(char_poly_D(HalfInt::from_twice(1)) == RationalPolynomial(coeffs({Rational(-1, 4), 0, 1})));
  CHECK(char_poly_D(HalfInt::from_twice(5)) ==
        RationalPolynomial(coeffs({Rational(-225, 64), 0, Rational(259, 16), 0, Rational(-35, 4), 0, 1})));
  for (std::int64_t t = 1; t <= 10; ++t) {
    const HalfInt n = HalfInt::from_twice(t);
    const auto d = char_poly_D(n);
    CHECK(char_poly_exact(build_Z3_exact(n.dimension())) == d);
    for (std::int64_t k = -t; k <= t; k += 2) CHECK(d.evaluate(Rational(k, 2)) == 0);
    if (n.is_integer())
      for (const auto& c : d.coefficients()) CHECK(denominator(c) == 1);
  }
  CHECK_THROWS_AS(char_poly_D(HalfInt::from_int(0)), std::invalid_argument);
}
