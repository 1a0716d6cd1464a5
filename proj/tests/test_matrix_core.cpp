#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qnt/eigen.hpp"
#include "qnt/integer_rep.hpp"
#include "qnt/matrix.hpp"
#include "qnt/rational.hpp"
#include "support.hpp"

using namespace qnt;

namespace {

const cplx I(0.0, 1.0);

// det by Gaussian elimination over the rationals
Rational det_oracle(RationalMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

}  // namespace

TEST_CASE("bounds-checked access") {
  ComplexMatrix m(2, 3);
  CHECK_THROWS_AS(m(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m(0, 3), std::out_of_range);
  RationalMatrix q(2, 2);
  CHECK_THROWS_AS(q(0, 2), std::out_of_range);
}

TEST_CASE("commutator examples") {
  const ComplexMatrix a{{1, 2}, {3, 4}};
  CHECK(commutator(ComplexMatrix::identity(2), a).max_abs() == 0.0);

  const ComplexMatrix s1 = integer::build_Z(1, 2), s2 = integer::build_Z(2, 2), s3 = integer::build_Z(3, 2);
  CHECK(max_abs_diff(commutator(s1, s2), I * s3) < 1e-15);

  const ComplexMatrix expected{{0, 0, -I}, {0, 0, 0}, {I, 0, 0}};
  CHECK(max_abs_diff(anticommutator(integer::build_Z(1, 3), integer::build_Z(2, 3)), expected) < 1e-15);

  CHECK_THROWS_AS(commutator(ComplexMatrix::identity(2), ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("hermitian_eigen examples") {
  auto v = hermitian_eigenvalues(ComplexMatrix::diagonal({-1.0, 1.0, 0.0}));
  CHECK(v == std::vector<double>{1.0, 0.0, -1.0});

  v = hermitian_eigenvalues(integer::build_Z(1, 3));
  REQUIRE(v.size() == 3);
  CHECK(v[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v[1]) < 1e-14);
  CHECK(v[2] == doctest::Approx(-1.0).epsilon(1e-14));

  v = hermitian_eigenvalues(integer::build_Z(3, 5));
  CHECK(v == std::vector<double>{2.0, 1.0, 0.0, -1.0, -2.0});
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  const ComplexMatrix m{{1, 2}, {0, 1}};
  try {
    (void)hermitian_eigen(m);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("not Hermitian") != std::string::npos);
    CHECK(std::string(e.what()).find("= 2 at") != std::string::npos);
  }
}

TEST_CASE("hermitian_eigen reconstruction on random Hermitian matrices") {
  std::mt19937_64 rng(7);
  for (std::size_t d = 1; d <= 15; ++d) {
    for (int trial = 0; trial < 3; ++trial) {
      const ComplexMatrix a = testing::random_hermitian(rng, d);
      const EigenSystem es = hermitian_eigen(a);
      const double scale = 1e-10 * (1.0 + a.max_abs());
      ComplexMatrix lambda(d, d);
      for (std::size_t k = 0; k < d; ++k) {
        lambda(k, k) = es.values[k];
        if (k) CHECK(es.values[k - 1] >= es.values[k]);
        const auto vk = es.vectors.column(k);
        const auto av = a * vk;
        for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(av[i] - es.values[k] * vk[i]) <= scale);
      }
      CHECK(max_abs_diff(es.vectors * lambda * es.vectors.adjoint(), a) <= scale);
      CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(d)) <= 1e-10);
    }
  }
}

TEST_CASE("kron examples and associativity") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  const ComplexMatrix e00{{1, 0}, {0, 0}}, e11{{0, 0}, {0, 1}};
  CHECK(kron(ComplexMatrix::diagonal({0.0, 2.0}), e00) == ComplexMatrix::diagonal({0.0, 0.0, 2.0, 0.0}));
  CHECK(kron(e11, ComplexMatrix::diagonal({1.0, 3.0})) == ComplexMatrix::diagonal({0.0, 0.0, 1.0, 3.0}));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_matrix(rng, 2, 3);
    const auto b = testing::random_matrix(rng, 3, 2);
    const auto c = testing::random_matrix(rng, 2, 2);
    const auto left = kron(kron(a, b), c);
    const auto right = kron(a, kron(b, c));
    CHECK(left.rows() == 12);
    CHECK(left.cols() == 12);
    CHECK(max_abs_diff(left, right) <= 1e-14 * (1.0 + left.max_abs()));
  }
}

TEST_CASE("char_poly_exact examples") {
  CHECK(char_poly_exact(integer::build_Z3_exact(3)).str() == "-x^3 + x");
  CHECK(char_poly_exact(integer::build_Z3_exact(5)).str() == "-x^5 + 5x^3 - 4x");
  CHECK(char_poly_exact(integer::build_Z3_exact(4)).str() == "x^4 - (5/2)x^2 + (9/16)");
  CHECK_THROWS_AS(char_poly_exact(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("char_poly_exact agrees with elimination determinants") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    RationalMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(num(rng), den(rng));
    const RationalPolynomial p = char_poly_exact(a);
    CHECK(p.degree() == static_cast<int>(n));
    for (int x = -3; x <= static_cast<int>(n) + 3; ++x) {
      const Rational xr(x, 2);
      CHECK(p.evaluate(xr) == det_oracle(a - RationalMatrix::identity(n) * xr));
    }
  }
}

TEST_CASE("rational formatting and half-integers") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-9, 6)) == "-3/2");
  CHECK(HalfInt::parse("3/2").twice() == 3);
  CHECK(HalfInt::parse("1.5").twice() == 3);
  CHECK(HalfInt::parse("-0.5").twice() == -1);
  CHECK(HalfInt::parse("2").str() == "2");
  CHECK(HalfInt::from_dimension(4).str() == "3/2");
  CHECK_THROWS_AS(HalfInt::parse("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(HalfInt::parse("x"), std::invalid_argument);

  const auto p = RationalPolynomial::linear(1, 1) * RationalPolynomial::linear(-1, 1);
  CHECK(p.str() == "x^2 - 1");
  CHECK(p.evaluate(Rational(1, 2)) == Rational(-3, 4));
  CHECK(RationalPolynomial().degree() == -1);
}
