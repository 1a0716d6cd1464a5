#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qnt {

/// Arbitrary-precision exact rational; always stored in lowest terms.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact `num/den` rendering. Integers keep the `/1` suffix so every
/// rational field parses the same way.
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

/// An integer or half-integer label (n, m in the integer representation).
/// Stored as twice its value so the arithmetic never touches floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }
  /// Label n of the d = 2n+1 dimensional representation.
  static constexpr HalfInt from_dimension(std::size_t d) {
    return HalfInt(static_cast<std::int64_t>(d) - 1);
  }
  /// Accepts "2", "-3", "3/2", "-1/2" and decimal halves such as "1.5".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  Rational value() const { return Rational(twice_, 2); }
  constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }
  /// Dimension 2n+1 of the representation labelled by this value.
  constexpr std::size_t dimension() const { return static_cast<std::size_t>(twice_ + 1); }
  std::string str() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// Univariate polynomial with exact rational coefficients, ascending degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);

  static RationalPolynomial constant(const Rational& c);
  /// a + b·x
  static RationalPolynomial linear(const Rational& a, const Rational& b);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& s) const;
  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "-x^3 + x".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Dense square-or-rectangular matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c);
  const Rational& operator()(std::size_t r, std::size_t c) const;

  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& s) const;
  bool operator==(const RationalMatrix& o) const = default;

  Rational trace() const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// det(A − x·I) with exact coefficients (Faddeev–LeVerrier recursion).
/// Throws std::invalid_argument for non-square input.
RationalPolynomial char_poly_exact(const RationalMatrix& a);

}  // namespace qnt
