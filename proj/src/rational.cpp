#include "qnt/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace qnt {

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

HalfInt HalfInt::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not an integer or half-integer: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (s.empty()) fail();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail();
    return v;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 1) return from_int(num);
    if (den != 2) fail();
    return from_twice(num);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto frac = text.substr(dot + 1);
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);
    auto whole_text = text.substr(0, dot);
    const bool negative = !whole_text.empty() && whole_text.front() == '-';
    const auto whole = whole_text == "-" ? 0 : parse_int(whole_text);
    if (frac.empty()) return from_int(whole);
    if (frac != "5") fail();
    return from_twice(2 * whole + (negative ? -1 : 1));
  }
  return from_int(parse_int(text));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::linear(const Rational& a, const Rational& b) {
  return RationalPolynomial({a, b});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coefficient(k) + o.coefficient(k);
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  return *this + o * Rational(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= s;
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) {
      if (denominator(mag) == 1) {
        out += numerator(mag).str();
      } else {
        out += "(" + numerator(mag).str() + "/" + denominator(mag).str() + ")";
      }
    }
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational& RationalMatrix::operator()(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix index out of range");
  return data_[r * cols_ + c];
}

const Rational& RationalMatrix::operator()(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("RationalMatrix index out of range");
  return data_[r * cols_ + c];
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  RationalMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.data_[i * o.cols_ + j] += a * o.data_[k * o.cols_ + j];
    }
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += data_[i * cols_ + i];
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

RationalPolynomial char_poly_exact(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly_exact: matrix is not square");
  const std::size_t n = a.rows();

  // det(xI − A) = Σ c_k x^k with c_n = 1;
  // M_k = A·M_{k−1} + c_{n−k+1}·I,  c_{n−k} = −tr(A·M_k)/k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    c[n - k] = -(a * m).trace() / Rational(static_cast<long long>(k));
  }

  RationalPolynomial monic(std::move(c));
  // det(A − xI) = (−1)^n det(xI − A)
  return n % 2 == 0 ? monic : monic * Rational(-1);
}

}  // namespace qnt
