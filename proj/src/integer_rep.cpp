#include "qnt/integer_rep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qnt/eigen.hpp"
#include "qnt/error.hpp"

namespace qnt::integer {

namespace {

void require_dimension(std::size_t d, const char* what) {
  if (d < 2) throw std::invalid_argument(std::string(what) + ": d must be >= 2, got " + std::to_string(d));
}

// (n+1)(r+s−1) − rs for s = r+1 reduces to r(d−r); evaluated with 2n+2 = d+1
// so half-integer n stays exact.
double off_diagonal_radicand(std::size_t d, std::size_t r, std::size_t s) {
  const auto di = static_cast<long long>(d);
  const auto ri = static_cast<long long>(r);
  const auto si = static_cast<long long>(s);
  const long long twice = (di + 1) * (ri + si - 1) - 2 * ri * si;
  return static_cast<double>(twice) / 2.0;
}

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

ComplexMatrix build_Z(int p, std::size_t d) {
  require_dimension(d, "build_Z");
  if (p < 1 || p > 3) throw std::invalid_argument("build_Z: component must be 1, 2 or 3");
  ComplexMatrix z(d, d);
  const HalfInt n = HalfInt::from_dimension(d);
  for (std::size_t r = 1; r <= d; ++r) {
    if (p == 3) {
      z(r - 1, r - 1) = n.to_double() + 1.0 - static_cast<double>(r);
      continue;
    }
    for (std::size_t s = 1; s <= d; ++s) {
      const bool below = r == s + 1;
      const bool above = r + 1 == s;
      if (!below && !above) continue;
      const double root = std::sqrt(off_diagonal_radicand(d, r, s));
      if (p == 1) {
        z(r - 1, s - 1) = 0.5 * root;
      } else {
        z(r - 1, s - 1) = cplx(0.0, below ? 0.5 * root : -0.5 * root);
      }
    }
  }
  return z;
}

RationalMatrix build_Z3_exact(std::size_t d) {
  require_dimension(d, "build_Z3_exact");
  RationalMatrix z(d, d);
  const Rational n = HalfInt::from_dimension(d).value();
  for (std::size_t r = 1; r <= d; ++r) z(r - 1, r - 1) = n + 1 - Rational(static_cast<long long>(r));
  return z;
}

ComplexMatrix ladder_Z(Direction direction, std::size_t d) {
  const cplx i(0.0, 1.0);
  const ComplexMatrix iz2 = i * build_Z(2, d);
  const ComplexMatrix z1 = build_Z(1, d);
  return direction == Direction::raise ? z1 + iz2 : z1 - iz2;
}

ZRep ZRep::build(std::size_t d) {
  require_dimension(d, "ZRep");
  return {HalfInt::from_dimension(d), d, build_Z(1, d), build_Z(2, d), build_Z(3, d)};
}

const ComplexMatrix& ZRep::component(int p) const {
  switch (p) {
    case 1: return z1;
    case 2: return z2;
    case 3: return z3;
    default: throw std::invalid_argument("ZRep: component must be 1, 2 or 3");
  }
}

ComplexMatrix ZRep::casimir() const { return z1 * z1 + z2 * z2 + z3 * z3; }

std::vector<ZEigenvector> z_eigensystem(int p, std::size_t d) {
  require_dimension(d, "z_eigensystem");
  const auto sys = hermitian_eigen(build_Z(p, d));
  const HalfInt n = HalfInt::from_dimension(d);

  std::vector<ZEigenvector> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lambda = sys.values[k];
    const HalfInt m = n - HalfInt::from_twice(2 * static_cast<std::int64_t>(k));
    if (std::abs(lambda - m.to_double()) > 1e-10) {
      std::ostringstream msg;
      msg << "z_eigensystem: eigenvalue " << lambda << " of Z" << p << " (d=" << d << ") is not m=" << m.str();
      throw NumericalError(msg.str());
    }
    auto v = sys.vectors.column(k);
    double biggest = 0.0;
    for (const auto& x : v) biggest = std::max(biggest, std::abs(x));
    std::size_t lead = 0;
    while (std::abs(v[lead]) <= 1e-8 * biggest) ++lead;
    const cplx scale = v[lead];
    for (auto& x : v) x /= scale;
    const double nrm = norm(v);
    out.push_back({p, m, std::move(v), nrm});
  }
  return out;
}

Rational closed_form_norm_squared(HalfInt n, HalfInt m) {
  if (m > n || m < -n || (n - m).twice() % 2 != 0) {
    throw std::invalid_argument("closed_form_norm: m=" + m.str() + " is not a label of n=" + n.str());
  }
  const std::int64_t plus = (n + m).twice() / 2;
  const std::int64_t minus = (n - m).twice() / 2;
  const std::int64_t two_n = n.twice();
  return Rational(BigInt(1) << static_cast<unsigned>(two_n)) * Rational(factorial(plus) * factorial(minus)) /
         Rational(factorial(two_n));
}

double closed_form_norm(HalfInt n, HalfInt m) { return std::sqrt(to_double(closed_form_norm_squared(n, m))); }

CasimirResult casimir_check(std::size_t d, double tolerance) {
  const ZRep rep = ZRep::build(d);
  const Rational value = rep.n.value() * (rep.n.value() + 1);
  const ComplexMatrix z2 = rep.casimir();

  CasimirResult out{value, max_abs_diff(z2, ComplexMatrix::identity(d) * cplx(to_double(value))), 0.0};
  for (int p = 1; p <= 3; ++p) out.commutator_residual = std::max(out.commutator_residual, commutator(z2, rep.component(p)).max_abs());

  if (out.casimir_residual > tolerance || out.commutator_residual > tolerance) {
    std::ostringstream msg;
    msg << "casimir_check: d=" << d << " residual |Z^2 - n(n+1)I| = " << out.casimir_residual
        << ", |[Z^2, Z_p]| = " << out.commutator_residual << " exceed " << tolerance;
    throw NumericalError(msg.str());
  }
  return out;
}

RationalPolynomial char_poly_D(HalfInt n) {
  if (n.twice() < 1) throw std::invalid_argument("char_poly_D: n must be >= 1/2");
  RationalPolynomial acc = RationalPolynomial::constant(1);
  for (std::int64_t k2 = -n.twice(); k2 <= n.twice(); k2 += 2) {
    acc = acc * RationalPolynomial::linear(Rational(k2, 2), Rational(-1));
  }
  return acc;
}

}  // namespace qnt::integer
