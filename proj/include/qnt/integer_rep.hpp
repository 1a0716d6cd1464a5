#pragma once

#include <vector>

#include "qnt/matrix.hpp"
#include "qnt/natural_rep.hpp"
#include "qnt/rational.hpp"

namespace qnt::integer {

using natural::Direction;

/// Canonical Z_p in dimension d = 2n+1, basis ordered so that Z₃ reads
/// diag(n, n−1, …, −n). With 1-based r, s:
///   (Z₁)_rs = ½(δ_{r,s+1} + δ_{r+1,s}) √((n+1)(r+s−1) − rs)
///   (Z₂)_rs = (i/2)(δ_{r,s+1} − δ_{r+1,s}) √((n+1)(r+s−1) − rs)
///   (Z₃)_rs = (n+1−r) δ_rs
/// Throws std::invalid_argument for p ∉ {1,2,3} or d < 2.
ComplexMatrix build_Z(int p, std::size_t d);

/// Z₃ as an exact rational matrix.
RationalMatrix build_Z3_exact(std::size_t d);

/// Z± = Z₁ ± iZ₂.
ComplexMatrix ladder_Z(Direction direction, std::size_t d);

/// The three components of one representation.
struct ZRep {
  HalfInt n;
  std::size_t d = 0;
  ComplexMatrix z1, z2, z3;

  static ZRep build(std::size_t d);
  const ComplexMatrix& component(int p) const;
  /// Z₁² + Z₂² + Z₃²
  ComplexMatrix casimir() const;
};

/// Eigenvector of Z_p scaled so that its first nonzero component is 1.
struct ZEigenvector {
  int component = 1;
  HalfInt m;
  std::vector<cplx> vector;
  double norm = 0.0;
};

/// d eigenpairs of Z_p ordered m = n, n−1, …, −n. Throws NumericalError if
/// an eigenvalue is more than 1e−10 from its half-integer.
std::vector<ZEigenvector> z_eigensystem(int p, std::size_t d);

/// 2ⁿ √((n+m)!(n−m)!/(2n)!), the norm of a first-component-1 eigenvector.
double closed_form_norm(HalfInt n, HalfInt m);
/// Square of closed_form_norm as an exact rational times 2^{2n}:
/// 2^{2n} (n+m)!(n−m)!/(2n)!.
Rational closed_form_norm_squared(HalfInt n, HalfInt m);

struct CasimirResult {
  Rational value;           // n(n+1)
  double casimir_residual;  // max |Z² − n(n+1)I|
  double commutator_residual;  // max_p max |[Z², Z_p]|
};

/// Verifies Z² = n(n+1)I and [Z², Z_p] = 0 within `tolerance`; throws
/// NumericalError carrying the residual otherwise.
CasimirResult casimir_check(std::size_t d, double tolerance = 1e-12);

/// D(x) = Π_{k=−n}^{+n} (k − x), expanded exactly.
RationalPolynomial char_poly_D(HalfInt n);

}  // namespace qnt::integer
