#pragma once

#include <set>
#include <vector>

#include "qnt/matrix.hpp"
#include "qnt/rational.hpp"

namespace qnt::qmap {

/// Linear map from the d_from-dimensional Z-representation into d_from + 2v.
struct QMapping {
  int p = 3;
  std::size_t d_from = 0;
  std::size_t d_to = 0;
  ComplexMatrix matrix;  // d_to × d_from
};

/// Single step d → d+2. With 1-based r ≤ d+2, s ≤ d and
/// P(j) = Π_{k=1}^{j} √((d−k)/(d+2−k)) (empty product 1):
///   (T₁)_rs = δ_rs P(r−1) − δ_{r,s+2} P(d−s)
///   (T₂)_rs = δ_rs P(r−1) + δ_{r,s+2} P(d−s)
///   (T₃)_rs = δ_{r,s+1}
QMapping build_T(int p, std::size_t d);

/// T(d_to−2 → d_to) ··· T(d_from → d_from+2).
QMapping compose_T(int p, std::size_t d_from, std::size_t d_to);

/// R_p = T_p† T_p, a d×d positive semidefinite matrix.
ComplexMatrix build_R(int p, std::size_t d);

/// 1 + 1/d − 4m²/(d(d+1)). Throws if m is not a label of the d-dimensional
/// representation.
Rational r_eigenvalue(std::size_t d, HalfInt m);

/// Ratio of squared eigenvector norms ⟨n+1,m|n+1,m⟩/⟨n,m|n,m⟩ from the
/// closed-form norm of the integer representation.
Rational norm_ratio(std::size_t d, HalfInt m);

/// {±r(d, m) : 2 ≤ d ≤ d_max} ∪ {±1}.
std::set<Rational> rational_set(std::size_t d_max);

/// R_p expressed in the orthonormalized Z_p eigenbasis, rows ordered
/// m = n, n−1, …, −n.
ComplexMatrix R_in_eigenbasis(int p, std::size_t d);

struct RRow {
  HalfInt m;
  double computed = 0.0;  // diagonal of R_p in the eigenbasis
  Rational law;           // r_eigenvalue
  Rational oracle;        // norm_ratio
};

struct RReport {
  int p = 1;
  std::size_t d = 0;
  std::vector<RRow> rows;
  double off_diagonal = 0.0;   // max off-diagonal of R in the eigenbasis
  double law_residual = 0.0;   // max |computed − law|
  double oracle_residual = 0.0;  // max |computed − oracle|
  double homomorphism_residual = 0.0;  // max ‖Z_p^{(d+2)} T v − m T v‖∞ over unit eigenvectors v
};

RReport r_report(int p, std::size_t d);

}  // namespace qnt::qmap
