#pragma once

#include <vector>

#include "qnt/matrix.hpp"

namespace qnt {

/// Eigendecomposition of a Hermitian matrix.
/// `values` are sorted descending; column k of `vectors` is the unit
/// eigenvector for values[k].
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Input must be Hermitian to 1e−12·(1 + max|a_ij|);
/// otherwise std::invalid_argument reports the largest asymmetry.
/// Throws NumericalError if the sweeps fail to converge.
EigenSystem hermitian_eigen(const ComplexMatrix& a);

/// Eigenvalues only, descending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace qnt
