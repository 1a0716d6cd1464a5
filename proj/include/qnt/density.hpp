#pragma once

#include <vector>

#include "qnt/matrix.hpp"

namespace qnt {

/// Hermitian, unit-trace, positive-semidefinite operator.
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kDefaultPsdTolerance = 1e-12;

  /// Validates every invariant; throws std::invalid_argument naming the
  /// first violated one. `psd_tolerance` bounds how negative an eigenvalue
  /// may be before the input is rejected.
  static DensityMatrix from_matrix(ComplexMatrix m, double psd_tolerance = kDefaultPsdTolerance);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dimension() const { return m_.rows(); }
  /// Tr(ρ²)
  double purity() const;
  std::vector<double> eigenvalues() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

}  // namespace qnt
