#pragma once

#include <vector>

#include "qnt/density.hpp"
#include "qnt/matrix.hpp"
#include "qnt/qunit.hpp"

namespace qnt {

enum class WeightPolicy { strict, normalize };

/// Weighted collection of qunits sharing one dimension. Members need not be
/// orthogonal and may outnumber the dimension.
class Ensemble {
 public:
  /// Each member must be normalized to 1e−9 and weights nonnegative.
  /// Under WeightPolicy::strict the weights must already sum to 1 within
  /// 1e−12; WeightPolicy::normalize rescales them instead.
  Ensemble(std::vector<Qunit> members, std::vector<double> weights, WeightPolicy policy = WeightPolicy::strict);

  /// A single member with weight 1.
  static Ensemble pure(Qunit member);
  /// d equally weighted canonical basis kets of the natural basis.
  static Ensemble completely_random(std::size_t d);

  const std::vector<Qunit>& members() const { return members_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t dimension() const { return members_.front().dimension(); }

 private:
  std::vector<Qunit> members_;
  std::vector<double> weights_;
};

/// ρ = Σᵢ wᵢ |Qⁱ⟩⟨Qⁱ|
DensityMatrix density_from_ensemble(const Ensemble& e);

/// Σᵢ wᵢ ⟨Qⁱ|A|Qⁱ⟩ for Hermitian A. Throws on dimension mismatch or
/// non-Hermitian A.
double ensemble_average(const ComplexMatrix& op, const Ensemble& e);

/// Tr(ρA)
double expectation(const DensityMatrix& rho, const ComplexMatrix& op);

/// −Σ λ ln λ over the eigenvalues of ρ; eigenvalues below 1e−14 count as 0.
double omega_entropy(const DensityMatrix& rho);

/// log₂ d. Throws for d < 1.
double shannon_bits(std::size_t d);

/// Kronecker product of the factors; an empty list yields the 1×1 state [1].
DensityMatrix product_density(const std::vector<DensityMatrix>& factors);

/// (1/d)·I
DensityMatrix maximally_mixed(std::size_t d);

}  // namespace qnt
