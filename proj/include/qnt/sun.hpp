#pragma once

#include <array>
#include <vector>

#include "qnt/density.hpp"
#include "qnt/matrix.hpp"
#include "qnt/rational.hpp"

namespace qnt::sun {

/// The eight quadratic-or-lower operators built from the d = 3 Z-components.
struct Z3Basis {
  ComplexMatrix z1, z2, z3;
  ComplexMatrix z1z2;  // {Z₁,Z₂}
  ComplexMatrix z2z3;  // {Z₂,Z₃}
  ComplexMatrix z3z1;  // {Z₃,Z₁}
  ComplexMatrix z1_sq, z2_sq;
};

Z3Basis z3_basis_operators();

/// λ₁…λ₈, stored at index a−1.
struct GellMannSet {
  std::array<ComplexMatrix, 8> lambdas;
  const ComplexMatrix& operator[](int a) const { return lambdas.at(static_cast<std::size_t>(a - 1)); }
};

/// λ_a as combinations of the Z3Basis operators, e.g.
/// λ₁ = (Z₁ + {Z₃,Z₁})/√2 and λ₃ = 2I + ½(Z₃ − 3Z₁² − 3Z₂²).
GellMannSet gellmann_from_Z();

/// Hard-coded textbook Gell-Mann matrices.
GellMannSet gellmann_standard();

using Tensor3 = std::array<std::array<std::array<double, 8>, 8>, 8>;

struct StructureConstants {
  Tensor3 f{};     // −(i/4) Tr(λ_a [λ_b, λ_c])
  Tensor3 dsym{};  // (1/4) Tr(λ_a {λ_b, λ_c})
  double f_at(int a, int b, int c) const { return f[a - 1][b - 1][c - 1]; }
  double d_at(int a, int b, int c) const { return dsym[a - 1][b - 1][c - 1]; }
};

StructureConstants structure_constants(const GellMannSet& g);

using Matrix8 = std::array<std::array<double, 8>, 8>;

struct CartanKilling {
  Matrix8 metric{};   // g_ab = f_acd f_bcd
  Matrix8 inverse{};
};

/// Throws NumericalError if the metric is singular.
CartanKilling cartan_killing(const StructureConstants& s);

/// ¼ Σ_a λ_a²
ComplexMatrix casimir_su3(const GellMannSet& g);

/// ⅓(I + √3 b·λ) with the standard λ set. Throws std::invalid_argument
/// ("not a state") when an eigenvalue falls below −1e−10.
DensityMatrix qutrit_density(const std::array<double, 8>& b);

/// (𝒵_l^k)_ij = δ_li δ_kj − (1/d) δ_kl δ_ij, returned at index (l−1)·d + (k−1).
std::vector<ComplexMatrix> ggm_generators(std::size_t d);
std::vector<RationalMatrix> ggm_generators_exact(std::size_t d);

/// d²−1 traceless Hermitian matrices with Tr(H_a H_b) = 2δ_ab: for each
/// pair j<k the symmetric 𝒵_j^k + 𝒵_k^j and antisymmetric −i(𝒵_j^k − 𝒵_k^j),
/// then for k = 2…d the diagonal √(2/(k(k−1)))·(Σ_{l<k} E_ll − (k−1)E_kk).
/// At d = 3 this reproduces λ₁…λ₈ up to ordering.
std::vector<ComplexMatrix> hermitian_generators(std::size_t d);

/// c with Σ_a 𝒵_a² = c·I for the generators rescaled to Tr(𝒵_a𝒵_b) = ½δ_ab,
/// computed as Tr(Σ𝒵²)/d.
double casimir_coefficient(std::size_t d);

/// Numerical rank of a set of matrices, each flattened to a vector.
std::size_t span_rank(const std::vector<ComplexMatrix>& set, double tolerance = 1e-10);

}  // namespace qnt::sun
