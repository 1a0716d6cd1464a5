#include "qnt/sun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qnt/eigen.hpp"
#include "qnt/error.hpp"
#include "qnt/integer_rep.hpp"

namespace qnt::sun {

namespace {

const cplx kI(0.0, 1.0);

}  // namespace

Z3Basis z3_basis_operators() {
  const auto rep = integer::ZRep::build(3);
  return {rep.z1,
          rep.z2,
          rep.z3,
          anticommutator(rep.z1, rep.z2),
          anticommutator(rep.z2, rep.z3),
          anticommutator(rep.z3, rep.z1),
          rep.z1 * rep.z1,
          rep.z2 * rep.z2};
}

GellMannSet gellmann_from_Z() {
  const Z3Basis z = z3_basis_operators();
  const ComplexMatrix id = ComplexMatrix::identity(3);
  const cplx r2(1.0 / std::sqrt(2.0));
  const cplx r3(1.0 / std::sqrt(3.0));
  GellMannSet g;
  g.lambdas[0] = r2 * (z.z1 + z.z3z1);
  g.lambdas[1] = r2 * (z.z2 + z.z2z3);
  g.lambdas[2] = cplx(2.0) * id + cplx(0.5) * (z.z3 - cplx(3.0) * z.z1_sq - cplx(3.0) * z.z2_sq);
  g.lambdas[3] = z.z1_sq - z.z2_sq;
  g.lambdas[4] = z.z1z2;
  g.lambdas[5] = r2 * (z.z1 - z.z3z1);
  g.lambdas[6] = r2 * (z.z2 - z.z2z3);
  g.lambdas[7] = r3 * (cplx(-2.0) * id + cplx(1.5) * (z.z3 + z.z1_sq + z.z2_sq));
  return g;
}

GellMannSet gellmann_standard() {
  const cplx i = kI;
  const double s = 1.0 / std::sqrt(3.0);
  GellMannSet g;
  g.lambdas[0] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
  g.lambdas[1] = {{0, -i, 0}, {i, 0, 0}, {0, 0, 0}};
  g.lambdas[2] = {{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
  g.lambdas[3] = {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
  g.lambdas[4] = {{0, 0, -i}, {0, 0, 0}, {i, 0, 0}};
  g.lambdas[5] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  g.lambdas[6] = {{0, 0, 0}, {0, 0, -i}, {0, i, 0}};
  g.lambdas[7] = {{s, 0, 0}, {0, s, 0}, {0, 0, -2 * s}};
  return g;
}

StructureConstants structure_constants(const GellMannSet& g) {
  StructureConstants out;
  for (int b = 0; b < 8; ++b) {
    for (int c = 0; c < 8; ++c) {
      const ComplexMatrix comm = commutator(g.lambdas[b], g.lambdas[c]);
      const ComplexMatrix anti = anticommutator(g.lambdas[b], g.lambdas[c]);
      for (int a = 0; a < 8; ++a) {
        out.f[a][b][c] = (-0.25 * kI * (g.lambdas[a] * comm).trace()).real();
        out.dsym[a][b][c] = (0.25 * (g.lambdas[a] * anti).trace()).real();
      }
    }
  }
  return out;
}

CartanKilling cartan_killing(const StructureConstants& s) {
  CartanKilling out;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      double acc = 0.0;
      for (int c = 0; c < 8; ++c)
        for (int d = 0; d < 8; ++d) acc += s.f[a][c][d] * s.f[b][c][d];
      out.metric[a][b] = acc;
    }

  // Gauss–Jordan with partial pivoting
  Matrix8 work = out.metric;
  Matrix8& inv = out.inverse;
  for (int i = 0; i < 8; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 8; ++r)
      if (std::abs(work[r][col]) > std::abs(work[pivot][col])) pivot = r;
    if (std::abs(work[pivot][col]) < 1e-12) throw NumericalError("cartan_killing: metric is singular");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const double p = work[col][col];
    for (int k = 0; k < 8; ++k) {
      work[col][k] /= p;
      inv[col][k] /= p;
    }
    for (int r = 0; r < 8; ++r) {
      if (r == col || work[r][col] == 0.0) continue;
      const double factor = work[r][col];
      for (int k = 0; k < 8; ++k) {
        work[r][k] -= factor * work[col][k];
        inv[r][k] -= factor * inv[col][k];
      }
    }
  }
  return out;
}

ComplexMatrix casimir_su3(const GellMannSet& g) {
  ComplexMatrix c(3, 3);
  for (const auto& l : g.lambdas) c += l * l;
  return cplx(0.25) * c;
}

DensityMatrix qutrit_density(const std::array<double, 8>& b) {
  const GellMannSet g = gellmann_standard();
  ComplexMatrix m = ComplexMatrix::identity(3);
  for (int a = 0; a < 8; ++a) m += cplx(std::sqrt(3.0) * b[a]) * g.lambdas[a];
  return DensityMatrix::from_matrix(cplx(1.0 / 3.0) * m, 1e-10);
}

std::vector<ComplexMatrix> ggm_generators(std::size_t d) {
  if (d < 2) throw std::invalid_argument("ggm_generators: d must be >= 2, got " + std::to_string(d));
  std::vector<ComplexMatrix> out;
  out.reserve(d * d);
  const double shift = 1.0 / static_cast<double>(d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) {
      ComplexMatrix z(d, d);
      z(l, k) = 1.0;
      if (k == l)
        for (std::size_t i = 0; i < d; ++i) z(i, i) -= shift;
      out.push_back(std::move(z));
    }
  return out;
}

std::vector<RationalMatrix> ggm_generators_exact(std::size_t d) {
  if (d < 2) throw std::invalid_argument("ggm_generators_exact: d must be >= 2, got " + std::to_string(d));
  std::vector<RationalMatrix> out;
  out.reserve(d * d);
  const Rational shift(1, static_cast<long long>(d));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t k = 0; k < d; ++k) {
      RationalMatrix z(d, d);
      z(l, k) = 1;
      if (k == l)
        for (std::size_t i = 0; i < d; ++i) z(i, i) -= shift;
      out.push_back(std::move(z));
    }
  return out;
}

std::vector<ComplexMatrix> hermitian_generators(std::size_t d) {
  const auto z = ggm_generators(d);
  auto at = [&](std::size_t l, std::size_t k) -> const ComplexMatrix& { return z[l * d + k]; };
  std::vector<ComplexMatrix> out;
  out.reserve(d * d - 1);
  for (std::size_t k = 1; k < d; ++k)
    for (std::size_t j = 0; j < k; ++j) {
      out.push_back(at(j, k) + at(k, j));
      out.push_back(-kI * (at(j, k) - at(k, j)));
    }
  for (std::size_t k = 2; k <= d; ++k) {
    ComplexMatrix h(d, d);
    const double scale = std::sqrt(2.0 / static_cast<double>(k * (k - 1)));
    for (std::size_t l = 0; l + 1 < k; ++l) h(l, l) = scale;
    h(k - 1, k - 1) = -scale * static_cast<double>(k - 1);
    out.push_back(std::move(h));
  }
  return out;
}

double casimir_coefficient(std::size_t d) {
  ComplexMatrix c(d, d);
  for (const auto& h : hermitian_generators(d)) c += cplx(0.25) * (h * h);
  return c.trace().real() / static_cast<double>(d);
}

std::size_t span_rank(const std::vector<ComplexMatrix>& set, double tolerance) {
  const std::size_t n = set.size();
  if (n == 0) return 0;
  ComplexMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram(a, b) = (set[a].adjoint() * set[b]).trace();
  const auto values = hermitian_eigenvalues(gram);
  const double top = std::max(values.front(), 0.0);
  std::size_t rank = 0;
  for (double v : values)
    if (v > tolerance * std::max(top, 1.0)) ++rank;
  return rank;
}

}  // namespace qnt::sun
