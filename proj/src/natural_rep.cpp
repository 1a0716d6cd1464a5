#include "qnt/natural_rep.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnt::natural {

double LadderCoefficient::value() const { return std::sqrt(static_cast<double>(square_)); }

ComplexMatrix ladder_matrix(Direction direction, Parity parity, std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("ladder_matrix: dim must be >= 2, got " + std::to_string(dim));
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    // kets of a block are |2i⟩ (even) or |2i+1⟩ (odd); N₊ maps index i+1 to i.
    const double square = parity == Parity::even ? 2.0 * static_cast<double>(i + 1)
                                                 : 2.0 * static_cast<double>(i) + 3.0;
    const double v = std::sqrt(square);
    if (direction == Direction::raise) {
      m(i, i + 1) = v;
    } else {
      m(i + 1, i) = v;
    }
  }
  return m;
}

ComplexMatrix number_matrix(Parity parity, std::size_t dim) {
  if (dim < 1) throw std::invalid_argument("number_matrix: dim must be >= 1");
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 1; i < dim; ++i) {
    m(i, i) = parity == Parity::even ? 2.0 * static_cast<double>(i) : 2.0 * static_cast<double>(i) + 1.0;
  }
  return m;
}

ComplexMatrix regularized_odd_number_matrix(std::size_t dim) {
  ComplexMatrix m = number_matrix(Parity::odd, dim);
  m(0, 0) = 1.0;
  return m;
}

ComplexMatrix assemble_full_N(std::size_t block_dim) {
  if (block_dim < 1) throw std::invalid_argument("assemble_full_N: block_dim must be >= 1");
  const ComplexMatrix e00{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix e11{{0.0, 0.0}, {0.0, 1.0}};
  return kron(number_matrix(Parity::even, block_dim), e00) +
         kron(regularized_odd_number_matrix(block_dim), e11);
}

LadderStep ladder_apply(std::uint64_t n, Direction direction) {
  if (direction == Direction::lower) {
    return {LadderCoefficient(n + 2), n + 2, static_cast<std::int64_t>(n) + 2};
  }
  const auto formal = static_cast<std::int64_t>(n) - 2;
  if (n < 2) return {LadderCoefficient(n), std::nullopt, formal};
  return {LadderCoefficient(n), n - 2, formal};
}

BigInt double_factorial(std::uint64_t n) {
  BigInt acc = 1;
  for (std::uint64_t k = n; k >= 2; k -= 2) acc *= k;
  return acc;
}

SeedExpansion qnsv_from_seed(std::uint64_t n) {
  if (n < 2) {
    throw std::invalid_argument("qnsv_from_seed: n must be >= 2 (|0> and |1> are the seeds), got " +
                                std::to_string(n));
  }
  SeedExpansion out;
  out.seed = static_cast<unsigned>(n % 2);
  out.power = n / 2;
  out.double_factorial = double_factorial(n);
  out.coefficient = 1.0 / std::sqrt(out.double_factorial.convert_to<double>());
  return out;
}

}  // namespace qnt::natural
