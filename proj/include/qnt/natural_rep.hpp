#pragma once

#include <cstdint>
#include <optional>

#include "qnt/matrix.hpp"
#include "qnt/rational.hpp"

namespace qnt::natural {

enum class Direction { raise, lower };
enum class Parity { even, odd };

/// Square root of a natural number, kept exactly as its square.
class LadderCoefficient {
 public:
  constexpr explicit LadderCoefficient(std::uint64_t square = 0) : square_(square) {}
  constexpr std::uint64_t square() const { return square_; }
  double value() const;
  constexpr bool operator==(const LadderCoefficient&) const = default;

 private:
  std::uint64_t square_;
};

/// [N+] (raise, superdiagonal) or [N−] (lower, subdiagonal) truncated to
/// dim×dim. Even entries are √2, √4, …; odd entries are √3, √5, …
/// Throws std::invalid_argument for dim < 2.
ComplexMatrix ladder_matrix(Direction direction, Parity parity, std::size_t dim);

/// diag(0, 2, 4, …) for even; diag(0, 3, 5, 7, …) for odd (the odd block's
/// first ket carries 0 until regularized). Throws for dim < 1.
ComplexMatrix number_matrix(Parity parity, std::size_t dim);

/// Odd number block with the first entry regularized to 1: diag(1, 3, 5, …).
ComplexMatrix regularized_odd_number_matrix(std::size_t dim);

/// Faithful number matrix on 2·block_dim kets:
///   [N]^e ⊗ E₀₀ + ([N]^o + E₁₁) ⊗ E₁₁
/// which interleaves the parity blocks so the diagonal reads 0, 1, 2, …, 2b−1.
/// Throws for block_dim < 1.
ComplexMatrix assemble_full_N(std::size_t block_dim);

/// One symbolic ladder step on the label n.
struct LadderStep {
  LadderCoefficient coefficient;
  /// Resulting label, or nullopt when the step leaves ℕ and is absorbed.
  std::optional<std::uint64_t> target;
  /// Label the formula would produce before absorption (may be −1 or −2).
  std::int64_t formal_target = 0;

  bool absorbed() const { return !target.has_value(); }
};

/// raise: N₊|n⟩ = √n |n−2⟩, absorbed for n ∈ {0, 1};
/// lower: N₋|n⟩ = √(n+2) |n+2⟩.
LadderStep ladder_apply(std::uint64_t n, Direction direction);

/// |n⟩ = coefficient · (N₋)^power |seed⟩ with coefficient = 1/√(n!!).
struct SeedExpansion {
  unsigned seed = 0;          // 0 or 1
  std::uint64_t power = 0;
  BigInt double_factorial;    // n!! computed exactly
  double coefficient = 0.0;   // 1/√(n!!)

  /// coefficient² as the exact rational 1/n!!.
  Rational coefficient_squared() const { return Rational(BigInt(1), double_factorial); }
};

/// Throws std::invalid_argument for n < 2 (the seeds themselves).
SeedExpansion qnsv_from_seed(std::uint64_t n);

/// n!! = n·(n−2)·…, with 0!! = (−1)!! = 1.
BigInt double_factorial(std::uint64_t n);

}  // namespace qnt::natural
