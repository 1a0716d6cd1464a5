#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qnt/density.hpp"
#include "qnt/matrix.hpp"
#include "qnt/natural_rep.hpp"
#include "qnt/rational.hpp"

namespace qnt {

enum class BasisKind { natural, integer };

/// A superposition of basis kets. In the natural basis the labels are
/// 0, 1, …, truncation; in the integer basis of label n they are
/// m = n, n−1, …, −n (the Z₃ ordering).
class Qunit {
 public:
  static Qunit natural(std::vector<cplx> amplitudes);
  static Qunit integer(HalfInt n, std::vector<cplx> amplitudes);

  BasisKind basis() const { return basis_; }
  /// Representation label n; only meaningful for the integer basis.
  HalfInt integer_label() const;
  std::size_t dimension() const { return amps_.size(); }
  /// Largest natural label held; throws for the integer basis.
  std::size_t truncation() const;

  std::span<const cplx> amplitudes() const { return amps_; }
  /// Throws std::out_of_range when the label is beyond the truncation.
  cplx amplitude(std::size_t label) const;
  cplx amplitude(HalfInt m) const;

  double norm_squared() const;
  bool is_normalized(double tolerance = 1e-9) const;
  Qunit normalized() const;

 private:
  Qunit(BasisKind basis, HalfInt n, std::vector<cplx> amps)
      : basis_(basis), n_(n), amps_(std::move(amps)) {}
  BasisKind basis_ = BasisKind::natural;
  HalfInt n_;
  std::vector<cplx> amps_;
};

/// Even-label and odd-label parts of a natural-basis qunit; each keeps the
/// original truncation with the other parity zeroed.
struct ParitySplit {
  Qunit even;
  Qunit odd;
};
ParitySplit split_parity(const Qunit& state);

/// |⟨label|Q⟩|²
double projection_probability(const Qunit& state, std::size_t label);
double projection_probability(const Qunit& state, HalfInt m);

// ---------------------------------------------------------------------------
// Eigenstates of N₊ (N₊|Q⟩ = q|Q⟩)

/// c_{n+2} = q·c_n/√(n+2), i.e. c_{2k} = q^k c₀/√((2k)!!) and
/// c_{2k+1} = q^k c₁/√((2k+1)!!), for labels 0..nmax. Not normalized.
Qunit coefficient_recursion(cplx q, cplx c0, cplx c1, std::size_t nmax);

struct SectorState {
  cplx q;
  natural::Parity sector;
  /// c₀ for the even sector, c₁ for the odd sector.
  double normalization;
};

/// c₀ = e^{−|q|²/4}
SectorState normalize_even_sector(cplx q);
/// c₁ = f(|q|)·e^{−|q|²/4}, f(x) = √x / (√(π/2)·erf(x/√2))^{1/2}.
/// Throws std::invalid_argument for q = 0 (the odd sector is then empty).
SectorState normalize_odd_sector(cplx q);

/// The sector state on kets of its parity up to index nmax (labels ≤ 2·nmax+1).
Qunit sector_qunit(const SectorState& s, std::size_t nmax);

/// Default index truncation ⌈8λ⌉ + 40 with λ = |q|²/2.
std::size_t default_nmax(cplx q);

/// Poisson weight of |2n⟩: (1/n!) λⁿ e^{−λ}, λ = |q|²/2.
double p_even(cplx q, std::size_t n);
/// Weight of |2n+1⟩ in the normalized odd sector:
/// |q|^{2n+1} e^{−|q|²/2} 2ⁿ n! / ((2n+1)! √(π/2) erf(|q|/√2)).
/// Throws std::invalid_argument for q = 0.
double p_odd(cplx q, std::size_t n);
/// Same weight through the factored Poisson form
/// |q| (2n)!!/(2n+1)!! / (√(π/2) erf(|q|/√2)) · p_even(q, n).
double p_odd_factored(cplx q, std::size_t n);

enum class StirlingVariant { A, B };

struct StirlingRatio {
  double factor;        // A_n or B_n
  double approx_ratio;  // approximate p_odd/p_even
  double exact_ratio;   // p_odd/p_even from the exact formulas
};

/// A_n = π(2n)^{2n+1}e^{−2n}/(2n+1)!, B_n = e/√(2n+1)·(2n/(2n+1))^{2n+1}.
/// Throws std::invalid_argument for n = 0 or q = 0.
StirlingRatio stirling_ratio(cplx q, std::size_t n, StirlingVariant variant);

// ---------------------------------------------------------------------------
// Primes

/// Sieve of Eratosthenes; primes ≤ limit in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Equal amplitudes 1/√π(2ⁿ) on every prime label ≤ 2ⁿ.
/// Throws std::invalid_argument unless 2 ≤ n ≤ 20.
Qunit prime_qunit(unsigned n);

// ---------------------------------------------------------------------------
// qu2it geometry

/// e^{iγ}(cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩)
struct Qu2it {
  double gamma = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  Qunit state() const;
};

/// Requires 0 ≤ γ, φ < 2π and 0 ≤ θ ≤ π; throws std::invalid_argument otherwise.
Qu2it qu2it_from_angles(double gamma, double theta, double phi);

/// (cos(θ/2), cos φ sin(θ/2), sin φ sin(θ/2)). Throws if γ ≠ 0.
std::array<double, 3> embed_R3(const Qu2it& q);

/// Hopf map (2Re c̄₀c₁, 2Im c̄₀c₁, |c₀|²−|c₁|²) = (sinθ cosφ, sinθ sinφ, cosθ).
std::array<double, 3> bloch_vector(const Qunit& state);

/// ρ = ½(I + x₁σ₁ + x₂σ₂ + x₃σ₃). Throws std::invalid_argument unless the
/// input is a two-ket natural qunit normalized to 1e−12.
DensityMatrix bloch_density(const Qunit& state);
DensityMatrix bloch_density(const Qu2it& q);

}  // namespace qnt
