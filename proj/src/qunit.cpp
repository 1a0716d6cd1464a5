#include "qnt/qunit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qnt/special.hpp"

namespace qnt {

namespace {

constexpr std::size_t kLogSpaceThreshold = 30;
const double kSqrtHalfPi = std::sqrt(std::numbers::pi / 2.0);

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

// √(π/2)·erf(|q|/√2), the odd-sector normalizer.
double odd_normalizer(double r) { return kSqrtHalfPi * qnt::erf(r / std::numbers::sqrt2); }

double require_nonzero_modulus(cplx q, const char* what) {
  const double r = std::abs(q);
  if (!(r > 0.0)) throw std::invalid_argument(std::string(what) + ": |q| must be > 0 (odd sector is empty)");
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Qunit

Qunit Qunit::natural(std::vector<cplx> amplitudes) {
  if (amplitudes.empty()) throw std::invalid_argument("Qunit: no amplitudes");
  return Qunit(BasisKind::natural, HalfInt{}, std::move(amplitudes));
}

Qunit Qunit::integer(HalfInt n, std::vector<cplx> amplitudes) {
  if (n.twice() < 0) throw std::invalid_argument("Qunit: integer label n must be >= 0");
  if (amplitudes.size() != n.dimension()) {
    throw std::invalid_argument("Qunit: integer basis n=" + n.str() + " needs " + std::to_string(n.dimension()) +
                                " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  return Qunit(BasisKind::integer, n, std::move(amplitudes));
}

HalfInt Qunit::integer_label() const {
  if (basis_ != BasisKind::integer) throw std::logic_error("Qunit: natural basis has no integer label");
  return n_;
}

std::size_t Qunit::truncation() const {
  if (basis_ != BasisKind::natural) throw std::logic_error("Qunit: integer basis has no natural truncation");
  return amps_.size() - 1;
}

cplx Qunit::amplitude(std::size_t label) const {
  if (basis_ != BasisKind::natural) throw std::invalid_argument("Qunit: natural label used on integer basis");
  if (label >= amps_.size()) {
    throw std::out_of_range("Qunit: label " + std::to_string(label) + " beyond truncation " +
                            std::to_string(amps_.size() - 1));
  }
  return amps_[label];
}

cplx Qunit::amplitude(HalfInt m) const {
  if (basis_ != BasisKind::integer) throw std::invalid_argument("Qunit: integer label used on natural basis");
  if (m > n_ || m < -n_ || (n_ - m).twice() % 2 != 0) {
    throw std::out_of_range("Qunit: m=" + m.str() + " is not a label of n=" + n_.str());
  }
  return amps_[static_cast<std::size_t>((n_ - m).twice() / 2)];
}

double Qunit::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

bool Qunit::is_normalized(double tolerance) const { return std::abs(norm_squared() - 1.0) <= tolerance; }

Qunit Qunit::normalized() const {
  const double nrm = std::sqrt(norm_squared());
  if (nrm == 0.0) throw std::invalid_argument("Qunit: cannot normalize the zero vector");
  Qunit out = *this;
  for (auto& a : out.amps_) a /= nrm;
  return out;
}

ParitySplit split_parity(const Qunit& state) {
  if (state.basis() != BasisKind::natural) throw std::invalid_argument("split_parity: natural basis only");
  std::vector<cplx> even(state.dimension());
  std::vector<cplx> odd(state.dimension());
  const auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) (i % 2 == 0 ? even : odd)[i] = amps[i];
  return {Qunit::natural(std::move(even)), Qunit::natural(std::move(odd))};
}

double projection_probability(const Qunit& state, std::size_t label) { return std::norm(state.amplitude(label)); }

double projection_probability(const Qunit& state, HalfInt m) { return std::norm(state.amplitude(m)); }

// ---------------------------------------------------------------------------
// N₊ eigenstates

Qunit coefficient_recursion(cplx q, cplx c0, cplx c1, std::size_t nmax) {
  if (nmax < 1) throw std::invalid_argument("coefficient_recursion: nmax must be >= 1");
  std::vector<cplx> c(nmax + 1);
  c[0] = c0;
  c[1] = c1;
  for (std::size_t n = 0; n + 2 <= nmax; ++n) c[n + 2] = q * c[n] / std::sqrt(static_cast<double>(n + 2));
  return Qunit::natural(std::move(c));
}

SectorState normalize_even_sector(cplx q) {
  return {q, natural::Parity::even, std::exp(-std::norm(q) / 4.0)};
}

SectorState normalize_odd_sector(cplx q) {
  const double r = require_nonzero_modulus(q, "normalize_odd_sector");
  const double f = std::sqrt(r / odd_normalizer(r));
  return {q, natural::Parity::odd, f * std::exp(-r * r / 4.0)};
}

Qunit sector_qunit(const SectorState& s, std::size_t nmax) {
  const std::size_t top = 2 * nmax + 1;
  if (s.sector == natural::Parity::even) return coefficient_recursion(s.q, s.normalization, 0.0, top);
  return coefficient_recursion(s.q, 0.0, s.normalization, top);
}

std::size_t default_nmax(cplx q) {
  const double lambda = std::norm(q) / 2.0;
  return static_cast<std::size_t>(std::ceil(8.0 * lambda)) + 40;
}

double p_even(cplx q, std::size_t n) {
  const double lambda = std::norm(q) / 2.0;
  if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
  if (n > kLogSpaceThreshold) {
    const double nd = static_cast<double>(n);
    return std::exp(nd * std::log(lambda) - lambda - std::lgamma(nd + 1.0));
  }
  return std::pow(lambda, static_cast<double>(n)) * std::exp(-lambda) / factorial(n);
}

double p_odd(cplx q, std::size_t n) {
  const double r = require_nonzero_modulus(q, "p_odd");
  const double nd = static_cast<double>(n);
  if (n > kLogSpaceThreshold) {
    const double log_p = (2.0 * nd + 1.0) * std::log(r) - r * r / 2.0 + nd * std::numbers::ln2 +
                         std::lgamma(nd + 1.0) - std::lgamma(2.0 * nd + 2.0) - std::log(odd_normalizer(r));
    return std::exp(log_p);
  }
  return std::pow(r, 2.0 * nd + 1.0) * std::exp(-r * r / 2.0) * std::pow(2.0, nd) * factorial(n) /
         (factorial(2 * n + 1) * odd_normalizer(r));
}

namespace {

// 2^{2n}(n!)²/(2n+1)! = (2n)!!/(2n+1)!! = Π_{k=1}^{n} 2k/(2k+1)
double even_over_odd_double_factorial(std::size_t n) {
  double v = 1.0;
  for (std::size_t k = 1; k <= n; ++k) v *= (2.0 * k) / (2.0 * k + 1.0);
  return v;
}

}  // namespace

double p_odd_factored(cplx q, std::size_t n) {
  const double r = require_nonzero_modulus(q, "p_odd_factored");
  return r * even_over_odd_double_factorial(n) / odd_normalizer(r) * p_even(q, n);
}

StirlingRatio stirling_ratio(cplx q, std::size_t n, StirlingVariant variant) {
  if (n == 0) throw std::invalid_argument("stirling_ratio: n must be >= 1");
  const double r = require_nonzero_modulus(q, "stirling_ratio");
  const double nd = static_cast<double>(n);
  const double normalizer = odd_normalizer(r);

  StirlingRatio out{};
  out.exact_ratio = r * even_over_odd_double_factorial(n) / normalizer;
  if (variant == StirlingVariant::A) {
    const double log_a = std::log(std::numbers::pi) + (2.0 * nd + 1.0) * std::log(2.0 * nd) - 2.0 * nd -
                         std::lgamma(2.0 * nd + 2.0);
    out.factor = std::exp(log_a);
    out.approx_ratio = r * out.factor / normalizer;
  } else {
    out.factor = std::numbers::e / std::sqrt(2.0 * nd + 1.0) * std::pow(2.0 * nd / (2.0 * nd + 1.0), 2.0 * nd + 1.0);
    out.approx_ratio = r * out.factor / qnt::erf(r / std::numbers::sqrt2);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primes

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

Qunit prime_qunit(unsigned n) {
  if (n < 2 || n > 20) throw std::invalid_argument("prime_qunit: n must be in [2, 20], got " + std::to_string(n));
  const std::uint64_t limit = std::uint64_t{1} << n;
  const auto primes = primes_up_to(limit);
  const double amp = 1.0 / std::sqrt(static_cast<double>(primes.size()));
  std::vector<cplx> amps(limit + 1);
  for (auto p : primes) amps[p] = amp;
  return Qunit::natural(std::move(amps));
}

// ---------------------------------------------------------------------------
// qu2it

Qunit Qu2it::state() const {
  const cplx global = std::polar(1.0, gamma);
  return Qunit::natural({global * std::cos(theta / 2.0), global * std::polar(1.0, phi) * std::sin(theta / 2.0)});
}

Qu2it qu2it_from_angles(double gamma, double theta, double phi) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(gamma >= 0.0 && gamma < two_pi)) throw std::invalid_argument("qu2it_from_angles: gamma outside [0, 2pi)");
  if (!(phi >= 0.0 && phi < two_pi)) throw std::invalid_argument("qu2it_from_angles: phi outside [0, 2pi)");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("qu2it_from_angles: theta outside [0, pi]");
  }
  return {gamma, theta, phi};
}

std::array<double, 3> embed_R3(const Qu2it& q) {
  if (q.gamma != 0.0) throw std::invalid_argument("embed_R3: global phase must be zero");
  const double s = std::sin(q.theta / 2.0);
  return {std::cos(q.theta / 2.0), std::cos(q.phi) * s, std::sin(q.phi) * s};
}

std::array<double, 3> bloch_vector(const Qunit& state) {
  if (state.basis() != BasisKind::natural || state.dimension() != 2) {
    throw std::invalid_argument("bloch_vector: expected a two-ket natural qunit");
  }
  const cplx c0 = state.amplitude(std::size_t{0});
  const cplx c1 = state.amplitude(std::size_t{1});
  const cplx cross = std::conj(c0) * c1;
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(c0) - std::norm(c1)};
}

DensityMatrix bloch_density(const Qunit& state) {
  if (state.basis() != BasisKind::natural || state.dimension() != 2) {
    throw std::invalid_argument("bloch_density: expected a two-ket natural qunit");
  }
  if (!state.is_normalized(1e-12)) {
    throw std::invalid_argument("bloch_density: state is not normalized (|Q|^2 = " +
                                std::to_string(state.norm_squared()) + ")");
  }
  const auto [x1, x2, x3] = bloch_vector(state);
  ComplexMatrix rho{{0.5 * (1.0 + x3), 0.5 * cplx(x1, -x2)}, {0.5 * cplx(x1, x2), 0.5 * (1.0 - x3)}};
  return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix bloch_density(const Qu2it& q) { return bloch_density(q.state()); }

}  // namespace qnt
