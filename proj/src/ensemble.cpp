#include "qnt/ensemble.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qnt/eigen.hpp"

namespace qnt {

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, double psd_tolerance) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("density matrix must be square and non-empty");
  if (const double defect = hermitian_defect(m); defect > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(msg.str());
  }
  if (const cplx tr = m.trace(); std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << ", not 1";
    throw std::invalid_argument(msg.str());
  }
  const auto values = hermitian_eigenvalues(m);
  if (values.back() < -psd_tolerance) {
    std::ostringstream msg;
    msg << "not a state: eigenvalue " << values.back() << " is negative";
    throw std::invalid_argument(msg.str());
  }
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

std::vector<double> DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(m_); }

// ---------------------------------------------------------------------------
// Ensemble

Ensemble::Ensemble(std::vector<Qunit> members, std::vector<double> weights, WeightPolicy policy)
    : members_(std::move(members)), weights_(std::move(weights)) {
  if (members_.empty()) throw std::invalid_argument("Ensemble: no members");
  if (members_.size() != weights_.size()) throw std::invalid_argument("Ensemble: members/weights length mismatch");
  const std::size_t d = members_.front().dimension();
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].dimension() != d) throw std::invalid_argument("Ensemble: members differ in dimension");
    if (!members_[i].is_normalized()) {
      throw std::invalid_argument("Ensemble: member " + std::to_string(i) + " is not normalized");
    }
    if (!(weights_[i] >= 0.0)) throw std::invalid_argument("Ensemble: negative weight");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (policy == WeightPolicy::normalize) {
    if (!(total > 0.0)) throw std::invalid_argument("Ensemble: weights sum to zero");
    for (auto& w : weights_) w /= total;
  } else if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "Ensemble: weights sum to " << total << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
}

Ensemble Ensemble::pure(Qunit member) { return Ensemble({std::move(member)}, {1.0}); }

Ensemble Ensemble::completely_random(std::size_t d) {
  if (d < 1) throw std::invalid_argument("Ensemble::completely_random: d must be >= 1");
  std::vector<Qunit> kets;
  kets.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<cplx> a(d);
    a[k] = 1.0;
    kets.push_back(Qunit::natural(std::move(a)));
  }
  return Ensemble(std::move(kets), std::vector<double>(d, 1.0), WeightPolicy::normalize);
}

DensityMatrix density_from_ensemble(const Ensemble& e) {
  const std::size_t d = e.dimension();
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < e.members().size(); ++i) {
    const auto amps = e.members()[i].amplitudes();
    const double w = e.weights()[i];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) rho(r, c) += w * amps[r] * std::conj(amps[c]);
  }
  return DensityMatrix::from_matrix(std::move(rho));
}

double ensemble_average(const ComplexMatrix& op, const Ensemble& e) {
  if (!op.is_square() || op.rows() != e.dimension()) {
    throw std::invalid_argument("ensemble_average: operator is " + std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) + ", ensemble dimension is " +
                                std::to_string(e.dimension()));
  }
  if (hermitian_defect(op) > 1e-12 * (1.0 + op.max_abs())) {
    throw std::invalid_argument("ensemble_average: operator is not Hermitian");
  }
  double avg = 0.0;
  for (std::size_t i = 0; i < e.members().size(); ++i) {
    const auto amps = e.members()[i].amplitudes();
    avg += e.weights()[i] * inner(amps, op * amps).real();
  }
  return avg;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) { return (rho.matrix() * op).trace().real(); }

double omega_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues())
    if (lambda >= 1e-14) s -= lambda * std::log(lambda);
  return s;
}

double shannon_bits(std::size_t d) {
  if (d < 1) throw std::invalid_argument("shannon_bits: d must be >= 1");
  return std::log2(static_cast<double>(d));
}

DensityMatrix product_density(const std::vector<DensityMatrix>& factors) {
  ComplexMatrix acc = ComplexMatrix::identity(1);
  for (const auto& f : factors) acc = kron(acc, f.matrix());
  return DensityMatrix::from_matrix(std::move(acc));
}

DensityMatrix maximally_mixed(std::size_t d) {
  if (d < 1) throw std::invalid_argument("maximally_mixed: d must be >= 1");
  return DensityMatrix::from_matrix(ComplexMatrix::identity(d) * cplx(1.0 / static_cast<double>(d)));
}

}  // namespace qnt
