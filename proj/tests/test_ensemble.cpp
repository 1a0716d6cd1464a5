#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qnt/ensemble.hpp"
#include "qnt/natural_rep.hpp"
#include "support.hpp"

using namespace qnt;

namespace {

Qunit ket(std::size_t d, std::size_t k) {
  std::vector<cplx> a(d);
  a[k] = 1.0;
  return Qunit::natural(std::move(a));
}

DensityMatrix random_state(std::mt19937_64& rng, std::size_t d, std::size_t members) {
  std::uniform_real_distribution<double> w(0.05, 1.0);
  std::vector<Qunit> kets;
  std::vector<double> weights;
  for (std::size_t i = 0; i < members; ++i) {
    kets.push_back(Qunit::natural(testing::random_unit(rng, d)));
    weights.push_back(w(rng));
  }
  return density_from_ensemble(Ensemble(kets, weights, WeightPolicy::normalize));
}

}  // namespace

TEST_CASE("density from ensembles") {
  const double h = 1.0 / std::sqrt(2.0);
  const auto pure = density_from_ensemble(Ensemble::pure(Qunit::natural({h, cplx(0, h)})));
  CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-15));
  const ComplexMatrix& p = pure.matrix();
  CHECK(max_abs_diff(p * (p - ComplexMatrix::identity(2)), ComplexMatrix(2, 2)) < 1e-15);
  const auto values = pure.eigenvalues();
  CHECK(values[0] == doctest::Approx(1.0));
  CHECK(std::abs(values[1]) < 1e-15);

  const auto mix = density_from_ensemble(Ensemble({ket(3, 0), ket(3, 2)}, {0.5, 0.5}));
  CHECK(max_abs_diff(mix.matrix(), ComplexMatrix::diagonal({0.5, 0.0, 0.5})) < 1e-16);

  const auto random = density_from_ensemble(Ensemble::completely_random(4));
  CHECK(max_abs_diff(random.matrix(), cplx(0.25) * ComplexMatrix::identity(4)) < 1e-16);
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(Ensemble({ket(2, 0), ket(2, 1)}, {0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Ensemble({ket(2, 0), ket(2, 1)}, {1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Ensemble({ket(2, 0), ket(3, 1)}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(Ensemble({Qunit::natural({1.0, 1.0})}, {1.0}), std::invalid_argument);
  const Ensemble e({ket(2, 0), ket(2, 1)}, {2.0, 6.0}, WeightPolicy::normalize);
  CHECK(e.weights() == std::vector<double>{0.25, 0.75});
  // members may outnumber the dimension and overlap
  CHECK_NOTHROW(Ensemble({ket(2, 0), ket(2, 1), Qunit::natural({0.6, 0.8})}, {0.2, 0.3, 0.5}));
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix::from_matrix(ComplexMatrix{{1, 1}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(ComplexMatrix::identity(2)), std::invalid_argument);
  try {
    (void)DensityMatrix::from_matrix(ComplexMatrix::diagonal({1.5, -0.5}));
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).rfind("not a state", 0) == 0);
  }
}

TEST_CASE("ensemble averages") {
  const std::size_t d = 5;
  const Ensemble random = Ensemble::completely_random(d);
  CHECK(ensemble_average(ComplexMatrix::identity(d), random) == doctest::Approx(1.0));
  std::vector<double> diag(d);
  for (std::size_t k = 0; k < d; ++k) diag[k] = static_cast<double>(k);
  CHECK(ensemble_average(ComplexMatrix::diagonal(diag), random) == doctest::Approx((d - 1) / 2.0));
  CHECK(ensemble_average(natural::number_matrix(natural::Parity::even, d), Ensemble::pure(ket(d, 0))) == 0.0);

  CHECK_THROWS_AS(ensemble_average(ComplexMatrix::identity(3), random), std::invalid_argument);
  CHECK_THROWS_AS(ensemble_average(ComplexMatrix{{0, 1}, {0, 0}}, Ensemble::completely_random(2)),
                  std::invalid_argument);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.05, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t dim = 2 + trial % 5;
    std::vector<Qunit> kets;
    std::vector<double> weights;
    for (std::size_t i = 0; i < dim + 2; ++i) {
      kets.push_back(Qunit::natural(testing::random_unit(rng, dim)));
      weights.push_back(w(rng));
    }
    const Ensemble e(kets, weights, WeightPolicy::normalize);
    const ComplexMatrix a = testing::random_hermitian(rng, dim);
    CHECK(std::abs(ensemble_average(a, e) - expectation(density_from_ensemble(e), a)) < 1e-10);
  }
}

TEST_CASE("Omega entropy") {
  CHECK(omega_entropy(density_from_ensemble(Ensemble::pure(ket(3, 1)))) == 0.0);
  CHECK(omega_entropy(maximally_mixed(3)) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(omega_entropy(DensityMatrix::from_matrix(ComplexMatrix::diagonal({0.5, 0.5, 0.0}))) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 4;
    const auto pure = density_from_ensemble(Ensemble::pure(Qunit::natural(testing::random_unit(rng, d))));
    CHECK(std::abs(pure.purity() - 1.0) < 1e-10);
    CHECK(omega_entropy(pure) < 1e-10);
    const auto values = pure.eigenvalues();
    CHECK(std::abs(values[0] - 1.0) < 1e-12);
    for (std::size_t k = 1; k < d; ++k) CHECK(std::abs(values[k]) < 1e-12);

    const auto mixed = random_state(rng, d, 3);
    CHECK(mixed.purity() < 1.0 - 1e-6);
    CHECK(omega_entropy(mixed) > 1e-6);

    const auto other = random_state(rng, 2 + trial % 2, 2);
    CHECK(std::abs(omega_entropy(product_density({mixed, other})) - omega_entropy(mixed) - omega_entropy(other)) <
          1e-10);
  }
}

TEST_CASE("Shannon bits and products") {
  CHECK(shannon_bits(1) == 0.0);
  CHECK(shannon_bits(2) == 1.0);
  CHECK(shannon_bits(8) == 3.0);
  CHECK_THROWS_AS(shannon_bits(0), std::invalid_argument);

  const auto half = maximally_mixed(2);
  const auto quarter = product_density({half, half});
  CHECK(max_abs_diff(quarter.matrix(), cplx(0.25) * ComplexMatrix::identity(4)) < 1e-16);
  CHECK(omega_entropy(quarter) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));

  const auto single = product_density({half, DensityMatrix::from_matrix(ComplexMatrix::identity(1))});
  CHECK(single.matrix() == half.matrix());
  CHECK(product_density({}).matrix() == ComplexMatrix::identity(1));

  const auto p1 = density_from_ensemble(Ensemble::pure(ket(2, 1)));
  const auto p2 = density_from_ensemble(Ensemble::pure(Qunit::natural({0.6, 0.8})));
  CHECK(product_density({p1, p2}).purity() == doctest::Approx(1.0).epsilon(1e-14));
}
