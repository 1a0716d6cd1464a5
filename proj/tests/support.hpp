#pragma once

#include <cmath>
#include <random>

#include "qnt/matrix.hpp"

namespace testing {

inline qnt::ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  qnt::ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    m(r, r) = g(rng);
    for (std::size_t c = r + 1; c < d; ++c) {
      m(r, c) = qnt::cplx(g(rng), g(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

inline qnt::ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> g;
  qnt::ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = qnt::cplx(g(rng), g(rng));
  return m;
}

inline std::vector<qnt::cplx> random_unit(std::mt19937_64& rng, std::size_t d) {
  std::normal_distribution<double> g;
  std::vector<qnt::cplx> v(d);
  double n = 0.0;
  for (auto& x : v) {
    x = qnt::cplx(g(rng), g(rng));
    n += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(n);
  return v;
}

}  // namespace testing
