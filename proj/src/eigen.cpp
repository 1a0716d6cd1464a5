#include "qnt/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qnt/error.hpp"

namespace qnt {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& input) {
  if (!input.is_square()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
  const std::size_t n = input.rows();

  {
    double worst = 0.0;
    std::size_t wr = 0, wc = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        const double d = std::abs(input(r, c) - std::conj(input(c, r)));
        if (d > worst) {
          worst = d;
          wr = r;
          wc = c;
        }
      }
    if (worst > 1e-12 * (1.0 + input.max_abs())) {
      std::ostringstream msg;
      msg << "hermitian_eigen: matrix is not Hermitian; max |a_rc - conj(a_cr)| = " << worst << " at (" << wr
          << "," << wc << ")";
      throw std::invalid_argument(msg.str());
    }
  }

  ComplexMatrix a = 0.5 * (input + input.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius(a);
  bool converged = n <= 1 || scale == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx z = a(p, q);
        const double w = std::abs(z);
        if (w == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (w < 1e-300 || w < 1e-18 * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Phase rotation makes the (p,q) entry real, then a real Jacobi
        // rotation annihilates it: J = diag(1, e^{-iφ})·[[c, s], [-s, c]].
        const cplx ph = std::conj(z / w);
        const double theta = (aqq - app) / (2.0 * w);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const cplx jqp = -s * ph;
        const cplx jqq = c * ph;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * c + akq * jqp;
          a(k, q) = akp * s + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk + std::conj(jqp) * aqk;
          a(q, k) = s * apk + std::conj(jqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * s + vkq * jqq;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_diagonal_norm(a) <= 1e-15 * scale;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "hermitian_eigen: Jacobi sweeps did not converge for n=" << n << " (off-diagonal norm "
        << off_diagonal_norm(a) << ")";
    throw NumericalError(msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) { return hermitian_eigen(a).values; }

}  // namespace qnt
