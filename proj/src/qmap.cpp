#include "qnt/qmap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qnt/integer_rep.hpp"

namespace qnt::qmap {

namespace {

void require(int p, std::size_t d, const char* what) {
  if (p < 1 || p > 3) throw std::invalid_argument(std::string(what) + ": component must be 1, 2 or 3");
  if (d < 2) throw std::invalid_argument(std::string(what) + ": d must be >= 2, got " + std::to_string(d));
}

double partial_product(std::size_t d, std::size_t j) {
  double acc = 1.0;
  for (std::size_t k = 1; k <= j; ++k) acc *= std::sqrt(static_cast<double>(d - k) / static_cast<double>(d + 2 - k));
  return acc;
}

}  // namespace

QMapping build_T(int p, std::size_t d) {
  require(p, d, "build_T");
  ComplexMatrix t(d + 2, d);
  for (std::size_t r = 1; r <= d + 2; ++r) {
    for (std::size_t s = 1; s <= d; ++s) {
      if (p == 3) {
        if (r == s + 1) t(r - 1, s - 1) = 1.0;
        continue;
      }
      double v = 0.0;
      if (r == s) v += partial_product(d, r - 1);
      if (r == s + 2) v += (p == 1 ? -1.0 : 1.0) * partial_product(d, d - s);
      t(r - 1, s - 1) = v;
    }
  }
  return {p, d, d + 2, std::move(t)};
}

QMapping compose_T(int p, std::size_t d_from, std::size_t d_to) {
  require(p, d_from, "compose_T");
  if (d_to <= d_from || (d_to - d_from) % 2 != 0) {
    throw std::invalid_argument("compose_T: target dimension " + std::to_string(d_to) + " is not " +
                                std::to_string(d_from) + " + 2v with v >= 1");
  }
  QMapping acc = build_T(p, d_from);
  for (std::size_t d = d_from + 2; d < d_to; d += 2) acc.matrix = build_T(p, d).matrix * acc.matrix;
  acc.d_to = d_to;
  return acc;
}

ComplexMatrix build_R(int p, std::size_t d) {
  const auto t = build_T(p, d).matrix;
  return t.adjoint() * t;
}

Rational r_eigenvalue(std::size_t d, HalfInt m) {
  const HalfInt n = HalfInt::from_dimension(d);
  if (d < 2 || m > n || m < -n || (n - m).twice() % 2 != 0) {
    throw std::invalid_argument("r_eigenvalue: m=" + m.str() + " is not a label for d=" + std::to_string(d));
  }
  const Rational dd(static_cast<long long>(d));
  const Rational mm = m.value();
  return 1 + 1 / dd - 4 * mm * mm / (dd * (dd + 1));
}

Rational norm_ratio(std::size_t d, HalfInt m) {
  const HalfInt n = HalfInt::from_dimension(d);
  return integer::closed_form_norm_squared(n + HalfInt::from_int(1), m) / integer::closed_form_norm_squared(n, m);
}

std::set<Rational> rational_set(std::size_t d_max) {
  if (d_max < 2) throw std::invalid_argument("rational_set: d_max must be >= 2");
  std::set<Rational> w{Rational(1), Rational(-1)};
  for (std::size_t d = 2; d <= d_max; ++d) {
    const HalfInt n = HalfInt::from_dimension(d);
    for (HalfInt m = n; m >= -n; m = m - HalfInt::from_int(1)) {
      const Rational r = r_eigenvalue(d, m);
      if (r == 0) continue;
      w.insert(r);
      w.insert(-r);
    }
  }
  return w;
}

namespace {

ComplexMatrix unit_eigenbasis(int p, std::size_t d) {
  const auto eig = integer::z_eigensystem(p, d);
  ComplexMatrix v(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < d; ++r) v(r, k) = eig[k].vector[r] / eig[k].norm;
  return v;
}

}  // namespace

ComplexMatrix R_in_eigenbasis(int p, std::size_t d) {
  const ComplexMatrix v = unit_eigenbasis(p, d);
  return v.adjoint() * build_R(p, d) * v;
}

RReport r_report(int p, std::size_t d) {
  require(p, d, "r_report");
  RReport out{p, d, {}, 0.0, 0.0, 0.0, 0.0};
  const ComplexMatrix v = unit_eigenbasis(p, d);
  const ComplexMatrix t = build_T(p, d).matrix;
  const ComplexMatrix r = v.adjoint() * (t.adjoint() * t) * v;
  const ComplexMatrix z_big = integer::build_Z(p, d + 2);
  const ComplexMatrix image = t * v;
  out.off_diagonal = max_off_diagonal(r);

  const HalfInt n = HalfInt::from_dimension(d);
  for (std::size_t k = 0; k < d; ++k) {
    const HalfInt m = n - HalfInt::from_int(static_cast<std::int64_t>(k));
    RRow row{m, r(k, k).real(), r_eigenvalue(d, m), norm_ratio(d, m)};
    out.law_residual = std::max(out.law_residual, std::abs(row.computed - to_double(row.law)));
    out.oracle_residual = std::max(out.oracle_residual, std::abs(row.computed - to_double(row.oracle)));
    const auto tv = image.column(k);
    const auto ztv = z_big * tv;
    for (std::size_t i = 0; i < tv.size(); ++i)
      out.homomorphism_residual = std::max(out.homomorphism_residual, std::abs(ztv[i] - m.to_double() * tv[i]));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace qnt::qmap
