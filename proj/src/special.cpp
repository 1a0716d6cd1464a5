#include "qnt/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qnt {

namespace {

constexpr double kSeriesLimit = 2.5;
// below this, 1 − erf(x) keeps full relative accuracy
constexpr double kComplementLimit = 0.5;
constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;

// erf(x) = (2/√π) e^{−x²} Σ_{n≥0} (2x²)ⁿ x / (2n+1)!!
double erf_series(double x) {
  const double two_x2 = 2.0 * x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 500; ++n) {
    term *= two_x2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * std::numeric_limits<double>::epsilon() * 0.25) break;
  }
  return kTwoOverSqrtPi * std::exp(-x * x) * sum;
}

// erfc(x) = e^{−x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …)))), x > 0.
double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::numbers::inv_sqrtpi * std::exp(-x * x) / f;
}

}  // namespace

double erf(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return -erf(-x);
  if (x < kSeriesLimit) return erf_series(x);
  return 1.0 - erfc_continued_fraction(x);
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) return 2.0 - erfc(-x);
  if (x < kComplementLimit) return 1.0 - erf_series(x);
  return erfc_continued_fraction(x);
}

}  // namespace qnt
