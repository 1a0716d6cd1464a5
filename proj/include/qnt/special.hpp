#pragma once

namespace qnt {

/// Error function. Power series of e^{x²}·erf(x) (positive terms, no
/// cancellation) for |x| < 2.5; Lentz continued fraction for erfc beyond.
double erf(double x);

/// Complementary error function, same split as erf.
double erfc(double x);

}  // namespace qnt
