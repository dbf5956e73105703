#pragma once

namespace rio {

/// Complementary error function. Power series for small arguments, Lentz
/// continued fraction for the tail; absolute error below 1e-13 over the
/// double range. erfc(0) is exactly 1.
double erfc(double x);

double erf(double x);

}  // namespace rio
