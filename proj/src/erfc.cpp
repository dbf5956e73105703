#include "rio/erfc.hpp"

#include <cmath>

namespace rio {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628694807945156077;

// erf(x) = 2 x e^{-x^2} / sqrt(pi) * sum_k (2 x^2)^k / (1 * 3 * ... * (2k+1)),
// solid for |x| <= 3.
double erf_series(double x) {
    const double x2 = x * x;
    double term = 1.0;
    double sum = 1.0;
    double odd = 1.0;
    for (int k = 1; k < 200; ++k) {
        odd += 2.0;
        term *= 2.0 * x2 / odd;
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 2.0 * x * std::exp(-x2) * kInvSqrtPi * sum;
}

// Continued fraction for the upper tail (modified Lentz):
// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))).
double erfc_fraction(double x) {
    constexpr double kTiny = 1e-300;
    double c = 1.0 / kTiny;
    double d = 1.0 / x;
    double h = d;
    for (int k = 1; k < 400; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = x + a / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) * kInvSqrtPi * h;
}

}  // namespace

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x == 0.0) return 1.0;
    if (x > 27.3) return 0.0;  // below the smallest positive double
    if (x < 2.0) return 1.0 - erf_series(x);
    return erfc_fraction(x);
}

double erf(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return -erf(-x);
    if (x < 2.0) return erf_series(x);
    return 1.0 - erfc(x);
}

}  // namespace rio
