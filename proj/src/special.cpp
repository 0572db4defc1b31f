#include "tablecount/special.hpp"

#include <cmath>
#include <limits>

#include "tablecount/errors.hpp"

namespace tablecount {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2
constexpr double kLogPi = 1.14472988584940017414;

// Lanczos coefficients, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_ln_gamma(double x) {
    // Valid for x >= 0.5.
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(a);
}

// Stirling-series tail S(z): ln Gamma(z) = (z-1/2)ln z - z + ln(2pi)/2 + S(z).
// Truncation error < 1e-17 for z >= 20.
double stirling_tail(double z) {
    const double w = 1.0 / (z * z);
    return (1.0 / 12.0 -
            (1.0 / 360.0 - (1.0 / 1260.0 - (1.0 / 1680.0 - (1.0 / 1188.0) * w) * w) * w) * w) /
           z;
}

// sin(pi*x) with argument reduction on x, exact sign for moderate x.
double sin_pi(double x) {
    const double r = x - std::nearbyint(x);
    const double s = std::sin(M_PI * r);
    // nearbyint is even or odd; odd multiples flip the sign of sin.
    const bool odd = std::fmod(std::fabs(std::nearbyint(x)), 2.0) == 1.0;
    return odd ? -s : s;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: argument must be positive");
    if (x >= 0.5) return lanczos_ln_gamma(x);
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), sin positive on (0, 1/2).
    return kLogPi - std::log(std::sin(M_PI * x)) - lanczos_ln_gamma(1.0 - x);
}

double ln_gamma_diff(double x, double k) {
    if (!(x > 0.0) || !(x + k > 0.0))
        throw DomainError("ln_gamma_diff: arguments must stay positive");
    if (x >= 20.0 && x + k >= 20.0) {
        return (x - 0.5) * std::log1p(k / x) + k * std::log(x + k) - k +
               stirling_tail(x + k) - stirling_tail(x);
    }
    return ln_gamma(x + k) - ln_gamma(x);
}

SignedLog ln_gamma_signed(double x) {
    if (x > 0.0) return {ln_gamma(x), +1};
    // Poles at 0, -1, -2, ...; also spacing loss makes huge negatives
    // indistinguishable from integers.
    if (x == std::floor(x) || std::fabs(x) >= 0x1p52)
        throw GammaPoleError("ln_gamma_signed: argument at a pole");
    const double s = sin_pi(x);
    // |Gamma(x)| = pi / (|sin(pi x)| Gamma(1-x)); sign follows sin(pi x).
    const double log_abs = kLogPi - std::log(std::fabs(s)) - ln_gamma(1.0 - x);
    return {log_abs, s > 0.0 ? +1 : -1};
}

double ln_gbinom(double a, double b) {
    const double k = std::min(b, a - b);
    const double big = std::max(b, a - b);
    if (!(a + 1.0 > 0.0) || !(b + 1.0 > 0.0) || !(a - b + 1.0 > 0.0))
        throw DomainError("ln_gbinom: gamma argument not positive");
    if (big + 1.0 >= 20.0) {
        // C(a,b) = Gamma(big+1+k)/Gamma(big+1) / Gamma(k+1): the ratio is
        // evaluated as a difference to avoid cancellation when big >> k.
        return ln_gamma_diff(big + 1.0, k) - ln_gamma(k + 1.0);
    }
    return ln_gamma(a + 1.0) - ln_gamma(b + 1.0) - ln_gamma(a - b + 1.0);
}

SignedLog ln_gbinom_signed(double a, double b) {
    if (a + 1.0 > 0.0 && b + 1.0 > 0.0 && a - b + 1.0 > 0.0) return {ln_gbinom(a, b), +1};
    const SignedLog num = ln_gamma_signed(a + 1.0);
    const SignedLog d1 = ln_gamma_signed(b + 1.0);
    const SignedLog d2 = ln_gamma_signed(a - b + 1.0);
    return {num.log_abs - d1.log_abs - d2.log_abs, num.sign * d1.sign * d2.sign};
}

double ln_factorial(double n) {
    if (n < 0.0) throw DomainError("ln_factorial: negative argument");
    return ln_gamma(n + 1.0);
}

}  // namespace tablecount
