#ifndef TABLECOUNT_SPECIAL_HPP
#define TABLECOUNT_SPECIAL_HPP

namespace tablecount {

// Value of log|x| together with the sign of x. sign is +1 or -1.
struct SignedLog {
    double log_abs;
    int sign;
};

// ln Gamma(x) for x > 0. Lanczos approximation, accurate to ~1e-14
// relative for x <= 1e6. Throws DomainError for x <= 0.
double ln_gamma(double x);

// ln Gamma(x+k) - ln Gamma(x), computed without cancellation when x is
// large (Stirling-series difference). Requires x > 0 and x + k > 0.
double ln_gamma_diff(double x, double k);

// ln|Gamma(x)| and sign for any real x away from the poles 0, -1, -2, ...
// Throws GammaPoleError at (or numerically indistinguishable from) a pole.
SignedLog ln_gamma_signed(double x);

// ln of the generalized binomial coefficient
//   C(a, b) = Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)).
// Requires a+1 > 0, b+1 > 0, a-b+1 > 0 (DomainError otherwise).
double ln_gbinom(double a, double b);

// Signed variant: any real a, b away from Gamma poles. Used by the 0-1
// estimators, where the effective-column parameter can push Gamma
// arguments negative.
SignedLog ln_gbinom_signed(double a, double b);

// ln(n!) for n >= 0.
double ln_factorial(double n);

}  // namespace tablecount

#endif
