// specfun.hpp
// Gamma-family special functions backing the series coefficients:
// log-Gamma (Lanczos), pole-safe reciprocal Gamma, overflow-safe Gamma
// ratios, and a signed log-space value carrier.
#pragma once

namespace rieszwave::specfun {

// A real number held as sign * exp(log_magnitude). sign == 0 encodes exactly
// zero, in which case log_magnitude is ignored.
struct SignedLogValue {
    double log_magnitude = 0.0;
    int sign = 0;  // -1, 0, +1

    static SignedLogValue from_value(double v);
    static SignedLogValue from_log(double log_mag, int sign);

    SignedLogValue operator*(const SignedLogValue& other) const;
    double value() const;
};

// ln Gamma(x) for x > 0, finite. Relative accuracy ~1e-15 on [1e-3, 1e3].
// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

// 1/Gamma(x), total on finite reals. Returns exactly 0 when x lies within
// 1e-12 of a nonpositive integer (the Gamma poles); uses the reflection
// identity for negative non-integer arguments. Magnitudes beyond double range
// saturate to +-inf.
double recip_gamma(double x);

// Log-space form of recip_gamma, with the pole -> sign 0 convention.
SignedLogValue recip_gamma_slv(double x);

// Gamma(a)/Gamma(b) for a, b > 0 via exp(log_gamma(a) - log_gamma(b));
// no intermediate overflow for a, b <= 300.
double gamma_ratio(double a, double b);

// sin(pi x) with argument reduction done on x, exact at integers.
double sin_pi(double x);

}  // namespace rieszwave::specfun
