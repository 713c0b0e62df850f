#include "rieszwave/analytic.hpp"

#include <cmath>

#include "rieszwave/specfun.hpp"
#include "series_kernel.hpp"

namespace rieszwave::analytic {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Common series-evaluator preamble. Returns true when the caller should
// return early with value 0 (t = 0 with x != 0).
bool series_preamble(const EvalPoint& point, const PhysicalParams& params,
                     const SeriesControls& controls, EvalWarnings* warnings) {
    point.validate();
    params.validate();
    controls.validate();
    if (point.x == 0.0)
        throw std::domain_error("series representations are undefined at x = 0");
    if (point.t == 0.0) {
        // Every term carries a positive power of t^2. The limit value 0 is
        // returned, flagged: the initial datum itself is the Gaussian pulse.
        if (warnings) warnings->zero_time_series = true;
        return true;
    }
    return false;
}

double xi_of(const EvalPoint& point, const PhysicalParams& params) {
    return params.kappa * point.t * point.t / std::fabs(point.x);
}

double q_of(const EvalPoint& point, const PhysicalParams& params) {
    return params.x0 / (2.0 * params.kappa * point.t * point.t);
}

}  // namespace

double gaussian_ic(double x, const PhysicalParams& params) {
    params.validate();
    if (params.x0 == 0.0)
        throw std::domain_error("gaussian_ic: the delta pulse (x0 = 0) has no pointwise value");
    const double r = x / params.x0;
    return params.mu * std::exp(-r * r) / (params.x0 * kSqrtPi);
}

double scaled_argument(const EvalPoint& point, const PhysicalParams& params) {
    point.validate();
    params.validate();
    if (point.x == 0.0) throw std::domain_error("scaled_argument: x = 0 is excluded");
    return xi_of(point, params);
}

double lambda_nk(int n, int k) {
    if (n < 0 || k < 0) throw std::domain_error("lambda_nk: n, k must be >= 0");
    const int s = n + k;  // the value depends on n and k only through n+k
    using specfun::SignedLogValue;
    const SignedLogValue ratio = SignedLogValue::from_log(
        specfun::log_gamma(1.0 + s) - specfun::log_gamma(3.0 + 4.0 * s), 1);
    return (ratio * specfun::recip_gamma_slv(-0.5 - s)).value();
}

double big_lambda(int s, double q) {
    if (s < 0) throw std::domain_error("big_lambda: s must be >= 0");
    if (!(q >= 0.0) || !std::isfinite(q)) throw std::domain_error("big_lambda: q must be >= 0");
    const double q2 = q * q;
    double w = 1.0;  // q^{2k}/k!
    double sum = (s % 2 == 0) ? 1.0 : -1.0;
    for (int k = 1; k <= s; ++k) {
        w *= q2 / k;
        sum += ((s - k) % 2 == 0) ? w : -w;
    }
    return sum;
}

double theta_k_series(int k, double xi, const SeriesControls& controls, ThetaScale scale) {
    if (k < 0) throw std::domain_error("theta_k_series: k must be >= 0");
    if (!(xi > 0.0) || !std::isfinite(xi)) throw std::domain_error("theta_k_series: xi must be > 0");
    controls.validate();
    const auto inner =
        (scale == ThetaScale::twice_xi) ? detail::InnerScale::twice_xi : detail::InnerScale::xi;
    return detail::dispatch_by_xi(xi, "theta series", [&](auto x) {
        using R = decltype(x);
        R pre = x / detail::root_pi<R>();  // xi^{1+2k} 4^k / sqrt(pi)
        for (int j = 0; j < k; ++j) pre *= R(4) * x * x;
        return pre * detail::theta_inner_sum<R>(k, x, inner, controls);
    });
}

double u_hseries(const EvalPoint& point, const PhysicalParams& params,
                 const SeriesControls& controls, EvalWarnings* warnings, ThetaScale scale) {
    if (series_preamble(point, params, controls, warnings)) return 0.0;
    if (params.x0 == 0.0 && scale == ThetaScale::twice_xi) {
        // Zero-width limit: only the k = 0 coefficient survives and the
        // expansion collapses to the delta solution exactly.
        return u_delta(point, params, controls, warnings);
    }
    const double xi = xi_of(point, params);
    const double q = q_of(point, params);
    const auto inner =
        (scale == ThetaScale::twice_xi) ? detail::InnerScale::twice_xi : detail::InnerScale::xi;
    const double sum = detail::dispatch_by_xi(xi, "pulse-width expansion", [&](auto x) {
        using R = decltype(x);
        return detail::hseries_sum<R>(x, R(q), inner, controls);
    });
    return params.mu / (params.kappa * point.t * point.t) * sum;
}

double u_doublesum(const EvalPoint& point, const PhysicalParams& params,
                   const SeriesControls& controls, EvalWarnings* warnings) {
    if (series_preamble(point, params, controls, warnings)) return 0.0;
    if (params.x0 == 0.0) return u_delta(point, params, controls, warnings);
    const double xi = xi_of(point, params);
    const double q = q_of(point, params);
    const double sum = detail::dispatch_by_xi(xi, "double-sum series", [&](auto x) {
        using R = decltype(x);
        return detail::double_sum<R>(x, R(q), controls);
    });
    return params.mu / (kSqrtPi * std::fabs(point.x)) * sum;
}

double u_lambda(const EvalPoint& point, const PhysicalParams& params,
                const SeriesControls& controls, EvalWarnings* warnings) {
    if (series_preamble(point, params, controls, warnings)) return 0.0;
    if (params.x0 == 0.0) return u_delta(point, params, controls, warnings);
    const double xi = xi_of(point, params);
    const double q = q_of(point, params);
    const double sum = detail::dispatch_by_xi(xi, "lambda form series", [&](auto x) {
        using R = decltype(x);
        return detail::lambda_form_sum<R>(x, R(q), controls);
    });
    const double kt2 = params.kappa * point.t * point.t;
    return params.mu / M_PI * (kt2 / (point.x * point.x)) * sum;
}

double u_delta_profile(double xi, const SeriesControls& controls) {
    if (!(xi >= 0.0) || !std::isfinite(xi))
        throw std::domain_error("u_delta_profile: xi must be >= 0");
    controls.validate();
    if (xi == 0.0) return 0.5;
    return detail::dispatch_by_xi(xi, "delta profile series", [&](auto x) {
        using R = decltype(x);
        return detail::profile_sum<R>(x, controls);
    });
}

double u_delta(const EvalPoint& point, const PhysicalParams& params,
               const SeriesControls& controls, EvalWarnings* warnings) {
    if (series_preamble(point, params, controls, warnings)) return 0.0;
    const double xi = xi_of(point, params);
    const double kt2 = params.kappa * point.t * point.t;
    return params.mu / M_PI * (kt2 / (point.x * point.x)) * u_delta_profile(xi, controls);
}

double u_approx_leading(const EvalPoint& point, const PhysicalParams& params) {
    point.validate();
    params.validate();
    if (point.x == 0.0) throw std::domain_error("u_approx_leading: x = 0 is excluded");
    const double r = point.t / point.x;
    return params.mu * params.kappa / (2.0 * M_PI) * r * r;
}

double u_approx_next(const EvalPoint& point, const PhysicalParams& params) {
    point.validate();
    params.validate();
    if (point.x == 0.0) throw std::domain_error("u_approx_next: x = 0 is excluded");
    if (point.t == 0.0) return 0.0;
    const double xi = xi_of(point, params);
    const double q = q_of(point, params);
    const double kt2 = params.kappa * point.t * point.t;
    // s <= 1 truncation; Gamma(4)/Gamma(7) = 1/120 and Lambda_1 = q^2 - 1.
    const double bracket = 0.5 + xi * xi / 120.0 * (q * q - 1.0);
    return params.mu / M_PI * (kt2 / (point.x * point.x)) * bracket;
}

}  // namespace rieszwave::analytic
