// analytic.hpp
// Closed-form series representations of the pulse solution u(x,t) and its
// short-time approximants. All evaluators are pure; they depend on x through
// |x| only and are linear in mu.
//
// Series evaluators reject x = 0 (domain error) and return 0 with a warning
// flag at t = 0, x != 0. Convergence is controlled by SeriesControls; running
// out of terms raises non_convergence_error.
#pragma once

#include "rieszwave/types.hpp"

namespace rieszwave::analytic {

// Inner expansion variable of the theta series. `twice_xi` is the consistent
// form (it reproduces the double-sum representation term by term and the
// closed delta profile); `xi` is a diagnostic variant kept for the comparison
// report, whose leading order is low by a factor 2.
enum class ThetaScale { twice_xi, xi };

// Initial Gaussian pulse mu * exp(-(x/x0)^2) / (x0 sqrt(pi)). x0 > 0.
double gaussian_ic(double x, const PhysicalParams& params);

// Similarity variable xi = kappa t^2 / |x|. x != 0.
double scaled_argument(const EvalPoint& point, const PhysicalParams& params);

// lambda(n,k) = Gamma(1+n+k) / (Gamma(3+4n+4k) Gamma(-1/2-n-k)).
// Depends on n, k only through s = n+k. Underflows to 0 for s beyond ~60.
double lambda_nk(int n, int k);

// Lambda_s(q) = sum_{k=0}^{s} (-1)^{s-k} q^{2k} / k!,  q = x0/(2 kappa t^2).
double big_lambda(int s, double q);

// theta_k as an absolutely convergent odd-power series in the inner variable:
//   theta_k = (4^k/sqrt(pi)) xi^{1+2k}
//             * sum_{l odd} (-1)^l Gamma(1/2+k+l/2)
//               / (Gamma(1+4k+2l) Gamma(-k-l/2)) * base^l
// with base = 2*xi (or xi in the diagnostic variant). Even l vanish through
// the reciprocal-Gamma poles and are skipped analytically.
double theta_k_series(int k, double xi, const SeriesControls& controls = {},
                      ThetaScale scale = ThetaScale::twice_xi);

// u as the pulse-width expansion mu/(kappa t^2) sum_k (-1)^k/k! q^{2k} theta_k.
double u_hseries(const EvalPoint& point, const PhysicalParams& params,
                 const SeriesControls& controls = {}, EvalWarnings* warnings = nullptr,
                 ThetaScale scale = ThetaScale::twice_xi);

// u as the double sum over (n,k), summed diagonally by s = n+k:
//   mu/(sqrt(pi)|x|) sum (-1)^{k+1}/k! (x0/x)^{2k} (2 kappa t^2/|x|)^{2n+1} lambda(n,k)
double u_doublesum(const EvalPoint& point, const PhysicalParams& params,
                   const SeriesControls& controls = {}, EvalWarnings* warnings = nullptr);

// Reference analytic evaluator (fastest convergence):
//   (mu/pi)(kappa t^2/x^2) sum_s [Gamma(2s+2)/Gamma(4s+3)] xi^{2s} Lambda_s(q)
double u_lambda(const EvalPoint& point, const PhysicalParams& params,
                const SeriesControls& controls = {}, EvalWarnings* warnings = nullptr);

// Delta profile f(xi) = sum_s (-1)^s [Gamma(2s+2)/Gamma(4s+3)] xi^{2s}.
double u_delta_profile(double xi, const SeriesControls& controls = {});

// Delta-pulse solution (mu/pi)(kappa t^2/x^2) f(xi).
double u_delta(const EvalPoint& point, const PhysicalParams& params,
               const SeriesControls& controls = {}, EvalWarnings* warnings = nullptr);

// Leading small-xi approximant mu kappa/(2 pi) (t/x)^2.
double u_approx_leading(const EvalPoint& point, const PhysicalParams& params);

// Two-term truncation (mu/pi)(kappa t^2/x^2) [1/2 + (Gamma(4)/Gamma(7)) xi^2 Lambda_1(q)].
double u_approx_next(const EvalPoint& point, const PhysicalParams& params);

}  // namespace rieszwave::analytic
