// oracle.hpp
// Independent ground-truth evaluators built on the Fourier symbol of the
// equation, used to cross-validate the series representations.
//
// Derivation (documented here once): writing the equation as
// u_tt + kappa d/dx H[u] = 0 with H the Hilbert transform (symbol -i sgn w),
// the transform gives u_hat_tt + kappa |w| u_hat = 0, oscillatory. With the
// Gaussian datum u_hat(w,0) = mu exp(-(x0 w)^2/4), u_hat_t(w,0) = 0:
//   u(x,t) = (mu/pi) * int_0^inf exp(-(x0 w)^2/4) cos(t sqrt(kappa w)) cos(w x) dw.
// For the delta pulse (x0 = 0) the Abel-regularized inverse transform has the
// closed form u = (mu kappa t^2 / (2 pi x^2)) G(xi/4), xi = kappa t^2/|x|,
// with G(c) = int_0^1 cos(c(v^2-1)) dv.
#pragma once

#include <functional>
#include <vector>
#include "rieszwave/types.hpp"

namespace rieszwave::oracle {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod (7,15) panel quadrature on [a,b].
// error_estimate is the summed panel estimate (plus any truncation bound the
// caller folds in). Throws non_convergence_error when max_subdivisions panels
// are exhausted before reaching max(abs_tol, rel_tol*|value|).
QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b,
                            const QuadratureControls& controls = {});

// Same, starting from caller-provided panel breakpoints (ascending, >= 2).
QuadratureResult quadrature_split(const std::function<double(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  const QuadratureControls& controls = {});

// Spectral solution for x0 > 0 (absolutely convergent integral; any x, t >= 0).
// The domain is truncated where the Gaussian envelope falls below abs_tol/10
// and pre-split at the oscillation scale; the envelope truncation bound is
// added to the error estimate internally.
double spectral_u(const EvalPoint& point, const PhysicalParams& params,
                  const QuadratureControls& controls = {});

// G(c) = int_0^1 cos(c(v^2-1)) dv by adaptive quadrature over [0,1],
// pre-split proportionally to the ~c/pi oscillations. c >= 0.
double profile_G(double c, const QuadratureControls& controls = {});

// Closed-form delta-pulse solution (mu kappa t^2/(2 pi x^2)) G(xi/4). x != 0.
double fresnel_delta_u(const EvalPoint& point, const PhysicalParams& params,
                       const QuadratureControls& controls = {});

// Gaussian-pulse solution as the spatial convolution of the delta solution
// with the unit-mass Gaussian kernel of width x0. Splits at the distributional
// core around y = 0: the |y| < eta core contributes through the truncated
// moments of the delta solution (mass and second moment, both obtained via
// exact antiderivative identities of G), the |y| >= eta tails are integrated
// directly. x0 > 0, t > 0.
double convolution_u(const EvalPoint& point, const PhysicalParams& params,
                     const QuadratureControls& controls = {});

namespace detail {
// G and its antiderivative G1 (d/dc G1 = G, G1(0) = 0, G1(inf) = pi/4) with a
// large-argument asymptotic branch. Quadrature branch matches profile_G; the
// asymptotic branch agrees with it to ~1e-11 at the switch point.
double profile_G_any(double c, const QuadratureControls& controls = {});
double profile_G1_any(double c, const QuadratureControls& controls = {});
double profile_G_asymptotic(double c);
double profile_G1_asymptotic(double c);
double profile_G1_quadrature(double c, const QuadratureControls& controls = {});
// Core half-width eta used by convolution_u for given params/time (exposed
// for tests of the error model).
double convolution_core_halfwidth(const EvalPoint& point, const PhysicalParams& params);
}  // namespace detail

}  // namespace rieszwave::oracle
