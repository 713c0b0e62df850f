// types.hpp
// Shared domain types: physical constants of the Cauchy problem, evaluation
// points, truncation/tolerance policies, representation tags and error types.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rieszwave {

// Constants mu, kappa, x0 of the pulse problem. kappa > 0 is required by the
// equation; x0 = 0 selects the delta-pulse limit.
struct PhysicalParams {
    double mu = 1.0;
    double kappa = 1.0;
    double x0 = 1.0;
    void validate() const;
};

// Space-time evaluation point. x = 0 is representable but rejected by the
// series evaluators (it lies outside their domain); oracle evaluators accept it.
struct EvalPoint {
    double x = 0.0;
    double t = 0.0;
    void validate() const;
};

// Truncation policy for the power series. A series term is the full summand;
// summation stops once two consecutive terms fall below term_tol relative to
// the running partial sum.
struct SeriesControls {
    double term_tol = 1e-15;
    int max_terms = 400;
    int k_max = 200;  // outer-sum cap for the pulse-width expansion
    void validate() const;
};

struct QuadratureControls {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    void validate() const;
};

// Closed set of solution representations; each tag maps to one evaluator.
enum class Representation {
    h_series,
    double_sum,
    lambda_form,
    delta_series,
    approx_leading,
    approx_next,
    spectral_oracle,
    fresnel_delta,
    convolution_oracle,
};

Representation parse_representation(std::string_view name);
std::string_view to_string(Representation rep);

// Non-fatal flags attached to an evaluation.
struct EvalWarnings {
    // Set when a series evaluator is called at t = 0 with x != 0: every series
    // term carries a positive power of t^2, so the value returned is 0, while
    // the datum of the underlying problem is the Gaussian pulse there.
    bool zero_time_series = false;

    std::string to_string() const;  // "none" or comma list
    bool any() const { return zero_time_series; }
};

class non_convergence_error : public std::runtime_error {
  public:
    explicit non_convergence_error(const std::string& what) : std::runtime_error(what) {}
};

class bracket_error : public std::runtime_error {
  public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rieszwave
