#include "rieszwave/types.hpp"

#include <cmath>

namespace rieszwave {

void PhysicalParams::validate() const {
    if (!std::isfinite(mu)) throw std::domain_error("mu must be finite");
    if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::domain_error("kappa must be > 0");
    if (!(x0 >= 0.0) || !std::isfinite(x0)) throw std::domain_error("x0 must be >= 0");
}

void EvalPoint::validate() const {
    if (!std::isfinite(x)) throw std::domain_error("x must be finite");
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::domain_error("t must be >= 0");
}

void SeriesControls::validate() const {
    if (!(term_tol > 0.0)) throw std::domain_error("term_tol must be > 0");
    if (max_terms < 8) throw std::domain_error("max_terms must be >= 8");
    if (k_max < 1) throw std::domain_error("k_max must be >= 1");
}

void QuadratureControls::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw std::domain_error("quadrature tolerances must be > 0");
    if (max_subdivisions < 10) throw std::domain_error("max_subdivisions must be >= 10");
}

Representation parse_representation(std::string_view name) {
    if (name == "hseries") return Representation::h_series;
    if (name == "doublesum") return Representation::double_sum;
    if (name == "lambda") return Representation::lambda_form;
    if (name == "delta") return Representation::delta_series;
    if (name == "approx0") return Representation::approx_leading;
    if (name == "approx1") return Representation::approx_next;
    if (name == "spectral") return Representation::spectral_oracle;
    if (name == "fresnel") return Representation::fresnel_delta;
    if (name == "convolution") return Representation::convolution_oracle;
    throw std::domain_error("unknown representation: " + std::string(name));
}

std::string_view to_string(Representation rep) {
    switch (rep) {
        case Representation::h_series: return "hseries";
        case Representation::double_sum: return "doublesum";
        case Representation::lambda_form: return "lambda";
        case Representation::delta_series: return "delta";
        case Representation::approx_leading: return "approx0";
        case Representation::approx_next: return "approx1";
        case Representation::spectral_oracle: return "spectral";
        case Representation::fresnel_delta: return "fresnel";
        case Representation::convolution_oracle: return "convolution";
    }
    return "?";
}

std::string EvalWarnings::to_string() const {
    if (!any()) return "none";
    std::string out;
    if (zero_time_series) out += "zero-time-series";
    return out;
}

}  // namespace rieszwave
