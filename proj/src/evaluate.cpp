#include "rieszwave/evaluate.hpp"

#include "rieszwave/analytic.hpp"
#include "rieszwave/oracle.hpp"

namespace rieszwave {

double evaluate(Representation rep, const EvalPoint& point, const PhysicalParams& params,
                const SeriesControls& series, const QuadratureControls& quad,
                EvalWarnings* warnings) {
    using namespace analytic;
    using namespace oracle;
    switch (rep) {
        case Representation::h_series: return u_hseries(point, params, series, warnings);
        case Representation::double_sum: return u_doublesum(point, params, series, warnings);
        case Representation::lambda_form: return u_lambda(point, params, series, warnings);
        case Representation::delta_series: return u_delta(point, params, series, warnings);
        case Representation::approx_leading: return u_approx_leading(point, params);
        case Representation::approx_next: return u_approx_next(point, params);
        case Representation::spectral_oracle: return spectral_u(point, params, quad);
        case Representation::fresnel_delta: return fresnel_delta_u(point, params, quad);
        case Representation::convolution_oracle: return convolution_u(point, params, quad);
    }
    throw std::domain_error("evaluate: unknown representation tag");
}

}  // namespace rieszwave
