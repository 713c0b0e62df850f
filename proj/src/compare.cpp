#include "rieszwave/compare.hpp"

#include <cmath>

#include "rieszwave/analytic.hpp"
#include "rieszwave/evaluate.hpp"
#include "rieszwave/oracle.hpp"

namespace rieszwave::compare {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double remnant(double x, double x0, double mu) {
    if (x0 == 0.0) return 0.0;
    const double r = x / x0;
    return mu * std::exp(-r * r) / (x0 * kSqrtPi);
}

}  // namespace

void GridSpec::validate() const {
    if (x_values.empty() || t_values.empty() || x0_values.empty())
        throw std::domain_error("GridSpec: value lists must be nonempty");
    for (double x : x_values)
        if (x == 0.0) throw std::domain_error("GridSpec: x = 0 is excluded");
    for (double x0 : x0_values)
        if (x0 < 0.0) throw std::domain_error("GridSpec: x0 must be >= 0");
}

GridSpec fig1_lattice() {
    GridSpec g;
    for (int i = 0; i < 64; ++i) {
        const double x = 0.2 + (15.0 - 0.2) * i / 63.0;
        g.x_values.push_back(-x);
        g.x_values.push_back(x);
    }
    g.t_values = {0.1, 1.7, 5.0, 6.5};
    g.x0_values = {1.0, std::sqrt(0.5), std::sqrt(0.1)};
    return g;
}

ComparisonReport compare_reps(const GridSpec& grid, const PhysicalParams& base,
                              Representation rep_a, Representation rep_b,
                              const SeriesControls& series, const QuadratureControls& quad) {
    grid.validate();
    base.validate();
    ComparisonReport report;
    report.rep_a = rep_a;
    report.rep_b = rep_b;
    for (double x0 : grid.x0_values) {
        PhysicalParams params = base;
        params.x0 = x0;
        for (double t : grid.t_values) {
            for (double x : grid.x_values) {
                CompareRecord rec;
                rec.x = x;
                rec.t = t;
                rec.x0 = x0;
                rec.gaussian_remnant = remnant(x, x0, params.mu);
                try {
                    rec.u_a = evaluate(rep_a, {x, t}, params, series, quad);
                    rec.u_b = evaluate(rep_b, {x, t}, params, series, quad);
                    rec.abs_dev = std::fabs(rec.u_a - rec.u_b);
                    const double den =
                        std::max({std::fabs(rec.u_a), std::fabs(rec.u_b), 1e-300});
                    rec.rel_dev = rec.abs_dev / den;
                    if (rec.abs_dev > report.summary.max_abs_dev)
                        report.summary.max_abs_dev = rec.abs_dev;
                    if (rec.rel_dev > report.summary.max_rel_dev) {
                        report.summary.max_rel_dev = rec.rel_dev;
                        report.summary.worst_x = x;
                        report.summary.worst_t = t;
                        report.summary.worst_x0 = x0;
                    }
                } catch (const std::exception& e) {
                    rec.error = e.what();
                }
                report.records.push_back(std::move(rec));
            }
        }
    }
    return report;
}

std::vector<ValidityPoint> validity_map(const GridSpec& grid, const PhysicalParams& base,
                                        double tol, const SeriesControls& series,
                                        const QuadratureControls& quad) {
    grid.validate();
    base.validate();
    if (!(tol > 0.0)) throw std::domain_error("validity_map: tol must be > 0");
    std::vector<ValidityPoint> out;
    for (double x0 : grid.x0_values) {
        PhysicalParams params = base;
        params.x0 = x0;
        for (double t : grid.t_values) {
            for (double x : grid.x_values) {
                ValidityPoint p;
                p.x = x;
                p.t = t;
                p.x0 = x0;
                p.ratio_x_x0 = (x0 > 0.0) ? std::fabs(x) / x0 : 0.0;
                const double rem = remnant(x, x0, params.mu);
                p.allowance = std::max(tol, 2.0 * rem);
                try {
                    p.xi = analytic::scaled_argument({x, t}, params);
                    if (x0 > 0.0) {
                        p.u_series = analytic::u_lambda({x, t}, params, series);
                        p.u_oracle = oracle::spectral_u({x, t}, params, quad);
                    } else {
                        p.u_series = analytic::u_delta({x, t}, params, series);
                        p.u_oracle = oracle::fresnel_delta_u({x, t}, params, quad);
                    }
                    p.abs_dev = std::fabs(p.u_series - p.u_oracle);
                    p.pass = p.abs_dev <= p.allowance;
                } catch (const std::exception& e) {
                    p.error = e.what();
                    p.pass = false;
                }
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

double half_scale_leading_ratio(double xi, const SeriesControls& series) {
    const EvalPoint point{1.0, std::sqrt(xi)};  // kappa = 1, |x| = 1 gives this xi
    const PhysicalParams params{1.0, 1.0, 0.0};
    const double half = analytic::u_hseries(point, params, series, nullptr,
                                            analytic::ThetaScale::xi);
    const double full = analytic::u_delta(point, params, series);
    return half / full;
}

}  // namespace rieszwave::compare
