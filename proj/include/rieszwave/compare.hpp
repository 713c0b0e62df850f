// compare.hpp
// Pointwise agreement between representations, and the empirical validity map
// of the series solution against the spectral oracle.
#pragma once

#include <string>
#include <vector>
#include "rieszwave/types.hpp"

namespace rieszwave::compare {

struct GridSpec {
    std::vector<double> x_values;   // must exclude 0
    std::vector<double> t_values;
    std::vector<double> x0_values;  // >= 0
    void validate() const;
};

// The figure-1 sampling lattice: x in +-{0.2..15, 64 points per sign},
// t in {0.1, 1.7, 5, 6.5}, x0 in {1, sqrt(0.5), sqrt(0.1)}.
GridSpec fig1_lattice();

struct CompareRecord {
    double x = 0, t = 0, x0 = 0;
    double u_a = 0, u_b = 0;
    double abs_dev = 0, rel_dev = 0;
    double gaussian_remnant = 0;  // mu exp(-(x/x0)^2)/(x0 sqrt(pi)), 0 when x0 = 0
    std::string error;            // per-point evaluator failure, recorded not fatal
};

struct CompareSummary {
    double max_abs_dev = 0, max_rel_dev = 0;
    double worst_x = 0, worst_t = 0, worst_x0 = 0;  // location of max_rel_dev
};

struct ComparisonReport {
    Representation rep_a, rep_b;
    std::vector<CompareRecord> records;  // x0 outer, t middle, x inner
    CompareSummary summary;
};

ComparisonReport compare_reps(const GridSpec& grid, const PhysicalParams& base,
                              Representation rep_a, Representation rep_b,
                              const SeriesControls& series = {},
                              const QuadratureControls& quad = {});

struct ValidityPoint {
    double x = 0, t = 0, x0 = 0;
    double xi = 0, ratio_x_x0 = 0;  // scale-invariant chart coordinates
    double u_series = 0, u_oracle = 0;
    double abs_dev = 0, allowance = 0;  // allowance = max(tol, 2 * remnant)
    bool pass = false;
    std::string error;
};

// Series (lambda form) against the spectral oracle for x0 > 0, against the
// closed delta form for x0 = 0. pass <=> abs_dev <= max(tol, 2 * remnant).
std::vector<ValidityPoint> validity_map(const GridSpec& grid, const PhysicalParams& base,
                                        double tol, const SeriesControls& series = {},
                                        const QuadratureControls& quad = {});

// Ratio of the diagnostic half-scale theta expansion to the consistent one at
// x0 = 0; tends to 1/2 as xi -> 0 (the factor-2 diagnostic of the report).
double half_scale_leading_ratio(double xi, const SeriesControls& series = {});

}  // namespace rieszwave::compare
