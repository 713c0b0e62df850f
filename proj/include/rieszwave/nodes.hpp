// nodes.hpp
// Locating and tracking the zeros ("nodes") of u(., t): pairwise birth near
// the origin, outward propagation, and counts versus pulse width.
#pragma once

#include <vector>
#include "rieszwave/types.hpp"

namespace rieszwave::nodes {

// Scan window on |x|: the grid covers [max(lo, x_floor), hi] on the positive
// side and results are mirrored to negative x (every evaluator is even in x).
struct Window {
    double lo = 0.0;
    double hi = 6.0;
};

struct MinPoint {
    double x_min = 0.0;
    double u_min = 0.0;
};

struct NodeReport {
    double t = 0.0;
    PhysicalParams params;
    Representation representation = Representation::lambda_form;
    Window window;          // effective window after applying x_floor
    double x_floor = 0.0;   // excluded ball |x| < x_floor around the origin
    int grid_points = 0;
    std::vector<double> nodes;       // +- pairs, ascending, refined to xtol
    std::vector<double> degenerate;  // tangency candidates (|u| ~ 0, no sign change)
    MinPoint min_point;              // over the positive half-window
    std::vector<std::string> warnings;
};

// Default origin exclusion: the series are undefined at x = 0 and the region
// |x| <= eps is outside their validity, so scans keep a small guard ball.
double default_x_floor(const PhysicalParams& params);  // max(1e-3, x0/100)

NodeReport scan_nodes(double t, const PhysicalParams& params, Representation rep,
                      Window window, int n_grid = 4096, double xtol = 1e-10,
                      const SeriesControls& series = {}, const QuadratureControls& quad = {});

MinPoint min_u(double t, const PhysicalParams& params, Representation rep, Window window,
               int n_grid = 512, const SeriesControls& series = {},
               const QuadratureControls& quad = {});

// Bisection on t of the sign of u_min over the window; requires a sign change
// across [t_lo, t_hi] (bracket_error otherwise).
double birth_time(const PhysicalParams& params, Representation rep, Window window,
                  double t_lo, double t_hi, double tol = 1e-6, int n_grid = 512,
                  const SeriesControls& series = {}, const QuadratureControls& quad = {});

struct NodeCount {
    double t = 0.0;
    int count = 0;             // nodes inside the window at this time
    int count_cumulative = 0;  // window count plus pairs that drifted past hi
};

std::vector<NodeCount> node_count_curve(const PhysicalParams& params, Representation rep,
                                        const std::vector<double>& t_list, Window window,
                                        int n_grid = 4096, const SeriesControls& series = {},
                                        const QuadratureControls& quad = {});

}  // namespace rieszwave::nodes
