#include "rieszwave/nodes.hpp"

#include <algorithm>
#include <cmath>

#include "rieszwave/evaluate.hpp"

namespace rieszwave::nodes {

namespace {

constexpr double kGolden = 0.61803398874989485;

struct Scan {
    std::vector<double> xs;
    std::vector<double> us;
    double scale = 0.0;  // max |u| over the grid
};

Scan grid_scan(double t, const PhysicalParams& params, Representation rep, double lo, double hi,
               int n, const SeriesControls& series, const QuadratureControls& quad) {
    Scan s;
    s.xs.resize(n);
    s.us.resize(n);
    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        s.xs[i] = x;
        s.us[i] = evaluate(rep, {x, t}, params, series, quad);
        s.scale = std::max(s.scale, std::fabs(s.us[i]));
    }
    return s;
}

double bisect_root(double t, const PhysicalParams& params, Representation rep, double a, double b,
                   double fa, double xtol, const SeriesControls& series,
                   const QuadratureControls& quad) {
    while (b - a > xtol) {
        const double m = 0.5 * (a + b);
        const double fm = evaluate(rep, {m, t}, params, series, quad);
        if (fa * fm <= 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double default_x_floor(const PhysicalParams& params) {
    return std::max(1e-3, params.x0 / 100.0);
}

NodeReport scan_nodes(double t, const PhysicalParams& params, Representation rep, Window window,
                      int n_grid, double xtol, const SeriesControls& series,
                      const QuadratureControls& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("scan_nodes: t must be > 0");
    if (n_grid < 64) throw std::domain_error("scan_nodes: n_grid must be >= 64");
    if (!(xtol > 0.0)) throw std::domain_error("scan_nodes: xtol must be > 0");

    NodeReport report;
    report.t = t;
    report.params = params;
    report.representation = rep;
    report.x_floor = default_x_floor(params);
    report.window = {std::max(window.lo, report.x_floor), window.hi};
    report.grid_points = n_grid;
    if (!(report.window.lo < report.window.hi))
        throw std::domain_error("scan_nodes: window is empty after applying x_floor");

    const Scan scan = grid_scan(t, params, rep, report.window.lo, report.window.hi, n_grid,
                                series, quad);
    const double cell = (report.window.hi - report.window.lo) / (n_grid - 1);
    const double tangency_tol = 1e-9 * scan.scale;

    std::vector<double> positive_nodes;
    for (int i = 0; i + 1 < n_grid; ++i) {
        if (scan.us[i] == 0.0) {
            positive_nodes.push_back(scan.xs[i]);
            continue;
        }
        if (scan.us[i] * scan.us[i + 1] < 0.0) {
            positive_nodes.push_back(bisect_root(t, params, rep, scan.xs[i], scan.xs[i + 1],
                                                 scan.us[i], xtol, series, quad));
        } else if (i > 0) {
            // Local extremum grazing zero with no sign change: tangency candidate
            // (this is exactly the shape at a pair-birth instant).
            const bool is_min = scan.us[i] < scan.us[i - 1] && scan.us[i] < scan.us[i + 1];
            const bool is_max = scan.us[i] > scan.us[i - 1] && scan.us[i] > scan.us[i + 1];
            if ((is_min || is_max) && std::fabs(scan.us[i]) <= tangency_tol)
                report.degenerate.push_back(scan.xs[i]);
        }
    }
    for (size_t i = 1; i < positive_nodes.size(); ++i)
        if (positive_nodes[i] - positive_nodes[i - 1] < cell) {
            report.warnings.push_back("grid too coarse: adjacent sign changes within one cell");
            break;
        }

    // Mirror to negative x; every representation is even in x.
    report.nodes.reserve(2 * positive_nodes.size());
    for (auto it = positive_nodes.rbegin(); it != positive_nodes.rend(); ++it)
        report.nodes.push_back(-*it);
    for (double z : positive_nodes) report.nodes.push_back(z);

    int i_min = 0;
    for (int i = 1; i < n_grid; ++i)
        if (scan.us[i] < scan.us[i_min]) i_min = i;
    report.min_point = {scan.xs[i_min], scan.us[i_min]};
    return report;
}

MinPoint min_u(double t, const PhysicalParams& params, Representation rep, Window window,
               int n_grid, const SeriesControls& series, const QuadratureControls& quad) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("min_u: t must be > 0");
    const double lo = std::max(window.lo, default_x_floor(params));
    if (!(lo < window.hi)) throw std::domain_error("min_u: window is empty");

    const Scan scan = grid_scan(t, params, rep, lo, window.hi, n_grid, series, quad);
    int i_min = 0;
    for (int i = 1; i < n_grid; ++i)
        if (scan.us[i] < scan.us[i_min]) i_min = i;

    // Golden-section refinement inside the bracketing cells (grid endpoint
    // minima are reported as-is).
    if (i_min == 0 || i_min == n_grid - 1) return {scan.xs[i_min], scan.us[i_min]};
    double a = scan.xs[i_min - 1], b = scan.xs[i_min + 1];
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = evaluate(rep, {x1, t}, params, series, quad);
    double f2 = evaluate(rep, {x2, t}, params, series, quad);
    for (int iter = 0; iter < 80 && (b - a) > 1e-11 * std::max(1.0, std::fabs(a)); ++iter) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = evaluate(rep, {x1, t}, params, series, quad);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = evaluate(rep, {x2, t}, params, series, quad);
        }
    }
    return (f1 < f2) ? MinPoint{x1, f1} : MinPoint{x2, f2};
}

double birth_time(const PhysicalParams& params, Representation rep, Window window, double t_lo,
                  double t_hi, double tol, int n_grid, const SeriesControls& series,
                  const QuadratureControls& quad) {
    if (!(t_lo > 0.0) || !(t_hi > t_lo)) throw std::domain_error("birth_time: bad t bracket");
    double f_lo = min_u(t_lo, params, rep, window, n_grid, series, quad).u_min;
    double f_hi = min_u(t_hi, params, rep, window, n_grid, series, quad).u_min;
    if (f_lo * f_hi > 0.0)
        throw bracket_error("birth_time: u_min has the same sign at both bracket ends");
    while (t_hi - t_lo > tol) {
        const double tm = 0.5 * (t_lo + t_hi);
        const double fm = min_u(tm, params, rep, window, n_grid, series, quad).u_min;
        if (f_lo * fm <= 0.0) {
            t_hi = tm;
            f_hi = fm;
        } else {
            t_lo = tm;
            f_lo = fm;
        }
    }
    return 0.5 * (t_lo + t_hi);
}

std::vector<NodeCount> node_count_curve(const PhysicalParams& params, Representation rep,
                                        const std::vector<double>& t_list, Window window,
                                        int n_grid, const SeriesControls& series,
                                        const QuadratureControls& quad) {
    std::vector<NodeCount> out;
    out.reserve(t_list.size());
    int exited = 0;
    double prev_t = 0.0;
    std::vector<double> prev_positive;
    for (double t : t_list) {
        NodeReport rep_t = scan_nodes(t, params, rep, window, n_grid, 1e-8, series, quad);
        std::vector<double> positive;
        for (double z : rep_t.nodes)
            if (z > 0.0) positive.push_back(z);
        if (prev_t > 0.0) {
            // Outward drift bookkeeping: a previously seen node whose
            // extrapolated position (kappa t^2 law) passes hi has left the window.
            const double growth = (t * t) / (prev_t * prev_t);
            for (double z : prev_positive)
                if (z * growth > window.hi) ++exited;
        }
        out.push_back({t, static_cast<int>(rep_t.nodes.size()),
                       static_cast<int>(rep_t.nodes.size()) + 2 * exited});
        prev_positive = std::move(positive);
        prev_t = t;
    }
    return out;
}

}  // namespace rieszwave::nodes
