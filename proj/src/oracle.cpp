#include "rieszwave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace rieszwave::oracle {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kPiOver4 = 0.78539816339744830962;

// Gauss-Kronrod 7-15 nodes/weights (positive half; node 7 is the center).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double fc = f(center);

    double fv1[7], fv2[7];
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kXgk[j];
        fv1[j] = f(center - absc);
        fv2[j] = f(center + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double value = resk * hlgth;
    resasc *= std::fabs(hlgth);
    resabs *= std::fabs(hlgth);
    double err = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, eps50);
    return {a, b, value, err};
}

QuadratureResult adaptive(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints,
                          const QuadratureControls& controls) {
    std::priority_queue<Panel> heap;
    double value = 0.0, error = 0.0;
    int panels = 0;
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        Panel p = gk15(f, breakpoints[i], breakpoints[i + 1]);
        value += p.value;
        error += p.error;
        heap.push(p);
        ++panels;
    }
    while (error > std::max(controls.abs_tol, controls.rel_tol * std::fabs(value))) {
        if (panels >= controls.max_subdivisions)
            throw non_convergence_error("quadrature: subdivision limit (" +
                                        std::to_string(controls.max_subdivisions) +
                                        ") reached, error estimate " + std::to_string(error));
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return {value, error};
}

std::vector<double> uniform_breaks(double a, double b, int n) {
    std::vector<double> pts(n + 1);
    for (int i = 0; i <= n; ++i) pts[i] = a + (b - a) * i / n;
    return pts;
}

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b,
                            const QuadratureControls& controls) {
    controls.validate();
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("quadrature: need finite a < b");
    return adaptive(f, {a, b}, controls);
}

QuadratureResult quadrature_split(const std::function<double(double)>& f,
                                  const std::vector<double>& breakpoints,
                                  const QuadratureControls& controls) {
    controls.validate();
    if (breakpoints.size() < 2) throw std::domain_error("quadrature_split: need >= 2 breakpoints");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::domain_error("quadrature_split: breakpoints must be ascending");
    return adaptive(f, breakpoints, controls);
}

double spectral_u(const EvalPoint& point, const PhysicalParams& params,
                  const QuadratureControls& controls) {
    point.validate();
    params.validate();
    controls.validate();
    if (params.x0 == 0.0)
        throw std::domain_error(
            "spectral_u: x0 = 0 has no absolutely convergent spectral integral; "
            "use the closed-form delta evaluator");

    // Substituting w = v^2 removes the sqrt singularity of the time phase:
    //   u = (mu/pi) int_0^vmax 2 v exp(-x0^2 v^4 / 4) cos(t sqrt(kappa) v) cos(x v^2) dv
    // truncated where the envelope falls below abs_tol/10.
    const double eps0 = std::min(controls.abs_tol / 10.0, 1e-8);
    const double omega_max = (2.0 / params.x0) * std::sqrt(std::log(1.0 / eps0));
    const double v_max = std::sqrt(omega_max);
    const double tk = point.t * std::sqrt(params.kappa);
    const double ax = std::fabs(point.x);

    std::vector<double> pts{0.0};
    double v = 0.0;
    while (v < v_max) {
        v = std::min(v + M_PI / (tk + 2.0 * ax * v + 1.0), v_max);
        pts.push_back(v);
    }
    const double x0sq = params.x0 * params.x0;
    auto integrand = [&](double s) {
        const double s2 = s * s;
        return 2.0 * s * std::exp(-x0sq * s2 * s2 / 4.0) * std::cos(tk * s) * std::cos(point.x * s2);
    };
    QuadratureResult r = adaptive(integrand, pts, controls);
    // Envelope truncation bound, folded into the (internal) error estimate.
    r.error_estimate += std::fabs(params.mu) * std::exp(-x0sq * omega_max * omega_max / 4.0) *
                        (2.0 / M_PI) * omega_max;
    return params.mu / M_PI * r.value;
}

double profile_G(double c, const QuadratureControls& controls) {
    controls.validate();
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::domain_error("profile_G: c must be >= 0");
    if (c == 0.0) return 1.0;
    const int n = std::max(8, static_cast<int>(c / 3.0) + 8);
    auto integrand = [c](double v) { return std::cos(c * (v * v - 1.0)); };
    return adaptive(integrand, uniform_breaks(0.0, 1.0, n), controls).value;
}

namespace detail {

// Large-c form from the Fresnel reduction G(c) = sqrt(pi/2c) [C(z)cos c + S(z)sin c],
// z = sqrt(2c/pi): the auxiliary f-series cancels identically and
//   G(c) = sqrt(pi/8c)(cos c + sin c) - (1/4c^2)[1 - 15/(4c^2) + 945/(16c^4) - 135135/(64c^6) ...]
// (truncation error below 1e-11 for c >= 36).
double profile_G_asymptotic(double c) {
    const double osc = std::sqrt(M_PI / (8.0 * c)) * (std::cos(c) + std::sin(c));
    const double w = 1.0 / (4.0 * c * c);
    const double alg = -w * (1.0 - 15.0 * w + 945.0 * w * w - 135135.0 * w * w * w);
    return osc + alg;
}

double profile_G_any(double c, const QuadratureControls& controls) {
    return (c <= 36.0) ? profile_G(c, controls) : profile_G_asymptotic(c);
}

// G1(c) = int_0^c G = int_0^1 sin(c(v^2-1))/(v^2-1) dv; G1(inf) = pi/4.
double profile_G1_quadrature(double c, const QuadratureControls& controls) {
    if (c == 0.0) return 0.0;
    const int n = std::max(8, static_cast<int>(c / 3.0) + 8);
    auto integrand = [c](double v) {
        const double w = v * v - 1.0;
        if (std::fabs(w) < 1e-8) {
            const double cw = c * w;
            return c * (1.0 - cw * cw / 6.0);
        }
        return std::sin(c * w) / w;
    };
    return adaptive(integrand, uniform_breaks(0.0, 1.0, n), controls).value;
}

// Integrating the G asymptotics term by term (parts ladder on the oscillatory
// piece, exact on the algebraic piece).
double profile_G1_asymptotic(double c) {
    const double P = std::sin(c) - std::cos(c);
    const double Q = std::sin(c) + std::cos(c);
    const double rc = 1.0 / c;
    const double osc = std::sqrt(M_PI / 8.0) *
                       (P * std::sqrt(rc) - 0.5 * Q * std::pow(rc, 1.5) - 0.75 * P * std::pow(rc, 2.5));
    return kPiOver4 + osc + 0.25 * rc - (5.0 / 16.0) * rc * rc * rc;
}

double profile_G1_any(double c, const QuadratureControls& controls) {
    return (c <= 150.0) ? profile_G1_quadrature(c, controls) : profile_G1_asymptotic(c);
}

// Core half-width for the convolution split. The budget allocates ~eps to
// each of: the quartic Taylor residue of the kernel over the core, and the
// dropped remainder of the second-moment antiderivative identity.
double convolution_core_halfwidth(const EvalPoint& point, const PhysicalParams& params) {
    const double a = params.kappa * point.t * point.t / 4.0;
    const double x0 = params.x0;
    const double eps = 1e-9 / 3.0;  // per-piece budget, in units of mu
    // quartic residue: 0.1 sqrt(kappa t^2) eta^{7/2} / x0^5 <= eps
    const double eta4 =
        std::pow(eps * std::pow(x0, 5) / (0.1 * std::sqrt(params.kappa) * point.t), 2.0 / 7.0);
    // moment remainder: (1/(x0^3 sqrt(pi))) (kappa t^2/pi) a * 0.8 c_eta^{-5/2} <= eps
    const double kt2 = params.kappa * point.t * point.t;
    const double c_eta_m2 =
        std::pow(0.8 * kt2 * a / (M_PI * M_PI * std::pow(x0, 3) / kSqrtPi * eps), 0.4);
    double c_eta = std::max({150.0, a / eta4, c_eta_m2});
    double eta = a / c_eta;
    eta = std::min(eta, x0 / 4.0);
    return eta;
}

}  // namespace detail

double fresnel_delta_u(const EvalPoint& point, const PhysicalParams& params,
                       const QuadratureControls& controls) {
    point.validate();
    params.validate();
    controls.validate();
    if (point.x == 0.0) throw std::domain_error("fresnel_delta_u: x = 0 is excluded");
    if (point.t == 0.0) return 0.0;
    const double kt2 = params.kappa * point.t * point.t;
    const double xi = kt2 / std::fabs(point.x);
    return params.mu * kt2 / (2.0 * M_PI * point.x * point.x) *
           detail::profile_G_any(xi / 4.0, controls);
}

double convolution_u(const EvalPoint& point, const PhysicalParams& params,
                     const QuadratureControls& controls) {
    point.validate();
    params.validate();
    controls.validate();
    if (params.x0 <= 0.0) throw std::domain_error("convolution_u: x0 must be > 0");
    if (point.t <= 0.0) throw std::domain_error("convolution_u: t must be > 0");

    const double mu = params.mu, x0 = params.x0;
    const double x = std::fabs(point.x);
    const double kt2 = params.kappa * point.t * point.t;
    const double a = kt2 / 4.0;

    // Unit-mass Gaussian kernel and derivatives (mu rides on the delta field).
    auto kern = [&](double s) { return std::exp(-s * s / (x0 * x0)) / (x0 * kSqrtPi); };
    auto kern2 = [&](double s) {
        return kern(s) * (4.0 * s * s - 2.0 * x0 * x0) / (x0 * x0 * x0 * x0);
    };

    const double eta = detail::convolution_core_halfwidth(point, params);
    const double c_eta = a / eta;

    QuadratureControls inner = controls;
    inner.abs_tol = std::max(std::min(controls.abs_tol, 1e-9) / 4.0, 1e-13);
    inner.rel_tol = 1e-12;

    // Tail mass int_{|y|>=eta} u_delta = (mu kt2/pi) int_0^{1/eta} G(a v) dv,
    // by the v = 1/y substitution; the integrand is bounded and smooth.
    {
        // separate scope: breakpoints at the oscillation scale a dv ~ pi
        std::vector<double> pts{0.0};
        double v = 0.0;
        const double v_end = 1.0 / eta;
        while (v < v_end) {
            v = std::min(v + M_PI / std::max(a, 1e-8), v_end);
            pts.push_back(v);
        }
        inner.max_subdivisions = static_cast<int>(pts.size()) * 3 + 1000;
        QuadratureResult t0 = adaptive(
            [&](double s) { return detail::profile_G_any(a * s, inner); }, pts, inner);
        const double tail_mass = mu * kt2 / M_PI * t0.value;
        const double m0 = mu - tail_mass;

        // Second truncated moment via the antiderivative identity
        //   int_{c_eta}^inf G(c) c^-2 dc = (pi/4 - G1(c_eta))/c_eta^2 + O(c_eta^-5/2),
        // the dropped remainder being inside the eta error budget.
        const double m2 =
            mu * kt2 / M_PI * a * (kPiOver4 - detail::profile_G1_any(c_eta, inner)) / (c_eta * c_eta);

        const double core = kern(x) * m0 + 0.5 * kern2(x) * m2;

        // Tails: int_eta^Y [k(x-y) + k(x+y)] u_delta(y) dy, split at the local
        // oscillation scale pi y^2 / a, capped at the kernel resolution x0/3.
        const double Y = x + 9.0 * x0;
        std::vector<double> ypts{eta};
        double y = eta;
        while (y < Y) {
            const double step = std::min(M_PI * y * y / a, x0 / 3.0);
            y = std::min(y + step, Y);
            ypts.push_back(y);
        }
        QuadratureControls tail_ctrl = inner;
        tail_ctrl.max_subdivisions = static_cast<int>(ypts.size()) * 3 + 1000;
        QuadratureResult tails = adaptive(
            [&](double s) {
                const double ud =
                    mu * kt2 / (2.0 * M_PI * s * s) * detail::profile_G_any(a / s, inner);
                return (kern(x - s) + kern(x + s)) * ud;
            },
            ypts, tail_ctrl);

        return core + tails.value;
    }
}

}  // namespace rieszwave::oracle
