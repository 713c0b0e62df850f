#include "reference.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace testref {

namespace {
using wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;

wide wgamma(const wide& x) { return boost::math::tgamma(x); }
}  // namespace

double ref_delta_profile(double xi) {
    const wide z(xi);
    wide sum(0);
    for (int s = 0; s < 1200; ++s) {
        const wide term = ((s % 2 == 0) ? wide(1) : wide(-1)) * wgamma(wide(2 * s + 2)) /
                          wgamma(wide(4 * s + 3)) * pow(z, 2 * s);
        sum += term;
        if (s > xi / 5 + 8 && abs(term) < wide(1e-45) * (abs(sum) + wide(1e-200))) break;
    }
    return static_cast<double>(sum);
}

double ref_lambda_nk(int n, int k) {
    const int s = n + k;
    const wide num = wgamma(wide(1 + s));
    const wide den = wgamma(wide(3 + 4 * s)) * wgamma(wide(-0.5) - wide(s));
    return static_cast<double>(num / den);
}

double ref_u_gauss(double x, double t, double x0, double mu, double kappa) {
    if (x == 0.0 || t <= 0.0) throw std::domain_error("ref_u_gauss: x != 0, t > 0");
    const wide ax = abs(wide(x));
    const wide kt2 = wide(kappa) * wide(t) * wide(t);
    const wide rk = wide(x0) * wide(x0) / (ax * ax);       // (x0/x)^2
    const wide rn = (wide(2) * kt2 / ax) * (wide(2) * kt2 / ax);  // (2 kt^2/|x|)^2
    wide sum(0);
    for (int k = 0; k < 160; ++k) {
        wide row(0);
        for (int n = 0; n < 400; ++n) {
            const int s = n + k;
            const wide lam =
                wgamma(wide(1 + s)) / (wgamma(wide(3 + 4 * s)) * wgamma(wide(-0.5) - wide(s)));
            const wide term = ((k % 2 == 0) ? wide(-1) : wide(1)) / wgamma(wide(k + 1)) *
                              pow(rk, k) * (wide(2) * kt2 / ax) * pow(rn, n) * lam;
            row += term;
            if (n > static_cast<double>(kt2 / ax) / 2 + 8 &&
                abs(term) < wide(1e-40) * (abs(row) + wide(1e-200)))
                break;
        }
        sum += row;
        if (k > 2 && abs(row) < wide(1e-40) * (abs(sum) + wide(1e-200))) break;
    }
    return static_cast<double>(wide(mu) / sqrt(boost::math::constants::pi<wide>()) / ax * sum);
}

double ref_romberg(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr int kMaxLevel = 22;
    std::vector<double> row(kMaxLevel + 1, 0.0);
    double h = b - a;
    row[0] = 0.5 * h * (f(a) + f(b));
    long n = 1;
    for (int level = 1; level <= kMaxLevel; ++level) {
        double mids = 0.0;
        for (long i = 0; i < n; ++i) mids += f(a + h * (i + 0.5));
        const double trap = 0.5 * (row[0] + h * mids);
        std::vector<double> next(kMaxLevel + 1, 0.0);
        next[0] = trap;
        double p4 = 1.0;
        for (int j = 1; j <= level; ++j) {
            p4 *= 4.0;
            next[j] = next[j - 1] + (next[j - 1] - row[j - 1]) / (p4 - 1.0);
        }
        if (level > 3 && std::fabs(next[level] - row[level - 1]) < tol)
            return next[level];
        row = next;
        h *= 0.5;
        n *= 2;
    }
    return row.back();
}

double ref_G(double c) {
    if (c == 0.0) return 1.0;
    const int pieces = std::max(1, static_cast<int>(c / 2.5));
    double total = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double a = static_cast<double>(i) / pieces;
        const double b = static_cast<double>(i + 1) / pieces;
        total += ref_romberg([c](double v) { return std::cos(c * (v * v - 1.0)); }, a, b, 1e-13);
    }
    return total;
}

}  // namespace testref
