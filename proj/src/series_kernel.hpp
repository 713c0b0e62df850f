// series_kernel.hpp (internal)
// Templated summation kernels for the solution series. The alternating sums
// suffer catastrophic cancellation at large xi (partial sums peak near
// exp(xi/4) while the result is O(1/sqrt(xi))), so the accumulation runs in a
// precision tier chosen from xi; coefficients are built by exact rational
// recurrences with a single sqrt(pi) constant, never by per-term Gamma calls.
#pragma once

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rieszwave/types.hpp"

namespace rieszwave::analytic::detail {

using mp50 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>>;
using mp120 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;
using mp200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

// Largest xi the mp200 tier resolves to full double accuracy. The default
// max_terms runs out slightly below this anyway.
inline constexpr double kXiPrecisionLimit = 1600.0;

[[noreturn]] inline void throw_nonconvergence(const char* what, double xi, int terms) {
    throw non_convergence_error(std::string(what) + ": no convergence after " +
                                std::to_string(terms) + " terms (xi=" + std::to_string(xi) + ")");
}

template <class R>
R root_pi() {
    return boost::math::constants::root_pi<R>();
}

// Two consecutive sub-threshold terms end the sum; a single small term is not
// trusted in an alternating series.
template <class R>
class TailCutoff {
  public:
    explicit TailCutoff(double term_tol) : tol_(term_tol) {}
    bool done(const R& term, const R& partial) {
        using std::abs;
        R scale = abs(partial);
        if (scale < R(1e-300)) scale = R(1e-300);
        if (abs(term) <= tol_ * scale) {
            return ++small_count_ >= 2;
        }
        small_count_ = 0;
        return false;
    }

  private:
    R tol_;
    int small_count_ = 0;
};

// f(xi) = sum_s (-1)^s [Gamma(2s+2)/Gamma(4s+3)] xi^{2s}; c_0 = 1/2 and
// c_{s+1}/c_s = (2s+2)(2s+3) / ((4s+3)(4s+4)(4s+5)(4s+6)).
template <class R>
R profile_sum(const R& xi, const SeriesControls& controls) {
    const R xi2 = xi * xi;
    R term(0.5), sum(0.5);
    TailCutoff<R> cut(controls.term_tol);
    for (int s = 0; s < controls.max_terms; ++s) {
        if (cut.done(term, sum)) return sum;
        const R num = R(2 * s + 2) * R(2 * s + 3);
        const R den = R(4 * s + 3) * R(4 * s + 4) * R(4 * s + 5) * R(4 * s + 6);
        term *= -xi2 * num / den;
        sum += term;
    }
    throw_nonconvergence("delta profile series", static_cast<double>(xi), controls.max_terms);
}

// S(xi,q) = sum_s [Gamma(2s+2)/Gamma(4s+3)] xi^{2s} Lambda_s(q), with
// Lambda_s = q^{2s}/s! - Lambda_{s-1} (exact recurrence of the polynomial).
template <class R>
R lambda_form_sum(const R& xi, const R& q, const SeriesControls& controls) {
    const R xi2 = xi * xi, q2 = q * q;
    R coeff(0.5);       // Gamma(2s+2)/Gamma(4s+3) * xi^{2s}
    R qpow(1);          // q^{2s}/s!
    R lam(1);           // Lambda_s(q)
    R sum = coeff * lam;
    TailCutoff<R> cut(controls.term_tol);
    for (int s = 0; s < controls.max_terms; ++s) {
        if (cut.done(coeff * lam, sum)) return sum;
        const R num = R(2 * s + 2) * R(2 * s + 3);
        const R den = R(4 * s + 3) * R(4 * s + 4) * R(4 * s + 5) * R(4 * s + 6);
        coeff *= xi2 * num / den;
        qpow *= q2 / R(s + 1);
        lam = qpow - lam;
        sum += coeff * lam;
    }
    throw_nonconvergence("lambda form series", static_cast<double>(xi), controls.max_terms);
}

// Double sum over (n,k), grouped diagonally by s = n+k:
//   DS = sum_s lambda_s (2 xi)^{2s+1} sum_{k<=s} (-1)^{k+1} q^{2k}/k!
// lambda_0 = -1/(4 sqrt(pi));
// lambda_{s+1} = lambda_s (1+s)(-3/2-s) / ((3+4s)(4+4s)(5+4s)(6+4s)).
// The caller assembles u = mu/(sqrt(pi)|x|) * DS.
template <class R>
R double_sum(const R& xi, const R& q, const SeriesControls& controls) {
    const R q2 = q * q;
    const R two_xi = R(2) * xi;
    const R two_xi2 = two_xi * two_xi;
    R lam = R(-0.25) / root_pi<R>();  // lambda(0,0) = 1/(Gamma(3) Gamma(-1/2))
    R power = two_xi;                 // (2 xi)^{2s+1}
    R sum(0);
    TailCutoff<R> cut(controls.term_tol);
    for (int s = 0; s < controls.max_terms; ++s) {
        // inner diagonal: sum_{k=0}^{s} (-1)^{k+1} q^{2k}/k!
        R inner(0), w(1);
        for (int k = 0; k <= s; ++k) {
            inner += (k % 2 == 0 ? R(-1) : R(1)) * w;
            w *= q2 / R(k + 1);
        }
        const R term = lam * power * inner;
        sum += term;
        if (cut.done(term, sum)) return sum;
        lam *= R(1 + s) * R(-1.5 - s) /
               (R(3 + 4 * s) * R(4 + 4 * s) * R(5 + 4 * s) * R(6 + 4 * s));
        power *= two_xi2;
    }
    throw_nonconvergence("double-sum series", static_cast<double>(xi), controls.max_terms);
}

enum class InnerScale { twice_xi, xi };

// Inner theta sum over odd l = 2n+1 (even l vanish at the Gamma poles):
//   T_k(xi) = sum_n (-1) Gamma(1+k+n) / (Gamma(3+4k+4n) Gamma(-1/2-k-n)) base^{2n+1}
// assembled from factor chains A_n = Gamma(1+k+n), B_n = Gamma(3+4k+4n),
// C_n = 1/Gamma(-1/2-k-n); theta_k = (4^k/sqrt(pi)) xi^{1+2k} T_k.
// The reflection start is C_0 = -(-1)^k Gamma(3/2+k)/pi.
template <class R>
struct ThetaInner {
    R a, b_inv, c, base, base2, power;
    int k;

    ThetaInner(int k_, const R& xi, InnerScale scale) : k(k_) {
        a = R(1);
        for (int j = 1; j <= k; ++j) a *= R(j);  // Gamma(1+k) = k!
        R b(1);
        for (int j = 2; j <= 4 * k + 2; ++j) b *= R(j);  // Gamma(3+4k) = (4k+2)!
        b_inv = R(1) / b;
        R g32k = root_pi<R>() / R(2);  // Gamma(3/2)
        for (int j = 0; j < k; ++j) g32k *= (R(0.5) + R(1 + j));
        const R pi = boost::math::constants::pi<R>();
        c = -g32k / pi;
        if (k % 2 != 0) c = -c;
        base = (scale == InnerScale::twice_xi) ? R(2) * xi : xi;
        base2 = base * base;
        power = base;
    }

    R term(int n) const {
        (void)n;
        return -a * b_inv * c * power;
    }

    void advance(int n) {
        a *= R(1 + k + n);
        b_inv /= R(3 + 4 * k + 4 * n) * R(4 + 4 * k + 4 * n) * R(5 + 4 * k + 4 * n) *
                 R(6 + 4 * k + 4 * n);
        c *= R(-1.5 - k - n);
        power *= base2;
    }
};

template <class R>
R theta_inner_sum(int k, const R& xi, InnerScale scale, const SeriesControls& controls) {
    ThetaInner<R> it(k, xi, scale);
    R sum(0);
    TailCutoff<R> cut(controls.term_tol);
    for (int n = 0; n < controls.max_terms; ++n) {
        const R term = it.term(n);
        sum += term;
        if (cut.done(term, sum)) return sum;
        it.advance(n);
    }
    throw_nonconvergence("theta series", static_cast<double>(xi), controls.max_terms);
}

// Full pulse-width expansion sum_k (-1)^k/k! q^{2k} theta_k(xi), expressed in
// units of mu/(kappa t^2). Outer terms combine to
//   (1/sqrt(pi)) xi sum_k (-(x0/x)^2)^k / k! * T_k(xi)
// since q^{2k} 4^k xi^{2k} = (x0/|x|)^{2k}.
template <class R>
R hseries_sum(const R& xi, const R& q, InnerScale scale, const SeriesControls& controls) {
    const R y = R(4) * q * q * xi * xi;  // (x0/|x|)^2
    R outer_coeff(1);                    // y^k / k!
    R sum(0);
    TailCutoff<R> cut(controls.term_tol);
    for (int k = 0; k < controls.k_max; ++k) {
        const R tk = theta_inner_sum<R>(k, xi, scale, controls);
        const R term = (k % 2 == 0 ? outer_coeff : -outer_coeff) * tk;
        sum += term;
        if (cut.done(term, sum)) return (xi / root_pi<R>()) * sum;
        outer_coeff *= y / R(k + 1);
    }
    throw_nonconvergence("pulse-width expansion", static_cast<double>(xi), controls.k_max);
}

// Precision tier from xi: cancellation costs ~ xi/4 / ln(10) digits.
// Thresholds keep >= 13 spare digits at the top of each tier.
template <class F>
double dispatch_by_xi(double xi, const char* label, F&& body) {
    if (xi <= 20.0) return body(double(xi));
    if (xi <= 280.0) return static_cast<double>(body(mp50(xi)));
    if (xi <= 800.0) return static_cast<double>(body(mp120(xi)));
    if (xi <= kXiPrecisionLimit) return static_cast<double>(body(mp200(xi)));
    throw non_convergence_error(std::string(label) +
                                ": xi=" + std::to_string(xi) +
                                " exceeds the supported internal-precision range");
}

}  // namespace rieszwave::analytic::detail
