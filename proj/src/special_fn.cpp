#include "nuspectra/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nuspectra {

JacobiParams::JacobiParams(double a_, double b_) : a(a_), b(b_) {
    if (!(a > -1.0) || !(b > -1.0))
        throw std::invalid_argument("JacobiParams: require a > -1 and b > -1");
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: require x > 0");
    // Lanczos approximation, g = 7, 9 coefficients.
    static constexpr double kCoef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    if (x < 0.5) {
        // Reflection keeps the series argument above 1/2.
        return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double series = kCoef[0];
    for (int i = 1; i < 9; ++i) series += kCoef[i] / (z + static_cast<double>(i));
    const double base = z + 7.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(base) - base +
           std::log(series);
}

double binomial(double top, int k) {
    if (k < 0) return 0.0;
    if (k == 0) return 1.0;
    return std::exp(log_gamma(top + 1.0) - log_gamma(static_cast<double>(k) + 1.0) -
                    log_gamma(top - static_cast<double>(k) + 1.0));
}

namespace {

double clamp_argument(double x) {
    if (std::abs(x) > 1.0 + 1e-12)
        throw std::domain_error("jacobi: |x| > 1 + 1e-12");
    return std::clamp(x, -1.0, 1.0);
}

}  // namespace

double jacobi_recurrence(int n, const JacobiParams& params, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_recurrence: n < 0");
    x = clamp_argument(x);
    const double a = params.a, b = params.b;
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * ((a + b + 2.0) * x + (a - b));
    for (int m = 2; m <= n; ++m) {
        const double dm = static_cast<double>(m);
        const double apb = a + b;
        const double c1 = 2.0 * dm * (dm + apb) * (2.0 * dm + apb - 2.0);
        const double c2 = (2.0 * dm + apb - 1.0) *
                          ((2.0 * dm + apb) * (2.0 * dm + apb - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (dm + a - 1.0) * (dm + b - 1.0) * (2.0 * dm + apb);
        const double next = (c2 * p - c3 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

double jacobi_rodrigues_sum(int n, const JacobiParams& params, double x) {
    if (n < 0) throw std::invalid_argument("jacobi_rodrigues_sum: n < 0");
    x = clamp_argument(x);
    if (n == 0) return 1.0;
    const double a = params.a, b = params.b;
    const double dn = static_cast<double>(n);
    // P_n = [G(a+n+1) / (n! G(a+b+n+1))] sum_m C(n,m) [G(a+b+n+m+1)/G(a+m+1)] y^m
    const double prefactor =
        std::exp(log_gamma(a + dn + 1.0) - log_gamma(dn + 1.0) - log_gamma(a + b + dn + 1.0));
    const double y = 0.5 * (x - 1.0);
    double sum = 0.0;
    double ypow = 1.0;
    for (int m = 0; m <= n; ++m) {
        const double dm = static_cast<double>(m);
        const double ratio = std::exp(log_gamma(a + b + dn + dm + 1.0) - log_gamma(a + dm + 1.0));
        sum += binomial(dn, m) * ratio * ypow;
        ypow *= y;
    }
    return prefactor * sum;
}

Poly jacobi_shifted_poly(int n, const JacobiParams& params) {
    if (n < 0) throw std::invalid_argument("jacobi_shifted_poly: n < 0");
    // With x = 1 - 2s the factors (x-1)/2 and (x+1)/2 become -s and 1-s:
    // P_n(1-2s) = sum_j C(n+a, n-j) C(n+b, j) (-s)^j (1-s)^{n-j}.
    Poly acc;
    const Poly one_minus_s{1.0, -1.0};
    for (int j = 0; j <= n; ++j) {
        Poly term{binomial(params.a + n, n - j) * binomial(params.b + n, j) *
                  ((j % 2 == 0) ? 1.0 : -1.0)};
        for (int i = 0; i < j; ++i) term = term * Poly{0.0, 1.0};
        for (int i = 0; i < n - j; ++i) term = term * one_minus_s;
        acc = acc + term;
    }
    return acc;
}

}  // namespace nuspectra
