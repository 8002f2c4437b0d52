#include "nuspectra/nu_engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nuspectra/errors.hpp"
#include "nuspectra/special_fn.hpp"

namespace nuspectra::nu {

namespace {

// Half the difference sigma' - tau_tilde; recurring building block.
Poly half_shift(const HypergeometricForm& form) {
    return Complex{0.5, 0.0} * (derivative(form.sigma()) - form.tau_tilde());
}

// Falling factorial z (z-1) ... (z-j+1).
Complex falling_factorial(Complex z, int j) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < j; ++i) acc *= z - static_cast<double>(i);
    return acc;
}

bool re_im_greater(Complex lhs, Complex rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
    return lhs.imag() > rhs.imag();
}

}  // namespace

HypergeometricForm::HypergeometricForm(Poly tau_tilde, Poly sigma, Poly sigma_tilde)
    : tau_tilde_(std::move(tau_tilde)), sigma_(std::move(sigma)), sigma_tilde_(std::move(sigma_tilde)) {
    if (tau_tilde_.degree() > 1)
        throw std::invalid_argument("HypergeometricForm: deg tau_tilde > 1");
    if (sigma_.degree() > 2) throw std::invalid_argument("HypergeometricForm: deg sigma > 2");
    if (sigma_.is_zero()) throw std::invalid_argument("HypergeometricForm: sigma is zero");
    if (sigma_tilde_.degree() > 2)
        throw std::invalid_argument("HypergeometricForm: deg sigma_tilde > 2");
}

Poly under_radical(const HypergeometricForm& form, Complex k) {
    const Poly half = half_shift(form);
    return half * half - form.sigma_tilde() + k * form.sigma();
}

std::vector<Complex> k_candidates(const HypergeometricForm& form) {
    // disc_s r(s;k) is at most quadratic in k: with r = (a0 + k s2) s^2 +
    // (b0 + k s1) s + (c0 + k s0) it reads A k^2 + B k + C.
    const Poly half = half_shift(form);
    const Poly base = half * half - form.sigma_tilde();
    const Complex s0 = form.sigma().coeff(0), s1 = form.sigma().coeff(1),
                  s2 = form.sigma().coeff(2);
    const Complex a0 = base.coeff(2), b0 = base.coeff(1), c0 = base.coeff(0);

    const Complex A = s1 * s1 - 4.0 * s2 * s0;
    const Complex B = 2.0 * b0 * s1 - 4.0 * (a0 * s0 + c0 * s2);
    const Complex C = b0 * b0 - 4.0 * a0 * c0;

    const double scale_a = std::abs(s1) * std::abs(s1) + 4.0 * std::abs(s2) * std::abs(s0);
    const double scale_b =
        2.0 * std::abs(b0) * std::abs(s1) + 4.0 * (std::abs(a0) * std::abs(s0) + std::abs(c0) * std::abs(s2));
    const bool a_zero = std::abs(A) <= 1e-12 * scale_a;
    const bool b_zero = std::abs(B) <= 1e-12 * (scale_b + std::abs(C));
    if (a_zero && b_zero)
        throw DegenerateForm("k_candidates: discriminant does not depend on k");
    if (a_zero) return {-C / B};

    // Complex quadratic formula, cancellation-safe root pairing.
    Complex d = principal_sqrt(B * B - 4.0 * A * C);
    if ((std::conj(B) * d).real() < 0.0) d = -d;
    const Complex qq = -0.5 * (B + d);
    std::vector<Complex> roots;
    if (std::abs(qq) <= 1e-14 * (std::abs(B) + std::abs(d))) {
        roots = {-B / (2.0 * A)};
    } else {
        roots = {qq / A, C / qq};
        if (std::abs(roots[0] - roots[1]) <= 1e-9 * (std::abs(roots[0]) + std::abs(roots[1]) + 1.0))
            roots.pop_back();
    }
    std::sort(roots.begin(), roots.end(), re_im_greater);
    return roots;
}

std::vector<NUBranch> branches(const HypergeometricForm& form, Complex k) {
    const Poly half = half_shift(form);
    const Poly root = sqrt_perfect_square(under_radical(form, k));
    std::vector<NUBranch> out;
    for (BranchSign sign : {BranchSign::Plus, BranchSign::Minus}) {
        NUBranch br;
        br.k = k;
        br.sign = sign;
        br.pi = (sign == BranchSign::Plus) ? half + root : half - root;
        if (br.pi.degree() > 1) throw std::invalid_argument("branches: pi degree > 1");
        br.tau = form.tau_tilde() + Complex{2.0, 0.0} * br.pi;
        br.lambda = k + derivative(br.pi).coeff(0);
        out.push_back(std::move(br));
    }
    return out;
}

bool admissible(const NUBranch& branch) { return branch.tau.coeff(1).real() < 0.0; }

Complex lambda_n(int n, const NUBranch& branch, const HypergeometricForm& form) {
    if (n < 0) throw std::invalid_argument("lambda_n: n < 0");
    const double dn = static_cast<double>(n);
    return -dn * branch.tau.coeff(1) - dn * (dn - 1.0) * form.sigma().coeff(2);
}

double branch_residual(const HypergeometricForm& form, const NUBranch& branch) {
    const Poly diff = branch.pi - half_shift(form);
    const Poly res = diff * diff - under_radical(form, branch.k);
    const double scale = std::max(max_abs_coeff(under_radical(form, branch.k)), 1e-30);
    return max_abs_coeff(res) / scale;
}

WeightSpec weight(const HypergeometricForm& form, const NUBranch& branch) {
    const Poly& sigma = form.sigma();
    if (sigma.degree() != 2)
        throw UnsupportedSigma("weight: sigma must be quadratic");
    const double scale = max_abs_coeff(sigma);
    if (std::abs(sigma.coeff(0)) > 1e-9 * scale)
        throw UnsupportedSigma("weight: sigma has no root at s = 0");
    if (std::abs(discriminant_quadratic(sigma)) <= 1e-9 * scale * scale)
        throw UnsupportedSigma("weight: sigma has a double root");

    const Complex sigma1 = sigma.coeff(1);
    const Complex q = -sigma.coeff(2) / sigma1;
    // rho'/rho = (tau - sigma')/sigma = B/s - A q/(1 - q s).
    const Poly numer = branch.tau - derivative(sigma);
    const Complex B = numer(Complex{}) / sigma1;
    const Complex A = -numer(1.0 / q) / sigma1;
    return WeightSpec{B, A, q};
}

Poly rodrigues(int n, const HypergeometricForm& form, const WeightSpec& weight) {
    if (n < 0) throw std::invalid_argument("rodrigues: n < 0");
    if (!(weight.exponent_at_zero.real() > -1.0))
        throw std::domain_error("rodrigues: require Re(B) > -1");
    if (n == 0) return Poly{1.0};

    // sigma^n rho = sigma1^n s^{n+B} (1-qs)^{n+A}; the n-th derivative by the
    // Leibniz rule, then divided by rho, leaves integer powers only:
    //   sigma1^n sum_j C(n,j) ff(n+B, j) ff(n+A, n-j) (-q)^{n-j}
    //            s^{n-j} (1-qs)^j.
    const Complex sigma1 = form.sigma().coeff(1);
    const Complex q = weight.q;
    const Complex B = weight.exponent_at_zero;
    const Complex A = weight.exponent_at_inv_q;
    const Complex nB = static_cast<double>(n) + B;
    const Complex nA = static_cast<double>(n) + A;

    Complex sigma1_pow{1.0, 0.0};
    for (int i = 0; i < n; ++i) sigma1_pow *= sigma1;

    const Poly one_minus_qs{Complex{1.0, 0.0}, -q};
    Poly acc;
    for (int j = 0; j <= n; ++j) {
        Complex coef = binomial(static_cast<double>(n), j) * falling_factorial(nB, j) *
                       falling_factorial(nA, n - j) * sigma1_pow;
        Complex mq_pow{1.0, 0.0};
        for (int i = 0; i < n - j; ++i) mq_pow *= -q;
        coef *= mq_pow;

        Poly term{coef};
        for (int i = 0; i < n - j; ++i) term = term * Poly{Complex{}, Complex{1.0, 0.0}};
        for (int i = 0; i < j; ++i) term = term * one_minus_qs;
        acc = acc + term;
    }
    return acc;
}

Complex quantize(const SpectralFamily& family, int n, Complex guess0, Complex guess1, double tol,
                 int max_iter) {
    auto f = [&](Complex t) { return family.lambda(t) - family.lambda_n(n, t); };
    auto converged = [&](Complex t, Complex ft) {
        return std::abs(ft) < tol * std::max(1.0, std::abs(family.lambda(t)));
    };

    Complex x0 = guess0, x1 = guess1;
    Complex f0 = f(x0), f1 = f(x1);
    if (converged(x1, f1)) return x1;
    if (converged(x0, f0)) return x0;
    for (int it = 0; it < max_iter; ++it) {
        const Complex denom = f1 - f0;
        if (std::abs(denom) == 0.0)
            throw QuantizationDivergence("quantize: stalled secant update");
        const Complex x2 = x1 - f1 * (x1 - x0) / denom;
        const Complex f2 = f(x2);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (converged(x1, f1)) return x1;
    }
    throw QuantizationDivergence("quantize: no convergence within max_iter");
}

}  // namespace nuspectra::nu
