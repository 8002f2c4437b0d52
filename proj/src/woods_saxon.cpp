#include "nuspectra/woods_saxon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nuspectra/errors.hpp"
#include "nuspectra/quadrature.hpp"

namespace nuspectra::ws {

namespace {

constexpr double kExponentTol = 1e-9;

// 2 hbar^2 alpha_I^2 / m for the complex variants (alpha_I given directly).
double imag_scale(const PhysicalParams& params, double alpha_I) {
    return 4.0 * params.hbar2_over_2m * alpha_I * alpha_I;
}

// 2 hbar^2 alpha^2 / m with alpha = 1/(2a) for the real variant.
double real_scale(const PhysicalParams& params) {
    return params.hbar2_over_2m / (params.a * params.a);
}

}  // namespace

void validate(const PhysicalParams& params, const Variant& variant) {
    if (!(params.a > 0.0)) throw std::invalid_argument("params: require a > 0");
    if (!(params.R0 >= 0.0)) throw std::invalid_argument("params: require R0 >= 0");
    if (!(params.q > 0.0)) throw std::invalid_argument("params: require q > 0");
    if (!(params.hbar2_over_2m > 0.0))
        throw std::invalid_argument("params: require hbar2_over_2m > 0");
    if (std::holds_alternative<NonPTVariant>(variant)) {
        const auto& v = std::get<NonPTVariant>(variant);
        if (!(v.V0I > 0.0)) throw std::invalid_argument("params: require V0I > 0");
        if (!(v.alpha_I > 0.0)) throw std::invalid_argument("params: require alpha_I > 0");
    } else {
        if (!(params.V0 > 0.0)) throw std::invalid_argument("params: require V0 > 0");
        if (std::holds_alternative<PTSymmetricVariant>(variant) &&
            !(std::get<PTSymmetricVariant>(variant).alpha_I > 0.0))
            throw std::invalid_argument("params: require alpha_I > 0");
    }
}

Complex beta_of(const PhysicalParams& params, const Variant& variant) {
    if (std::holds_alternative<RealVariant>(variant))
        return Complex{params.V0 / real_scale(params), 0.0};
    if (std::holds_alternative<PTSymmetricVariant>(variant)) {
        const auto& v = std::get<PTSymmetricVariant>(variant);
        return Complex{-params.V0 / imag_scale(params, v.alpha_I), 0.0};
    }
    const auto& v = std::get<NonPTVariant>(variant);
    return Complex{0.0, -v.V0I / imag_scale(params, v.alpha_I)};
}

DimensionlessParams to_dimensionless(const PhysicalParams& params, const Variant& variant,
                                     Complex energy) {
    DimensionlessParams out;
    out.beta = beta_of(params, variant);
    out.q = Complex{params.q, 0.0};
    if (std::holds_alternative<RealVariant>(variant)) {
        out.epsilon = -energy / real_scale(params);
    } else {
        const double alpha_I = std::holds_alternative<PTSymmetricVariant>(variant)
                                   ? std::get<PTSymmetricVariant>(variant).alpha_I
                                   : std::get<NonPTVariant>(variant).alpha_I;
        out.epsilon = energy / imag_scale(params, alpha_I);
    }
    out.t = principal_sqrt(out.epsilon - out.beta);
    return out;
}

Complex energy_from_epsilon(const PhysicalParams& params, const Variant& variant,
                            Complex epsilon) {
    if (std::holds_alternative<RealVariant>(variant)) return -epsilon * real_scale(params);
    const double alpha_I = std::holds_alternative<PTSymmetricVariant>(variant)
                               ? std::get<PTSymmetricVariant>(variant).alpha_I
                               : std::get<NonPTVariant>(variant).alpha_I;
    return epsilon * imag_scale(params, alpha_I);
}

Complex potential_value(const PhysicalParams& params, const Variant& variant, double r) {
    const double q = params.q;
    if (std::holds_alternative<RealVariant>(variant)) {
        // -V0 / (1 + q e^{(r-R0)/a}); no pole for q > 0.
        return Complex{-params.V0 / (1.0 + q * std::exp((r - params.R0) / params.a)), 0.0};
    }
    const bool pt = std::holds_alternative<PTSymmetricVariant>(variant);
    const double alpha_I =
        pt ? std::get<PTSymmetricVariant>(variant).alpha_I : std::get<NonPTVariant>(variant).alpha_I;
    const double theta = 2.0 * alpha_I * (r - params.R0);
    const Complex denom = 1.0 + q * std::exp(Complex{0.0, theta});
    if (std::abs(denom) < 1e-14) throw PoleAtR("potential_value: denominator vanished");
    const Complex depth =
        pt ? Complex{params.V0, 0.0} : Complex{0.0, std::get<NonPTVariant>(variant).V0I};
    return -depth / denom;
}

nu::HypergeometricForm hypergeometric_form(const DimensionlessParams& dimless) {
    const Complex q = dimless.q, eps = dimless.epsilon, beta = dimless.beta;
    Poly tau_tilde{Complex{1.0, 0.0}, -q};
    Poly sigma{Complex{}, Complex{1.0, 0.0}, -q};
    Poly sigma_tilde{beta - eps, 2.0 * eps * q - beta * q, -eps * q * q};
    return nu::HypergeometricForm(std::move(tau_tilde), std::move(sigma), std::move(sigma_tilde));
}

Complex quantized_t(Complex beta, int n) {
    const double m = static_cast<double>(n + 1);
    return (beta - m * m) / (2.0 * m);
}

Complex closed_form_epsilon(Complex beta, int n) {
    const double m = static_cast<double>(n + 1);
    const Complex half_ratio = beta / (2.0 * m);
    return half_ratio * half_ratio + Complex{m * m / 4.0, 0.0} + 0.5 * beta;
}

nu::SpectralFamily spectral_family(Complex beta, Complex q) {
    auto member = [beta, q](Complex t) {
        DimensionlessParams d{t * t + beta, beta, q, t};
        auto form = hypergeometric_form(d);
        auto pair = nu::branches(form, beta * q - q * t);
        // Follow the branch continuing pi(0) = t; the other has pi(0) = -t.
        const nu::NUBranch& br = (std::abs(pair[0].pi(Complex{}) - t) <=
                                  std::abs(pair[1].pi(Complex{}) - t))
                                     ? pair[0]
                                     : pair[1];
        return std::make_pair(br, std::move(form));
    };
    nu::SpectralFamily family;
    family.lambda = [member](Complex t) { return member(t).first.lambda; };
    family.lambda_n = [member](int n, Complex t) {
        auto [branch, form] = member(t);
        return nu::lambda_n(n, branch, form);
    };
    return family;
}

Complex default_guess_t(Complex beta, int n) { return beta / (2.0 * static_cast<double>(n + 1)); }

bool level_valid(const PhysicalParams& params, const Variant& variant, int n) {
    if (n < 0) return false;
    const double m = static_cast<double>(n + 1);
    if (std::holds_alternative<RealVariant>(variant))
        return beta_of(params, variant).real() > m * m;
    if (std::holds_alternative<PTSymmetricVariant>(variant)) {
        const auto& v = std::get<PTSymmetricVariant>(variant);
        return m * m < params.V0 / imag_scale(params, v.alpha_I);
    }
    const auto& v = std::get<NonPTVariant>(variant);
    return m * m < v.V0I / imag_scale(params, v.alpha_I);
}

std::vector<SpectrumEntry> spectrum(const PhysicalParams& params, const Variant& variant,
                                    int n_max) {
    if (n_max < 0) throw std::invalid_argument("spectrum: n_max < 0");
    validate(params, variant);
    const Complex beta = beta_of(params, variant);
    std::vector<SpectrumEntry> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        SpectrumEntry entry;
        entry.n = n;
        entry.t_n = quantized_t(beta, n);
        entry.epsilon_n = closed_form_epsilon(beta, n);
        entry.E_n = energy_from_epsilon(params, variant, entry.epsilon_n);
        entry.valid = level_valid(params, variant, n);
        out.push_back(entry);
    }
    return out;
}

BoundBranch discover_bound_branch(const nu::HypergeometricForm& form) {
    std::vector<BoundBranch> found;
    for (Complex k : nu::k_candidates(form)) {
        for (const nu::NUBranch& branch : nu::branches(form, k)) {
            if (!nu::admissible(branch)) continue;
            nu::WeightSpec w = nu::weight(form, branch);
            if (w.exponent_at_zero.real() <= kExponentTol) continue;
            if (w.exponent_at_inv_q.real() <= -1.0 + kExponentTol) continue;
            found.push_back(BoundBranch{branch, w});
        }
    }
    if (found.empty())
        throw std::runtime_error("discover_bound_branch: no normalizable branch");
    // Prefer the weight vanishing fastest at s = 0.
    auto best = std::max_element(found.begin(), found.end(), [](const auto& l, const auto& r) {
        return l.weight.exponent_at_zero.real() < r.weight.exponent_at_zero.real();
    });
    return *best;
}

double normalize(int n, double t) {
    if (!(t > 0.0)) throw std::domain_error("normalize: require t > 0");
    const JacobiParams jp(2.0 * t, 1.0);
    auto density = [&](double s) {
        const double body = (1.0 - s) * std::pow(s, t) * jacobi_recurrence(n, jp, 1.0 - 2.0 * s);
        return body * body;
    };
    const double norm2 = integrate(density, 0.0, 1.0, 1e-10);
    return 1.0 / std::sqrt(norm2);
}

BoundStateWavefunction make_bound_state(int n, double t, double q) {
    if (q != 1.0) throw std::invalid_argument("make_bound_state: only q = 1 is supported");
    if (!(t > 0.0)) throw std::domain_error("make_bound_state: require t > 0");
    return BoundStateWavefunction{n, t, q, normalize(n, t), JacobiParams(2.0 * t, 1.0)};
}

BoundStateWavefunction bound_state(const PhysicalParams& params, int n) {
    validate(params, RealVariant{});
    if (params.q != 1.0) throw std::invalid_argument("bound_state: only q = 1 is supported");
    if (!level_valid(params, RealVariant{}, n))
        throw std::domain_error("bound_state: level is not bound");
    const Complex t = quantized_t(beta_of(params, RealVariant{}), n);
    return make_bound_state(n, t.real());
}

double wavefunction_eval(const BoundStateWavefunction& wf, double s) {
    if (wf.q != 1.0) throw std::invalid_argument("wavefunction_eval: only q = 1 is supported");
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("wavefunction_eval: require 0 < s < 1");
    return wf.C_n * (1.0 - s) * std::pow(s, wf.t) *
           jacobi_recurrence(wf.n, wf.jacobi, 1.0 - 2.0 * s);
}

}  // namespace nuspectra::ws
