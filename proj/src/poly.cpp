#include "nuspectra/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nuspectra/errors.hpp"

namespace nuspectra {

namespace {
constexpr double kTrimRel = 1e-14;
}

Poly::Poly(std::initializer_list<Complex> ascending) : coeffs_(ascending) {
    normalize();
}

Poly::Poly(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
    normalize();
}

void Poly::normalize() {
    double maxmag = 0.0;
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("non-finite polynomial coefficient");
        maxmag = std::max(maxmag, std::abs(c));
    }
    const double cut = kTrimRel * maxmag;
    for (Complex& c : coeffs_)
        if (std::abs(c) < cut) c = Complex{};
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex Poly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<size_t>(power)];
}

Complex Poly::operator()(Complex s) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    return acc;
}

Poly Poly::operator-() const {
    std::vector<Complex> out(coeffs_);
    for (Complex& c : out) c = -c;
    return Poly(std::move(out));
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Complex> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < p.coeffs_.size()) out[i] += p.coeffs_[i];
        if (i < q.coeffs_.size()) out[i] += q.coeffs_[i];
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Complex> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(out));
}

Poly operator*(Complex c, const Poly& p) {
    std::vector<Complex> out(p.coeffs_);
    for (Complex& x : out) x *= c;
    return Poly(std::move(out));
}

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<Complex> out(static_cast<size_t>(p.degree()));
    for (int k = 1; k <= p.degree(); ++k)
        out[static_cast<size_t>(k - 1)] = static_cast<double>(k) * p.coeff(k);
    return Poly(std::move(out));
}

double max_abs_coeff(const Poly& p) {
    double m = 0.0;
    for (const Complex& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

Complex discriminant_quadratic(const Poly& p) {
    if (p.degree() > 2) throw std::invalid_argument("discriminant_quadratic: degree > 2");
    const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    return b * b - 4.0 * a * c;
}

Complex principal_sqrt(Complex z) {
    Complex r = std::sqrt(z);
    // std::sqrt already yields Re >= 0; break the Re == 0 tie toward Im >= 0.
    if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
    return r;
}

Poly sqrt_perfect_square(const Poly& p, double tol) {
    if (p.degree() > 2) throw std::invalid_argument("sqrt_perfect_square: degree > 2");
    if (p.is_zero()) return {};

    const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const double scale = max_abs_coeff(p);
    const Complex disc = b * b - 4.0 * a * c;
    if (std::abs(disc) > tol * scale * scale)
        throw NotPerfectSquare("sqrt_perfect_square: discriminant exceeds tolerance");

    // Build L = alpha s + gamma from the better-conditioned end of p.
    Complex alpha, gamma;
    if (std::abs(a) >= std::abs(c)) {
        alpha = principal_sqrt(a);
        gamma = (alpha == Complex{}) ? principal_sqrt(c) : b / (2.0 * alpha);
    } else {
        gamma = principal_sqrt(c);
        alpha = (gamma == Complex{}) ? principal_sqrt(a) : b / (2.0 * gamma);
    }

    Poly root{gamma, alpha};
    if (root.is_zero()) return root;
    const Complex lead = root.coeff(root.degree());
    if (lead.real() < 0.0 || (lead.real() == 0.0 && lead.imag() < 0.0)) root = -root;
    return root;
}

}  // namespace nuspectra
