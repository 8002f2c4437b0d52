#ifndef NUSPECTRA_POLY_HPP
#define NUSPECTRA_POLY_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace nuspectra {

using Complex = std::complex<double>;

// Dense univariate polynomial with complex coefficients, stored in ascending
// powers. Every constructor and arithmetic result is normalized: coefficients
// with magnitude below 1e-14 * max|coeff| are zeroed and trailing zeros are
// stripped, so cancellation cannot inflate the degree. The zero polynomial is
// the empty coefficient vector; its degree is -1. Coefficients must be finite.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Complex> ascending);
    explicit Poly(std::vector<Complex> ascending);
    static Poly constant(Complex c) { return Poly{c}; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of s^power; zero outside the stored range.
    Complex coeff(int power) const;
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Horner evaluation.
    Complex operator()(Complex s) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(Complex c, const Poly& p);

  private:
    void normalize();
    std::vector<Complex> coeffs_;
};

Poly derivative(const Poly& p);

// Largest coefficient magnitude (0 for the zero polynomial).
double max_abs_coeff(const Poly& p);

// b^2 - 4ac for p = a s^2 + b s + c (a may be zero; then returns b^2).
// Throws std::invalid_argument for degree > 2.
Complex discriminant_quadratic(const Poly& p);

// The linear polynomial L with L^2 = p, for p of degree <= 2 whose
// discriminant vanishes within tol * max|coeff|^2. The sign is fixed so the
// leading coefficient of L has non-negative real part (non-negative imaginary
// part on ties). Throws NotPerfectSquare when the discriminant is too large.
Poly sqrt_perfect_square(const Poly& p, double tol = 1e-9);

// Principal complex square root: branch cut on the negative real axis,
// Re >= 0, ties broken to Im >= 0.
Complex principal_sqrt(Complex z);

}  // namespace nuspectra

#endif
