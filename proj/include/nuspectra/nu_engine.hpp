#ifndef NUSPECTRA_NU_ENGINE_HPP
#define NUSPECTRA_NU_ENGINE_HPP

#include <functional>
#include <vector>

#include "nuspectra/poly.hpp"

// Generic Nikiforov-Uvarov pipeline. An equation of hypergeometric type,
//
//     psi'' + (tau_tilde / sigma) psi' + (sigma_tilde / sigma^2) psi = 0,
//
// is reduced by psi = phi * y to sigma y'' + tau y' + lambda y = 0. The
// auxiliary linear polynomial is
//
//     pi = (sigma' - tau_tilde)/2 +- sqrt{ [(sigma'-tau_tilde)/2]^2
//                                          - sigma_tilde + k sigma },
//
// where k is fixed by demanding that the expression under the root be the
// square of a linear polynomial. Each admissible (k, sign) pair carries
// tau = tau_tilde + 2 pi and lambda = k + pi'; the discrete spectrum follows
// from lambda = lambda_n = -n tau' - n(n-1) sigma''/2, and the polynomial
// part of the eigenfunctions from the Rodrigues relation with weight rho
// solving (sigma rho)' = tau rho.
namespace nuspectra::nu {

class HypergeometricForm {
  public:
    // Degree bounds are enforced: deg tau_tilde <= 1, deg sigma <= 2 with
    // sigma not identically zero, deg sigma_tilde <= 2.
    HypergeometricForm(Poly tau_tilde, Poly sigma, Poly sigma_tilde);

    const Poly& tau_tilde() const { return tau_tilde_; }
    const Poly& sigma() const { return sigma_; }
    const Poly& sigma_tilde() const { return sigma_tilde_; }

  private:
    Poly tau_tilde_;
    Poly sigma_;
    Poly sigma_tilde_;
};

enum class BranchSign { Plus, Minus };

struct NUBranch {
    Complex k;
    BranchSign sign;
    Poly pi;         // degree <= 1
    Poly tau;        // tau_tilde + 2 pi
    Complex lambda;  // k + pi'
};

// rho = s^B (1 - q s)^A with B = exponent_at_zero, A = exponent_at_inv_q.
struct WeightSpec {
    Complex exponent_at_zero;
    Complex exponent_at_inv_q;
    Complex q;
};

// [(sigma' - tau_tilde)/2]^2 - sigma_tilde + k sigma.
Poly under_radical(const HypergeometricForm& form, Complex k);

// All k for which the under-radical quadratic has vanishing discriminant,
// sorted by (Re, Im) descending; one entry when the two roots coincide.
// Throws DegenerateForm when the discriminant does not depend on k.
std::vector<Complex> k_candidates(const HypergeometricForm& form);

// The Plus and Minus branches for a given k, in that order.
std::vector<NUBranch> branches(const HypergeometricForm& form, Complex k);

// A branch supports bound states only if Re(tau') < 0.
bool admissible(const NUBranch& branch);

// lambda_n = -n tau' - n(n-1) sigma''/2.
Complex lambda_n(int n, const NUBranch& branch, const HypergeometricForm& form);

// Max coefficient magnitude of (pi - (sigma'-tau_tilde)/2)^2 minus the
// under-radical quadratic, relative to the coefficient scale.
double branch_residual(const HypergeometricForm& form, const NUBranch& branch);

// Weight exponents from partial fractions of (tau - sigma')/sigma; requires
// sigma of the c*s*(1-q*s) shape (throws UnsupportedSigma otherwise).
WeightSpec weight(const HypergeometricForm& form, const NUBranch& branch);

// y_n = (1/rho) d^n/ds^n [sigma^n rho], expanded symbolically term by term;
// the normalizing constant is fixed to 1. Requires Re(B) > -1.
Poly rodrigues(int n, const HypergeometricForm& form, const WeightSpec& weight);

// One-parameter spectral family: lambda and lambda_n as scalar functions of a
// single complex parameter.
struct SpectralFamily {
    std::function<Complex(Complex)> lambda;
    std::function<Complex(int, Complex)> lambda_n;
};

// Secant iteration on lambda(param) - lambda_n(param) from the two supplied
// guesses; converged when |f| < tol * max(1, |lambda|). Throws
// QuantizationDivergence after max_iter iterations or on a stalled update.
Complex quantize(const SpectralFamily& family, int n, Complex guess0, Complex guess1,
                 double tol = 1e-12, int max_iter = 200);

}  // namespace nuspectra::nu

#endif
