#ifndef NUSPECTRA_WOODS_SAXON_HPP
#define NUSPECTRA_WOODS_SAXON_HPP

#include <variant>
#include <vector>

#include "nuspectra/nu_engine.hpp"
#include "nuspectra/poly.hpp"
#include "nuspectra/special_fn.hpp"

// Woods-Saxon physics layer: the q-deformed potential and its PT-symmetric
// and non-PT complex variants, the dimensionless reduction, closed-form
// s-state spectra, and normalized bound-state wavefunctions.
namespace nuspectra::ws {

struct PhysicalParams {
    double V0 = 8.0;             // potential depth, MeV
    double R0 = 0.0;             // potential radius, fm
    double a = 1.0;              // surface diffuseness, fm
    double q = 1.0;              // deformation constant
    double hbar2_over_2m = 1.0;  // hbar^2 / 2m, MeV fm^2
};

// hbar^2 / 2m for an average nucleon, MeV fm^2.
inline constexpr double kNucleonHbar2Over2m = 20.7355;

struct RealVariant {};
struct PTSymmetricVariant {
    double alpha_I;  // imaginary inverse-range parameter, 1/fm
};
struct NonPTVariant {
    double V0I;      // imaginary depth, MeV
    double alpha_I;  // 1/fm
};
using Variant = std::variant<RealVariant, PTSymmetricVariant, NonPTVariant>;

// Throws std::invalid_argument on nonpositive parameters (R0 may be zero).
void validate(const PhysicalParams& params, const Variant& variant);

// epsilon = -E / (2 hbar^2 alpha^2 / m), beta = V0 / (2 hbar^2 alpha^2 / m)
// with alpha = 1/(2a); the complex variants substitute alpha -> i alpha_I
// (and V0 -> i V0I for the non-PT case), flipping the scale sign.
struct DimensionlessParams {
    Complex epsilon;
    Complex beta;
    Complex q;
    Complex t;  // principal sqrt(epsilon - beta)
};

DimensionlessParams to_dimensionless(const PhysicalParams& params, const Variant& variant,
                                     Complex energy);
Complex beta_of(const PhysicalParams& params, const Variant& variant);
Complex energy_from_epsilon(const PhysicalParams& params, const Variant& variant, Complex epsilon);

// Potential value at radius r (MeV); complex for the non-Hermitian variants.
// Throws PoleAtR when the denominator vanishes.
Complex potential_value(const PhysicalParams& params, const Variant& variant, double r);

// tau_tilde = 1 - q s, sigma = s(1 - q s),
// sigma_tilde = -eps q^2 s^2 + (2 eps q - beta q) s + (beta - eps).
nu::HypergeometricForm hypergeometric_form(const DimensionlessParams& dimless);

// Quantization root of lambda(t) = lambda_n(t) and the closed-form epsilon_n:
//   t_n = (beta - (n+1)^2) / (2(n+1)),
//   eps_n = (beta/(2(n+1)))^2 + ((n+1)/2)^2 + beta/2.
Complex quantized_t(Complex beta, int n);
Complex closed_form_epsilon(Complex beta, int n);

// Engine-backed one-parameter family in t = sqrt(eps - beta): each evaluation
// rebuilds the hypergeometric form at eps = t^2 + beta, takes k = beta q - q t,
// and follows the branch with pi(0) = t.
nu::SpectralFamily spectral_family(Complex beta, Complex q);
Complex default_guess_t(Complex beta, int n);  // beta / (2(n+1))

struct SpectrumEntry {
    int n;
    Complex t_n;
    Complex epsilon_n;
    Complex E_n;  // MeV
    bool valid;
};

bool level_valid(const PhysicalParams& params, const Variant& variant, int n);
std::vector<SpectrumEntry> spectrum(const PhysicalParams& params, const Variant& variant,
                                    int n_max);

// The unique bound-state branch: admissible tau, Re(B) > 0 and an integrable
// weight at the second sigma root (Re(A) > -1). Larger Re(B) wins if several
// qualify. Throws when none does.
struct BoundBranch {
    nu::NUBranch branch;
    nu::WeightSpec weight;
};
BoundBranch discover_bound_branch(const nu::HypergeometricForm& form);

// s-state R_n(s) = C_n (1-s) s^t P_n^{(2t,1)}(1-2s) on s in (0,1), q = 1.
struct BoundStateWavefunction {
    int n;
    double t;
    double q;
    double C_n;
    JacobiParams jacobi;
};

// Normalization constant against int_0^1 R_n^2 ds = 1, by adaptive quadrature.
double normalize(int n, double t);

// Wavefunction with C_n filled in via normalize(); requires t > 0 and q = 1.
BoundStateWavefunction make_bound_state(int n, double t, double q = 1.0);

// Level n of the real-variant spectrum as a normalized wavefunction.
BoundStateWavefunction bound_state(const PhysicalParams& params, int n);

double wavefunction_eval(const BoundStateWavefunction& wf, double s);

}  // namespace nuspectra::ws

#endif
