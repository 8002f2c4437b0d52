#ifndef NUSPECTRA_VERIFY_HPP
#define NUSPECTRA_VERIFY_HPP

#include <span>
#include <string>
#include <vector>

#include "nuspectra/nu_engine.hpp"
#include "nuspectra/woods_saxon.hpp"

// Independent numeric oracles for the closed-form results: an ODE residual
// evaluated with exact symbolic derivatives, a finite-difference eigenvalue
// check of the weighted Sturm-Liouville operator, and secant cross-checks of
// the quantization condition. None of these reuse the code path they test.
namespace nuspectra::verify {

struct ResidualReport {
    double max_residual = 0.0;        // max(per_point) / scale
    std::vector<double> sample_points;
    std::vector<double> per_point;    // raw |R'' + (tau~/sigma) R' + (sigma~/sigma^2) R|
    double scale = 0.0;               // max |R| over the sample points
};

// count Chebyshev-spaced points strictly inside (lo, hi), ascending.
std::vector<double> chebyshev_points(int count, double lo, double hi);

// Residual of R_n in the hypergeometric-type equation at the given points.
// R and its first two derivatives come from the power-rule expansion of
// s^t (1-s) P(s), with P in explicit coefficient form; no numeric
// differentiation and no recurrence evaluation.
ResidualReport ode_residual(const nu::HypergeometricForm& form,
                            const ws::BoundStateWavefunction& wf, std::span<const double> points);

// Residual for level n of the real q=1 family at beta, with epsilon scaled by
// (1 + epsilon_perturbation); zero perturbation probes the exact level.
ResidualReport level_residual(double beta, int n, double epsilon_perturbation = 0.0);

// Lowest n_levels eigenvalues of the central-difference discretization of
// (sigma rho y')' + lambda rho y = 0 on a uniform interior grid of (0, 1)
// with sigma = s(1-s), rho = s^{2t}(1-s); expected lambda_n = n(n + 2t + 2).
std::vector<double> fd_jacobi_eigen(double t, int n_levels, int grid_size);

struct CrossCheck {
    Complex closed;    // closed-form epsilon_n
    Complex oracle;    // epsilon from the engine-backed secant solution
    double rel_diff;
};

// Closed form versus secant with deliberately perturbed initial guesses
// (0.7 t0 and 1.6 t0).
CrossCheck quantization_crosscheck(const ws::PhysicalParams& params, const ws::Variant& variant,
                                   int n);

// Three recorded discrepancies between published closed forms and what the
// derivation yields, with numeric evidence.
std::string errata_report();

struct CheckLine {
    std::string name;
    bool pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckLine> checks;
    bool all_pass = true;
    std::string errata;
    std::string notes;
};

// The full oracle suite; a nonzero epsilon_perturbation is the failure-path
// hook and must drive the residual checks red.
VerificationReport run_all(double epsilon_perturbation = 0.0);

}  // namespace nuspectra::verify

#endif
