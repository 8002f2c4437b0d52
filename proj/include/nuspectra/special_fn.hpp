#ifndef NUSPECTRA_SPECIAL_FN_HPP
#define NUSPECTRA_SPECIAL_FN_HPP

#include "nuspectra/poly.hpp"

namespace nuspectra {

// Jacobi parameters (a, b) inside the classical orthogonality range a, b > -1.
struct JacobiParams {
    JacobiParams(double a_, double b_);
    double a;
    double b;
};

// log Gamma(x) for x > 0, accurate to better than 1e-10 relative.
double log_gamma(double x);

// Generalized binomial coefficient C(top, k) = Gamma(top+1) /
// (Gamma(k+1) Gamma(top-k+1)) for real top with top - k > -1.
double binomial(double top, int k);

// P_n^{(a,b)}(x) via the standard three-term recurrence. |x| may exceed 1 by
// at most 1e-12 (clamped); larger arguments are a domain error.
double jacobi_recurrence(int n, const JacobiParams& params, double x);

// P_n^{(a,b)}(x) via the explicit hypergeometric finite sum in ((x-1)/2)^m
// with gamma-ratio coefficients; an independent route for cross-validation.
double jacobi_rodrigues_sum(int n, const JacobiParams& params, double x);

// Coefficients of the shifted polynomial P_n^{(a,b)}(1 - 2s) in s, built from
// the binomial-product expansion (no recurrence involved).
Poly jacobi_shifted_poly(int n, const JacobiParams& params);

}  // namespace nuspectra

#endif
