#ifndef NUSPECTRA_QUADRATURE_HPP
#define NUSPECTRA_QUADRATURE_HPP

#include <functional>

namespace nuspectra {

// Integral of f over [lo, hi] by 64-node Gauss-Legendre panels, bisected
// until the two-half refinement of each panel agrees with the single-panel
// value to rel_tol (with a small absolute floor for panels that integrate to
// zero by symmetry).
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol = 1e-10);

}  // namespace nuspectra

#endif
