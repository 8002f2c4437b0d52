#include "nuspectra/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace nuspectra {

namespace {

constexpr int kNodes = 64;

struct GaussRule {
    std::array<double, kNodes> x;
    std::array<double, kNodes> w;
};

// Nodes and weights of the 64-point rule on [-1, 1], by Newton iteration on
// the Legendre recurrence.
GaussRule build_rule() {
    GaussRule rule{};
    const int n = kNodes;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

double panel(const std::function<double(double)>& f, double lo, double hi) {
    static const GaussRule rule = build_rule();
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < kNodes; ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
    return acc * half;
}

double refine(const std::function<double(double)>& f, double lo, double hi, double whole,
              double rel_tol, double abs_floor, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double left = panel(f, lo, mid);
    const double right = panel(f, mid, hi);
    const double sum = left + right;
    if (depth <= 0 || std::abs(sum - whole) <= rel_tol * std::abs(sum) + abs_floor) return sum;
    return refine(f, lo, mid, left, rel_tol, abs_floor * 0.5, depth - 1) +
           refine(f, mid, hi, right, rel_tol, abs_floor * 0.5, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
    const double whole = panel(f, lo, hi);
    const double abs_floor = 1e-15 * (1.0 + std::abs(whole));
    return refine(f, lo, hi, whole, rel_tol, abs_floor, 24);
}

}  // namespace nuspectra
