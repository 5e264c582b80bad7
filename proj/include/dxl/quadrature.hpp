#ifndef DXL_QUADRATURE_HPP
#define DXL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace dxl {

// Tolerances and budgets shared by every quadrature-driven operation.
// max_panels also caps the number of half-period lobes an oscillatory
// transform may consume; tail_cut is the momentum (or radius) beyond which an
// integrand is treated as indistinguishable from its decay-class asymptote.
struct QuadratureSpec {
    double rel_tol = 1e-7;
    double abs_tol = 1e-12;
    int max_panels = 2000;
    int accel_terms = 10;
    double tail_cut = 0.0;  // 0 -> per-operation default (400/r for transforms)
};

// 15-point Gauss-Kronrod rule on [a,b]; the embedded 7-point Gauss value
// drives the error estimate.
double gk15(const std::function<double(double)>& f, double a, double b,
            double* err_estimate = nullptr);

// Globally adaptive bisection of [a,b] driven by the G7/K15 discrepancy.
// Throws NonConvergence if the panel budget is exhausted first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_panels = 2000);

// Fixed 16-point Gauss-Legendre rule on [a,b] (used per-lobe in the
// oscillatory transforms, where panel sizes are chosen analytically).
double gauss_legendre_16(const std::function<double(double)>& f, double a, double b);

// Wynn epsilon extrapolation of a partial-sum sequence.  Returns the last
// even-column entry; with n terms the table reaches column 2*floor((n-1)/2).
double wynn_epsilon(const std::vector<double>& partial_sums);

// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

}  // namespace dxl

#endif
