#ifndef DXL_RADIALFT_HPP
#define DXL_RADIALFT_HPP

#include <functional>

#include "dxl/quadrature.hpp"

namespace dxl {

// How a momentum profile falls off at large q.  The transform engine uses
// this to pick the summation strategy for the oscillatory half-line integral.
struct DecayClass {
    enum class Kind { algebraic, exponential, compact } kind = Kind::exponential;
    double order = 0.0;  // algebraic: |f(q)| ~ q^-order
    double q_max = 0.0;  // compact: f vanishes beyond q_max
    static DecayClass algebraic(double k) { return {Kind::algebraic, k, 0.0}; }
    static DecayClass exponential() { return {Kind::exponential, 0.0, 0.0}; }
    static DecayClass compact(double q_max) { return {Kind::compact, 0.0, q_max}; }
};

// Radially symmetric momentum-space profile f(q), q in electron-mass units.
struct MomentumProfile {
    std::function<double(double)> evaluator;
    DecayClass decay;
};

// (2pi)^-3 int f(|p|) e^{ip.r} d^3p  =  (2 pi^2 r)^-1 int_0^inf q f(q) sin(qr) dq.
// Conditionally convergent profiles (algebraic order in (0,2]) are Abel-summed
// by zero-splitting at q_k = k pi / r plus epsilon acceleration of the
// alternating lobe sums.  Throws DomainError for r <= 0 or an inconsistent
// decay declaration, NonConvergence when the lobe budget runs out (including
// the pure-distribution case algebraic order <= 0).
double inverse_ft_radial(const MomentumProfile& f, double r,
                         const QuadratureSpec& spec = {});

// Radial component of the transform of p f(|p|); equals -d/dr of
// inverse_ft_radial(f, r).  Reduction:
//   (2 pi^2 r)^-1 int_0^inf q^2 f(q) [sin(qr)/(qr) - cos(qr)] dq,
// split at the cosine zeros (k + 1/2) pi / r.
double inverse_ft_gradient_radial(const MomentumProfile& f, double r,
                                  const QuadratureSpec& spec = {});

}  // namespace dxl

#endif
