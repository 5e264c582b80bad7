#ifndef DXL_SPECFUN_HPP
#define DXL_SPECFUN_HPP

namespace dxl {

// Value plus a (conservative) absolute error bound.  `underflowed` marks
// results whose true magnitude lies below the smallest representable double;
// the value is then 0 and the bound is the underflow threshold.
struct SpecialValue {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    bool underflowed = false;
};

// Modified Bessel function of the second kind, K_{nu}(z), nu = twice_order/2.
// Supported orders: integers and half-integers >= -1 (twice_order >= -2);
// negative orders fold onto positive ones (K_{-nu} = K_{nu}).  z > 0,
// accurate to ~1e-13 relative for z in [1e-6, 700]; far beyond that the value
// underflows to 0 with the flag set.
SpecialValue bessel_k(int twice_order, double z);

// exp(z) * K_{nu}(z): immune to exponential underflow, same order rules.
double bessel_k_scaled(int twice_order, double z);

// ln K_{nu}(z) for twice_order >= 0, stable for large orders where K itself
// overflows the double range (small z, high nu).
double log_bessel_k(int twice_order, double z);

// Modified Struve function L_{order}(z) for order in {-3,...,1}, z >= 0
// (z > 0 when order <= -2: those orders diverge at the origin).  Accurate to
// ~1e-11 relative on [0, 60]; usable up to z ~ 700 where exp(z) overflows.
SpecialValue struve_l(int order, double z);

// Integral of K_0 from z to infinity (the first Bickley function), z >= 0.
SpecialValue ki1(double z);

// Gamma function restricted to positive integer and half-integer arguments.
SpecialValue gamma_fn(double x);

// Bessel-Struve bilinears with the severe large-z cancellation removed:
//   bessel_struve_phi(z) = K0(z) L_{-1}(z) + K1(z) L_0(z)   ( ~ 1/z )
//   bessel_struve_e(z)   = K0(z) L_1(z)   + K1(z) L_0(z)   ( ~ 1/z )
// Both require z > 0.
double bessel_struve_phi(double z);
double bessel_struve_e(double z);

}  // namespace dxl

#endif
