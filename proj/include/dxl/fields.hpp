#ifndef DXL_FIELDS_HPP
#define DXL_FIELDS_HPP

#include "dxl/densities.hpp"
#include "dxl/quadrature.hpp"

namespace dxl {

// Which charge distribution sources a potential or field.  `reference` is the
// point charge -e pinned at the origin; the other three are the extended
// clouds of the densities module.
enum class FieldSource { hole, electron, reference, vacuum_polarization };

// Radial electrostatic data at one radius: potential in units e/lambda_C,
// outward field component in e/lambda_C^2.  For a cloud of total charge Q (in
// units of e), field_radial*r^2 -> Q as r grows.
struct FieldSample {
    double r;
    double potential;
    double field_radial;
};

// One point of a force-density profile: value = 4 pi r^2 * rho * E with rho
// the charge density of rho_source and E the field of field_source.  The
// 4 pi r^2 plotting factor is applied exactly once, here.
struct ForceDensitySample {
    double r;
    double value;
    DensityKind::Tag rho_source;
    FieldSource field_source;
};

// Electrostatic potential (units e/lambda_C) of the hole (+e cloud,
// Bessel-Struve closed form, ~1/r far out, -(2/pi) ln r core) or the electron
// (-e cloud, -(1 - e^{-r})/r).  The other sources have no closed-form
// potential here and raise DomainError.
double potential(FieldSource source, double r);

// Outward radial field component.  reference: -1/r^2 (point charge -e).
// electron: -[1 - (1+r)e^{-r}]/r^2.  hole: -d/dr of its potential, which
// collapses to [K0(r)L1(r) + K1(r)L0(r)]/r.  vacuum_polarization: the closed
// Bessel/Bickley form, consistent with its density through Gauss's law (see
// gauss_enclosed_charge); only this source reads c.alpha.
double field(FieldSource source, double r, const Constants& c = {});

// Charge (units e) inside the sphere of radius r, by direct quadrature of the
// density's shell: q(r) = -int_0^r shell dr' (each electron-count density
// carries charge -e, hence the sign).  For the polarization cloud, whose
// shell has a non-integrable 1/r core compensated by a point term sitting at
// the origin, the equivalent outside-in form q(r) = -int_r^inf shell dr' is
// used (cloud and point term are jointly neutral); that is the enclosed
// charge its closed-form field obeys.  Contract, verified by the test suite:
// field(source, r) = q(r)/r^2 to 1e-5 relative for the three extended
// sources.
double gauss_enclosed_charge(const DensityKind& kind, double r, const Constants& c = {},
                             const QuadratureSpec& spec = {});

// Defect of the radial Poisson equation, (1/r)(r Phi)'' + 4 pi rho_charge,
// with the second derivative taken by a 5-point centered stencil (h = 1e-3 r)
// and rho_charge = -density.  Supported for the hole and electron on
// r in [0.05, 20]; |residual| stays below 1e-4 * max(|4 pi rho|, 1e-12)
// across that window.  DomainError outside it.
double poisson_residual(FieldSource source, double r);

// Force-density profile point 4 pi r^2 rho(r) E(r); rho_source must be one of
// hole, electron, vacuum_polarization.  Units e^2/lambda_C^4 with e^2 = 1.
ForceDensitySample force_density(const DensityKind& rho_source, FieldSource field_source,
                                 double r, const Constants& c = {});

// Interaction integral of the hole cloud with a unit test charge at radius r,
// by the shell theorem: I(r) = (1/r) int_0^r shell dr' + int_r^inf shell/r'
// dr'.  Equals minus the hole potential; diverges only logarithmically as
// r -> 0 and tends to -1/r far out.
double exchange_energy_density_integral(double r, const QuadratureSpec& spec = {});

}  // namespace dxl

#endif
