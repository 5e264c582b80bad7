#include "dxl/fields.hpp"

#include <algorithm>
#include <cmath>

#include "dxl/errors.hpp"
#include "dxl/specfun.hpp"

namespace dxl {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radius must be positive and finite");
}

DensityKind density_kind_of(FieldSource source) {
    switch (source) {
        case FieldSource::hole:
            return DensityKind::hole();
        case FieldSource::electron:
            return DensityKind::electron();
        case FieldSource::vacuum_polarization:
            return DensityKind::vacuum_polarization();
        default:
            throw DomainError("the reference point charge has no extended density");
    }
}

// int_x^inf K_0, as a ladder of GK15 panels that ride along with x.  Keeps
// RELATIVE accuracy (~1e-14) down to values around e^{-56}, where the
// subtractive closed form has long drowned in absolute rounding noise.
double bickley_tail_quadrature(double x) {
    auto k0 = [](double t) { return bessel_k(0, t).value; };
    double sum = 0.0;
    for (int j = 0; j < 18; ++j) {
        sum += gk15(k0, x + 2.0 * j, x + 2.0 * (j + 1));
    }
    return sum;
}

// r*Phi(r) minus its long-range constant.  The Poisson stencil annihilates
// constants, so the shifted forms are interchangeable with r*Phi there -- but
// unlike the bare product (which saturates at -+1) they keep full relative
// precision in the far tail, where 4 pi rho itself is ~e^{-r}.
double shifted_r_phi(FieldSource source, double x) {
    if (source == FieldSource::electron) return std::exp(-x);  // r Phi + 1
    // hole: r Phi - 1 = -(2/pi) int_x^inf K_0
    if (x <= 8.0) return -(2.0 / kPi) * ki1(x).value;
    return -(2.0 / kPi) * bickley_tail_quadrature(x);
}

// -int_0^r shell dr' with the usual midpoint patch over the innermost sliver
// (every shell here is bounded at the origin).
double inward_enclosed(const std::function<double(double)>& shell, double r,
                       const QuadratureSpec& spec) {
    const double eps = std::min(1e-6, 0.5 * r);
    double inner = shell(0.5 * eps) * eps;
    if (r > eps)
        inner += integrate_adaptive(shell, eps, r, spec.rel_tol, spec.abs_tol, spec.max_panels);
    return -inner;
}

}  // namespace

double potential(FieldSource source, double r) {
    require_radius(r);
    switch (source) {
        case FieldSource::hole:
            return bessel_struve_phi(r);
        case FieldSource::electron:
            return std::expm1(-r) / r;  // -(1 - e^{-r})/r, cancellation-free
        default:
            throw DomainError("potential: closed forms exist for the hole and electron only");
    }
}

double field(FieldSource source, double r, const Constants& c) {
    require_radius(r);
    switch (source) {
        case FieldSource::reference:
            return -1.0 / (r * r);
        case FieldSource::electron:
            // -[1 - (1+r)e^{-r}]/r^2
            return (std::expm1(-r) + r * std::exp(-r)) / (r * r);
        case FieldSource::hole:
            return bessel_struve_e(r) / r;
        case FieldSource::vacuum_polarization: {
            const double z = 2.0 * r;
            const double k0 = bessel_k(0, z).value;
            const double k1 = bessel_k(2, z).value;
            const double brace =
                -z * ki1(z).value - k0 + 6.0 * k0 / (z * z) + z * k1 + k1 / z;
            return (4.0 * c.alpha / (9.0 * kPi)) * brace;
        }
    }
    throw DomainError("field: unknown source");
}

double gauss_enclosed_charge(const DensityKind& kind, double r, const Constants& c,
                             const QuadratureSpec& spec) {
    require_radius(r);
    auto shell = [&](double x) { return density(kind, x, c).shell; };
    if (kind.tag == DensityKind::Tag::vacuum_polarization) {
        // The cloud alone is not integrable from the origin (1/r core); cloud
        // plus origin point term are jointly neutral, so the charge inside r
        // is minus the cloud charge outside r.
        const double cut = std::max(40.0, r + 12.0);
        return -integrate_adaptive(shell, r, cut, spec.rel_tol, spec.abs_tol, spec.max_panels);
    }
    return inward_enclosed(shell, r, spec);
}

double poisson_residual(FieldSource source, double r) {
    if (source != FieldSource::hole && source != FieldSource::electron)
        throw DomainError("poisson_residual: defined for the hole and electron potentials");
    if (!(r >= 0.05 && r <= 20.0))
        throw DomainError("poisson_residual: stenciled range is [0.05, 20]");
    const double h = 1e-3 * r;
    auto f = [source](double x) { return shifted_r_phi(source, x); };
    const double second =
        (-f(r - 2.0 * h) + 16.0 * f(r - h) - 30.0 * f(r) + 16.0 * f(r + h) - f(r + 2.0 * h)) /
        (12.0 * h * h);
    const double rho_charge = -density(density_kind_of(source), r).density;
    return second / r + 4.0 * kPi * rho_charge;
}

ForceDensitySample force_density(const DensityKind& rho_source, FieldSource field_source,
                                 double r, const Constants& c) {
    require_radius(r);
    if (rho_source.tag != DensityKind::Tag::hole &&
        rho_source.tag != DensityKind::Tag::electron &&
        rho_source.tag != DensityKind::Tag::vacuum_polarization)
        throw DomainError(
            "force_density: rho_source must be hole, electron, or vacuum_polarization");
    // 4 pi r^2 * rho_charge * E = -shell * E
    const double value = -density(rho_source, r, c).shell * field(field_source, r, c);
    return {r, value, rho_source.tag, field_source};
}

double exchange_energy_density_integral(double r, const QuadratureSpec& spec) {
    require_radius(r);
    auto shell = [](double x) { return density(DensityKind::hole(), x).shell; };
    const double interior = inward_enclosed(shell, r, spec);  // = -int_0^r shell
    const double cut = std::max(60.0, r + 20.0);
    const double outer = integrate_adaptive([&](double x) { return shell(x) / x; }, r, cut,
                                            spec.rel_tol, spec.abs_tol, spec.max_panels);
    return -interior / r + outer;
}

}  // namespace dxl
