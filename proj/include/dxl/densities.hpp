#ifndef DXL_DENSITIES_HPP
#define DXL_DENSITIES_HPP

#include "dxl/quadrature.hpp"

namespace dxl {

// Physical inputs shared by the density evaluators.  alpha only enters the
// polarization cloud; p_fermi only the degenerate-gas quantities.
struct Constants {
    double alpha = 0.0072973525693;  // fine-structure constant (CODATA 2018)
    double p_fermi = 1.0;            // Fermi momentum, units of m_e (i.e. p_F * lambda_C / hbar)
};

// Selects one of the closed-form radial densities.
//
// Length conventions: the relativistic kinds (hole, electron, the iterated
// hierarchy, the infinite sums, the polarization cloud) take r in reduced
// Compton wavelengths and return densities in lambda_C^-3.  The degenerate-gas
// kinds (fermi_density_matrix, fermi_hole) take r in the same unit system with
// p_fermi supplying the scale, and return densities proportional to p_F^3.
struct DensityKind {
    enum class Tag {
        hole,                 // -(1/2 pi^2) K_1(r)/r, total charge -1
        electron,             // +(1/4 pi) e^{-r}/r, the hole's self-convolution, total +1
        hole_n,               // n-fold convolution ladder, hole side (order >= 1)
        electron_n,           // ladder, electron side (order >= 1)
        infinite_sum_approx,  // two-point exponential model of the summed ladder
        infinite_sum_numeric, // summed ladder via its momentum profile -1/(1+E)
        fermi_density_matrix, // -(1/6 pi^2) f(z) p_F^3, z = p_F r
        fermi_hole,           // -(1/6 pi^2) f(z)^2 p_F^3
        vacuum_polarization,  // induced cloud around a point charge, O(alpha)
    };

    Tag tag = Tag::hole;
    int order = 1;  // convolution order for hole_n / electron_n

    static DensityKind hole() { return {Tag::hole, 1}; }
    static DensityKind electron() { return {Tag::electron, 1}; }
    static DensityKind hole_order(int n) { return {Tag::hole_n, n}; }
    static DensityKind electron_order(int n) { return {Tag::electron_n, n}; }
    static DensityKind infinite_sum_approx() { return {Tag::infinite_sum_approx, 1}; }
    static DensityKind infinite_sum_numeric() { return {Tag::infinite_sum_numeric, 1}; }
    static DensityKind fermi_density_matrix() { return {Tag::fermi_density_matrix, 1}; }
    static DensityKind fermi_hole() { return {Tag::fermi_hole, 1}; }
    static DensityKind vacuum_polarization() { return {Tag::vacuum_polarization, 1}; }
};

// One evaluated point.  shell = 4 pi r^2 * density always holds exactly; the
// shell is the quantity whose plain line integral counts electrons.
struct RadialSample {
    double r = 0.0;
    double density = 0.0;
    double shell = 0.0;
};

// Truncated ladder sums at one radius.  A term whose shell value underflows
// the double range is skipped and counted instead of being accumulated.
struct PartialSumTerms {
    double hole_part = 0.0;
    double electron_part = 0.0;
    double total_shell = 0.0;
    int dropped_terms = 0;
};

// The electron--hole--electron triangle formed by the mean displacement
// vectors, plus the comparison ratio against the positronium-ion bond.
struct TriangleGeometry {
    double bond_short = 0.0;      // reference-to-hole distance, lambda_C
    double bond_long = 0.0;       // reference-to-electron distance, lambda_C
    double apex_angle_deg = 0.0;  // angle at the hole vertex
    double positronium_ratio = 0.0;
};

// Dimensionless bracket pieces of the three-fermion correlation of a
// degenerate gas: constant term, pairwise exclusion terms, cyclic term.
// Overall density normalization is left to the caller.
struct ThreeBodyCorrelation {
    double a = 0.0;  // +1
    double b = 0.0;  // -[f(z)^2 + f(z')^2 + f(z'')^2]
    double c = 0.0;  // +f(z) f(z') f(z'')
};

// The two radial factors of the single-exchange three-fermion integrand after
// the momentum integrals factorize: minus four times the squared hole profile
// and minus four times its squared radial gradient counterpart.
struct SingleExchangeTerms {
    double hole_square_term = 0.0;      // -4 [ (1/2 pi^2) K_1(r)/r ]^2
    double gradient_square_term = 0.0;  // -4 [ (1/2 pi^2) K_2(r)/r ]^2
};

// f(z) = 3 z^-3 (sin z - z cos z), continued to f(0) = 1.  The universal
// shape of the degenerate-gas density matrix.
double fermi_shape(double z);

// Evaluate the selected density at radius r > 0.  The quadrature spec is only
// consulted by infinite_sum_numeric, which runs a radial inverse transform of
// -1/(1+E) per point.  Throws DomainError for r <= 0 or order < 1.
RadialSample density(const DensityKind& kind, double r, const Constants& c = {},
                     const QuadratureSpec& spec = {});

// Integral of the shell density over all radii -- the net electron count.
//
//   hole -> -1, electron -> +1 (each ladder order reproduces the same pair),
//   fermi_hole -> -1, infinite_sum_approx -> -1/2,
//   infinite_sum_numeric -> its momentum profile at q = 0, exactly -1/2.
//
// The polarization cloud is special: its shell grows like 1/r toward the
// origin, where in the full renormalized picture a compensating point term
// lives, so its "total" is defined as the integral over the standard window
// [1e-3, 40] and is NOT small -- the cloud alone carries net charge.
// fermi_density_matrix has no absolutely convergent integral at all; it
// throws OscillatoryIntegral and callers should use fermi_partial_sum.
double sum_rule(const DensityKind& kind, const Constants& c = {},
                const QuadratureSpec& spec = {});

// Charge-weighted average distance <r> = int r shell dr / int shell dr.
// Defined for the hole (4/pi) and the electron (2); other kinds throw.
double mean_radius(const DensityKind& kind, const QuadratureSpec& spec = {});

// Shell values of the convolution ladder summed through max_order, at one
// radius.  The ladder alternates sign between the hole and electron sides;
// equal truncation keeps the pair-wise charge balance at zero.
PartialSumTerms partial_sum_series(int max_order, double r);

// int_0^R shell(fermi_density_matrix) dr.  Oscillates forever as R grows;
// the closed companion is -(2/pi)[Si(Z) - sin Z] with Z = p_F R.
double fermi_partial_sum(double R, const Constants& c = {},
                         const QuadratureSpec& spec = {});

// Radius (units 1/p_F) where the density has fallen to half its contact
// value, located by bisection on z in (0, pi).  Defined for fermi_hole
// (~1.81) and fermi_density_matrix (~2.50).
double half_height_radius(const DensityKind& kind, const Constants& c = {});

// Three-fermion correlation pieces, relativistic vacuum case.
SingleExchangeTerms three_fermion_single_exchange(double r);

// The positive double-exchange combination: one third of the product of the
// two hole profiles plus one third of the product of the two gradient
// profiles, evaluated at the two radii.
double three_fermion_double_exchange(double r1, double r2);

// Degenerate-gas three-body bracket at the three pairwise separations
// (each scaled by p_F).  Negative arguments throw DomainError.
ThreeBodyCorrelation fermi_three_correlation(double z, double zp, double zpp);

// Bond lengths 4/pi and 2 from the mean radii, the apex angle they imply for
// the isosceles two-hole-bond triangle, and the ratio of the positronium-ion
// bond (5.5 Bohr radii) to the rounded 1.3 lambda_C short bond.
TriangleGeometry exciton_geometry(const Constants& c = {});

}  // namespace dxl

#endif
