#include "dxl/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>

#include "json.hpp"

#include "dxl/errors.hpp"
#include "dxl/fields.hpp"
#include "dxl/radialft.hpp"
#include "dxl/specfun.hpp"
#include "dxl/spinor.hpp"

namespace dxl {
namespace {

constexpr double kPi = 3.14159265358979323846;

Check make_check(std::string name, double computed, double expected, double tol) {
    Check c;
    c.name = std::move(name);
    c.computed = computed;
    c.expected = expected;
    c.tolerance = tol;
    c.pass = std::isfinite(computed) && std::abs(computed - expected) <= tol;
    return c;
}

// tol = rel * |expected|, for checks quoted as relative bounds.
Check make_rel_check(std::string name, double computed, double expected, double rel) {
    return make_check(std::move(name), computed, expected, rel * std::abs(expected));
}

QuadratureSpec tight() {
    QuadratureSpec s;
    s.rel_tol = 1e-11;
    s.abs_tol = 1e-15;
    s.max_panels = 4000;
    return s;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double fit_slope_vs_log_r(const std::function<double(double)>& f, double a, double b, int n) {
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        const double r = a * std::pow(b / a, i / (n - 1.0));
        xs[i] = std::log(r);
        ys[i] = f(r);
    }
    return least_squares_slope(xs, ys);
}

// ---------------------------------------------------------------- specfun --

std::vector<Check> suite_specfun() {
    std::vector<Check> out;
    out.push_back(make_check("k0_anchor", bessel_k(0, 1.0).value, 0.4210244382, 1e-9));
    out.push_back(
        make_check("struve_l0_anchor", struve_l(0, 1.0).value, 0.7102431859378907, 1e-11));
    // half-integer orders collapse to elementary closed forms
    out.push_back(make_check("half_order_closed_form", bessel_k(1, 2.0).value,
                             std::sqrt(kPi / 4.0) * std::exp(-2.0), 1e-13));
    out.push_back(make_check(
        "recurrence_residual",
        bessel_k(4, 2.0).value - bessel_k(0, 2.0).value - bessel_k(2, 2.0).value, 0.0, 1e-13));
    out.push_back(make_check("bickley_origin", ki1(0.0).value, 0.5 * kPi, 1e-14));
    // independent oracle: the defining half-line integral, truncated where the
    // integrand is < 1e-19
    const double quad = integrate_adaptive([](double t) { return bessel_k(0, t).value; }, 2.0,
                                           44.0, 1e-12, 1e-16, 2000);
    out.push_back(make_check("bickley_vs_quadrature", ki1(2.0).value, quad, 1e-12));
    // both bilinear combinations approach 1/z with exponentially small
    // corrections; at z = 60 any cancellation residue would be visible
    out.push_back(make_check("potential_combo_tail", 60.0 * bessel_struve_phi(60.0), 1.0, 1e-12));
    out.push_back(make_check("field_combo_tail", 60.0 * bessel_struve_e(60.0), 1.0, 1e-12));
    out.push_back(make_rel_check("scaled_kernel_consistency",
                                 bessel_k_scaled(0, 5.0) * std::exp(-5.0) / bessel_k(0, 5.0).value,
                                 1.0, 1e-13));
    out.push_back(make_rel_check("log_kernel_consistency",
                                 std::exp(log_bessel_k(2, 3.0)) / bessel_k(2, 3.0).value, 1.0,
                                 1e-12));
    out.push_back(make_check("gamma_half_integer", gamma_fn(2.5).value,
                             0.75 * std::sqrt(kPi), 1e-14));
    out.push_back(make_check("sine_integral_anchor", sine_integral(kPi), 1.851937051982466,
                             1e-12));
    return out;
}

// ----------------------------------------------------------------- spinor --

std::vector<Check> suite_spinor() {
    constexpr std::uint64_t kSeed = 0xD1AC5EA0ull;
    std::mt19937_64 gen(kSeed);
    std::uniform_real_distribution<double> comp(-3.0, 3.0);
    std::vector<ThreeVector> momenta;
    momenta.reserve(100);
    for (int i = 0; i < 100; ++i) {
        const double x = comp(gen), y = comp(gen), z = comp(gen);
        momenta.push_back({x, y, z});
    }

    const Family fams[] = {Family::u, Family::u_hat, Family::v, Family::v_hat};
    const Spin spins[] = {Spin::up, Spin::down};

    double eq = 0, conj = 0, compl_ = 0, vec = 0, sc = 0, ten = 0;
    for (const auto& p : momenta) {
        const double e = p.energy();
        for (Family f : fams) {
            compl_ = std::max(compl_, completeness_residual(f, p));
            for (Spin s : spins) {
                eq = std::max(eq, dirac_residual(f, s, p));
                conj = std::max(conj, charge_conjugation_residual(f, s, p));
            }
        }
        sc = std::max(sc, std::abs(exchange_integrand_one_momentum(ExchangeChannel::scalar(), p) -
                                   std::complex<double>(-1.0 / e)));
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                const auto v =
                    exchange_integrand_one_momentum(ExchangeChannel::vector(mu, nu), p);
                vec = std::max(vec, std::abs(v - std::complex<double>(-metric(mu, nu) / e)));
                for (int rho = 0; rho < 4; ++rho) {
                    for (int sg = 0; sg < 4; ++sg) {
                        const auto t = exchange_integrand_one_momentum(
                            ExchangeChannel::tensor(mu, nu, rho, sg), p);
                        const double want = -(metric(mu, rho) * metric(nu, sg) -
                                              metric(mu, sg) * metric(nu, rho)) /
                                            e;
                        ten = std::max(ten, std::abs(t - std::complex<double>(want)));
                    }
                }
            }
        }
    }
    std::vector<Check> out;
    out.push_back(make_check("momentum_space_equation_max_residual", eq, 0.0, 1e-12));
    out.push_back(make_check("charge_conjugation_max_residual", conj, 0.0, 1e-12));
    out.push_back(make_check("completeness_max_residual", compl_, 0.0, 1e-12));
    out.push_back(make_check("one_momentum_vector_kernel_max_dev", vec, 0.0, 1e-12));
    out.push_back(make_check("one_momentum_scalar_kernel_max_dev", sc, 0.0, 1e-12));
    out.push_back(make_check("one_momentum_tensor_kernel_max_dev", ten, 0.0, 1e-12));
    return out;
}

// ---------------------------------------------------------------- fourier --

MomentumProfile inverse_energy() {
    return {[](double q) { return 1.0 / std::sqrt(1.0 + q * q); }, DecayClass::algebraic(1.0)};
}

MomentumProfile inverse_energy_squared() {
    return {[](double q) { return 1.0 / (1.0 + q * q); }, DecayClass::algebraic(2.0)};
}

std::vector<Check> suite_fourier() {
    std::vector<Check> out;
    const auto spec = tight();
    for (double r : {0.2, 1.0, 5.0}) {
        const double want = bessel_k(2, r).value / (2.0 * kPi * kPi * r);
        out.push_back(make_rel_check("inverse_energy_r" + std::to_string(r).substr(0, 3),
                                     inverse_ft_radial(inverse_energy(), r, spec), want, 1e-5));
    }
    for (double r : {0.2, 1.0, 5.0}) {
        const double want = std::exp(-r) / (4.0 * kPi * r);
        out.push_back(
            make_rel_check("inverse_energy_squared_r" + std::to_string(r).substr(0, 3),
                           inverse_ft_radial(inverse_energy_squared(), r, spec), want, 1e-5));
    }
    const double grad_want = bessel_k(4, 1.0).value / (2.0 * kPi * kPi);
    out.push_back(make_rel_check("gradient_transform_r1",
                                 inverse_ft_gradient_radial(inverse_energy(), 1.0, spec),
                                 grad_want, 1e-5));
    return out;
}

// --------------------------------------------------------------- sumrules --

std::vector<Check> suite_sumrules(const Constants& c) {
    std::vector<Check> out;
    const auto spec = tight();
    out.push_back(make_check("hole_total_charge", sum_rule(DensityKind::hole(), c, spec), -1.0,
                             1e-6));
    out.push_back(make_check("electron_total_charge", sum_rule(DensityKind::electron(), c, spec),
                             1.0, 1e-10));
    out.push_back(make_check("fermi_hole_total_charge",
                             sum_rule(DensityKind::fermi_hole(), c, spec), -1.0, 1e-3));
    // the summed ladder's charge is its momentum profile at the origin
    out.push_back(make_check("summed_ladder_zero_momentum_charge",
                             sum_rule(DensityKind::infinite_sum_numeric(), c, spec), -0.5, 0.0));
    out.push_back(make_check("summed_ladder_model_charge",
                             sum_rule(DensityKind::infinite_sum_approx(), c, spec), -0.5, 1e-3));
    out.push_back(make_check("hole_mean_radius", mean_radius(DensityKind::hole(), spec),
                             4.0 / kPi, 1e-6));
    out.push_back(make_check("electron_mean_radius", mean_radius(DensityKind::electron(), spec),
                             2.0, 1e-8));
    // running charge of the oscillatory gas integrand against its closed
    // companion -(2/pi)[Si(Z) - sin Z]
    for (double bigz : {10.0, 20.5}) {
        const double want = -(2.0 / kPi) * (sine_integral(bigz) - std::sin(bigz));
        char name[48];
        std::snprintf(name, sizeof name, "fermi_running_charge_Z%.1f", bigz);
        out.push_back(make_check(name, fermi_partial_sum(bigz / c.p_fermi, c, spec), want, 1e-4));
    }
    out.push_back(make_check("pair_half_height",
                             half_height_radius(DensityKind::fermi_hole(), c) * c.p_fermi, 1.81,
                             0.01));
    out.push_back(make_check("matrix_half_height",
                             half_height_radius(DensityKind::fermi_density_matrix(), c) *
                                 c.p_fermi,
                             2.50, 0.01));
    return out;
}

// ----------------------------------------------------------------- fields --

std::vector<Check> suite_fields(const Constants& c) {
    std::vector<Check> out;
    const auto spec = tight();
    const FieldSource both[] = {FieldSource::hole, FieldSource::electron};

    // Gauss: enclosed charge over r^2 reproduces the closed-form field
    double gauss_dev = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double r = 0.1 * std::pow(20.0 / 0.1, i / 19.0);
        for (FieldSource s : both) {
            const auto kind = s == FieldSource::hole ? DensityKind::hole()
                                                     : DensityKind::electron();
            const double f = field(s, r, c);
            const double g = gauss_enclosed_charge(kind, r, c, spec) / (r * r);
            gauss_dev = std::max(gauss_dev, std::abs(g - f) / std::max(std::abs(f), 1e-10));
        }
    }
    out.push_back(make_check("gauss_vs_closed_field_max_dev", gauss_dev, 0.0, 1e-5));

    // the fields are minus the potential slopes (five-point stencil)
    double fd_dev = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
        for (FieldSource s : both) {
            const double h = 1e-3 * r;
            const auto phi = [s](double x) { return potential(s, x); };
            const double d = (-phi(r + 2 * h) + 8 * phi(r + h) - 8 * phi(r - h) + phi(r - 2 * h)) /
                             (12 * h);
            fd_dev = std::max(fd_dev, std::abs(-d - field(s, r, c)) / std::abs(field(s, r, c)));
        }
    }
    out.push_back(make_check("field_vs_potential_slope_max_dev", fd_dev, 0.0, 1e-5));

    double poisson_max = 0.0;
    for (int i = 0; i < 15; ++i) {
        const double r = 0.05 * std::pow(20.0 / 0.05, i / 14.0);
        for (FieldSource s : both) {
            const auto kind = s == FieldSource::hole ? DensityKind::hole()
                                                     : DensityKind::electron();
            const double scale = 4.0 * kPi * std::abs(density(kind, r, c).density);
            poisson_max = std::max(poisson_max, std::abs(poisson_residual(s, r)) / scale);
        }
    }
    out.push_back(make_check("poisson_residual_max", poisson_max, 0.0, 1e-4));

    out.push_back(make_check("hole_potential_limit_r50",
                             potential(FieldSource::hole, 50.0) * 50.0, 1.0, 1e-6));
    out.push_back(make_check("hole_field_limit_r50", field(FieldSource::hole, 50.0, c) * 2500.0,
                             1.0, 1e-6));
    const double slope = fit_slope_vs_log_r(
        [](double r) { return potential(FieldSource::hole, r); }, 1e-4, 1e-3, 10);
    out.push_back(make_rel_check("hole_potential_log_coefficient", -slope, 2.0 / kPi, 0.01));
    out.push_back(make_check("pair_charge_neutrality_r50",
                             gauss_enclosed_charge(DensityKind::hole(), 50.0, c, spec) +
                                 gauss_enclosed_charge(DensityKind::electron(), 50.0, c, spec),
                             0.0, 1e-6));

    // polarization cloud: closed-form field against the Gauss oracle
    double vp_dev = 0.0;
    for (double r : {0.5, 1.0, 2.0, 5.0}) {
        const double f = field(FieldSource::vacuum_polarization, r, c);
        const double g =
            gauss_enclosed_charge(DensityKind::vacuum_polarization(), r, c, spec) / (r * r);
        vp_dev = std::max(vp_dev, std::abs(g - f) / std::abs(f));
    }
    out.push_back(make_check("vp_field_vs_gauss_max_dev", vp_dev, 0.0, 1e-3));
    // window integral of the cloud's shell over [1e-3, 40]: the cloud alone is
    // not neutral (its point counterterm lives at the origin), so the pinned
    // value is a regression anchor, not a neutrality statement
    out.push_back(make_check("vp_window_charge",
                             sum_rule(DensityKind::vacuum_polarization(), c, spec), -1.006123e-2,
                             2e-6));
    // decay: ln|density| on [3, 6] follows -2r - 2.5 ln r; compare fitted
    // slopes of data and model on the same grid
    std::vector<double> xs, yd, ym;
    for (int i = 0; i <= 30; ++i) {
        const double r = 3.0 + 3.0 * i / 30.0;
        xs.push_back(r);
        yd.push_back(
            std::log(std::abs(density(DensityKind::vacuum_polarization(), r, c).density)));
        ym.push_back(-2.0 * r - 2.5 * std::log(r));
    }
    out.push_back(make_check("vp_decay_slope_vs_model",
                             least_squares_slope(xs, yd) - least_squares_slope(xs, ym), 0.0,
                             0.01));

    // guard against regrouping the electron field as -(1 - e^{-r})(1 + r)/r^2:
    // that superficially similar assembly differs from the Gauss-confirmed
    // form by exactly -1/r
    const double variant = -(1.0 - std::exp(-1.0)) * 2.0;
    out.push_back(make_check("electron_field_regrouping_gap_r1",
                             variant - field(FieldSource::electron, 1.0, c), -1.0, 1e-12));

    out.push_back(make_check("interaction_integral_matches_potential_r1",
                             -exchange_energy_density_integral(1.0, spec),
                             potential(FieldSource::hole, 1.0), 1e-5));
    return out;
}

// --------------------------------------------------------------- threebody --

std::vector<Check> suite_threebody(const Constants& c) {
    std::vector<Check> out;
    const auto hole_term = [](double r) {
        return std::log(std::abs(three_fermion_single_exchange(r).hole_square_term));
    };
    const auto grad_term = [](double r) {
        return std::log(std::abs(three_fermion_single_exchange(r).gradient_square_term));
    };
    out.push_back(make_check("pair_term_divergence_exponent",
                             fit_slope_vs_log_r(hole_term, 1e-3, 1e-2, 25), -4.0, 0.05));
    out.push_back(make_check("gradient_term_divergence_exponent",
                             fit_slope_vs_log_r(grad_term, 1e-3, 1e-2, 25), -6.0, 0.05));
    const auto terms = three_fermion_single_exchange(1.0);
    out.push_back(make_rel_check(
        "equal_radius_double_exchange", three_fermion_double_exchange(1.0, 1.0),
        -(terms.hole_square_term + terms.gradient_square_term) / 12.0, 1e-12));
    const double k1 = bessel_k(2, 1.0).value;
    out.push_back(make_rel_check("pair_term_closed_form_r1", terms.hole_square_term,
                                 -4.0 * std::pow(k1 / (2.0 * kPi * kPi), 2), 1e-12));
    const auto g = exciton_geometry(c);
    out.push_back(make_check("triangle_apex_angle_deg", g.apex_angle_deg, 103.49, 0.05));
    out.push_back(make_rel_check("positronium_bond_ratio", g.positronium_ratio, 580.0, 0.03));
    // complete triple overlap is fully excluded: 1 - 3 + 2 = 0
    const auto origin = fermi_three_correlation(0.0, 0.0, 0.0);
    out.push_back(make_check("triple_contact_exclusion",
                             origin.a + origin.b + 2.0 * origin.c, 0.0, 0.0));
    const double f13 = fermi_shape(1.3);
    out.push_back(make_check("distant_third_fermion_reduction",
                             fermi_three_correlation(1.3, 50.0, 47.0).b, -f13 * f13, 1e-5));
    return out;
}

using SuiteFn = std::vector<Check> (*)(const Constants&);

std::vector<Check> specfun_wrap(const Constants&) { return suite_specfun(); }
std::vector<Check> spinor_wrap(const Constants&) { return suite_spinor(); }
std::vector<Check> fourier_wrap(const Constants&) { return suite_fourier(); }

const std::pair<const char*, SuiteFn> kSuites[] = {
    {"specfun", specfun_wrap},   {"spinor", spinor_wrap}, {"fourier", fourier_wrap},
    {"sumrules", suite_sumrules}, {"fields", suite_fields}, {"threebody", suite_threebody},
};

}  // namespace

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names = {
        "specfun", "spinor", "fourier", "sumrules", "fields", "threebody", "all"};
    return names;
}

CheckReport run_suite(const std::string& suite, const Constants& c) {
    CheckReport report;
    report.suite = suite;
    if (suite == "all") {
        for (const auto& [name, fn] : kSuites) {
            for (Check& chk : fn(c)) {
                chk.name = std::string(name) + "/" + chk.name;
                report.checks.push_back(std::move(chk));
            }
        }
    } else {
        const auto* it =
            std::find_if(std::begin(kSuites), std::end(kSuites),
                         [&](const auto& entry) { return suite == entry.first; });
        if (it == std::end(kSuites)) throw DomainError("unknown check suite: " + suite);
        report.checks = it->second(c);
    }
    report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const Check& chk) { return chk.pass; });
    return report;
}

std::string to_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : report.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"computed", c.computed},
                               {"expected", c.expected},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    }
    j["all_pass"] = report.all_pass;
    return j.dump(2);
}

}  // namespace dxl
