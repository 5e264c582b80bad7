#include "dxl/radialft.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dxl/errors.hpp"

namespace dxl {

namespace {

// Floor for the sub-panel width inside a lobe.  A lobe spans exactly half an
// oscillation period, so 16-point Gauss-Legendre needs no sub-panels for the
// sine factor itself; sub-panels only track the momentum profile, whose
// structure scale grows like 1 + q.  Letting the width grow with q keeps the
// panel count per lobe bounded even when the lobes are thousands of q-units
// wide (small r), where a fixed fine width would drain the whole budget.
constexpr double kMinPanelWidth = 1.5;

double integrate_lobe(const std::function<double(double)>& g, double a, double b,
                      int* panel_budget) {
    double total = 0.0;
    double x = a;
    while (x < b) {
        if (*panel_budget <= 0) {
            *panel_budget = -1;  // budget exhausted
            return 0.0;
        }
        --*panel_budget;
        const double width = std::min(b - x, std::max(kMinPanelWidth, 0.3 * (1.0 + x)));
        total += gauss_legendre_16(g, x, x + width);
        x += width;
    }
    return total;
}

void validate_profile(const MomentumProfile& f) {
    for (double q : {1e2, 1e3}) {
        const double v = f.evaluator(q);
        if (!std::isfinite(v)) throw DomainError("momentum profile not finite at large q");
    }
    if (f.decay.kind == DecayClass::Kind::algebraic) {
        const double v1 = std::abs(f.evaluator(1e2)) * std::pow(1e2, f.decay.order);
        const double v2 = std::abs(f.evaluator(1e3)) * std::pow(1e3, f.decay.order);
        // |f| q^k should stay bounded; a strong growth over one decade means
        // the declared order overstates the actual decay.
        if (v2 > 5.0 * (v1 + 1e-300)) {
            throw DomainError("declared algebraic decay order inconsistent with profile");
        }
    }
}

// Oscillatory half-line integral of g with sign-alternating lobes whose
// boundaries are (k + offset) pi / r.  Strategy by decay class:
//   - algebraic: epsilon-accelerate the partial lobe sums (Abel limit)
//   - exponential: plain summation until lobes are negligible
// Compact support is handled by the callers with plain adaptive quadrature.
double lobe_series(const std::function<double(double)>& g, double r, double offset,
                   const DecayClass& decay, const QuadratureSpec& spec) {
    const double lobe = M_PI / r;
    const double tail_q = spec.tail_cut > 0.0 ? spec.tail_cut : 400.0 / r;
    const int max_lobes = std::max(8, static_cast<int>(tail_q / lobe));
    int panel_budget = spec.max_panels;
    const bool accelerate = decay.kind == DecayClass::Kind::algebraic;

    std::vector<double> partials;
    partials.reserve(64);
    double sum = 0.0;
    double prev_estimate = 0.0;
    int stable = 0;
    int small_lobes = 0;
    double a = 0.0;
    for (int k = 0; k < max_lobes; ++k) {
        const double b = (k + 1.0 + offset) * lobe;
        const double piece = integrate_lobe(g, a, b, &panel_budget);
        if (panel_budget < 0) break;
        a = b;
        sum += piece;
        const double scale = std::max(spec.abs_tol, spec.rel_tol * std::abs(sum));
        if (accelerate) {
            partials.push_back(sum);
            const int window = std::min<int>(partials.size(), 2 * spec.accel_terms + 1);
            if (window >= 4) {
                std::vector<double> tail(partials.end() - window, partials.end());
                const double estimate = wynn_epsilon(tail);
                const double tol =
                    0.5 * std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate));
                if (k >= 5 && std::abs(estimate - prev_estimate) <= tol) {
                    if (++stable >= 2) return estimate;
                } else {
                    stable = 0;
                }
                prev_estimate = estimate;
            }
        } else {
            if (std::abs(piece) <= 0.25 * scale) {
                if (++small_lobes >= 2) return sum;
            } else {
                small_lobes = 0;
            }
        }
    }
    throw NonConvergence("oscillatory lobe sums did not settle within the budget");
}

double transform_impl(const MomentumProfile& f, double r, const QuadratureSpec& spec,
                      bool gradient) {
    if (r <= 0.0) throw DomainError("transform radius must be positive");
    validate_profile(f);
    const double norm = 1.0 / (2.0 * M_PI * M_PI * r);
    auto integrand = [&](double q) {
        if (q == 0.0) return 0.0;
        const double fq = f.evaluator(q);
        if (!gradient) return norm * q * fq * std::sin(q * r);
        return norm * q * q * fq * (std::sin(q * r) / (q * r) - std::cos(q * r));
    };
    if (f.decay.kind == DecayClass::Kind::compact) {
        if (f.decay.q_max <= 0.0) throw DomainError("compact profile needs q_max > 0");
        return integrate_adaptive(integrand, 0.0, f.decay.q_max, spec.rel_tol,
                                  spec.abs_tol, spec.max_panels);
    }
    if (f.decay.kind == DecayClass::Kind::algebraic && f.decay.order <= 0.0) {
        // q f(q) does not decay at all: the transform exists only as a
        // distribution (the delta-function limit), not as a value.
        throw NonConvergence("profile without decay transforms to a distribution");
    }
    // sine lobes start at the zeros k pi / r; the gradient bracket alternates
    // on the cosine zeros (k + 1/2) pi / r instead
    return lobe_series(integrand, r, gradient ? 0.5 : 0.0, f.decay, spec);
}

}  // namespace

double inverse_ft_radial(const MomentumProfile& f, double r, const QuadratureSpec& spec) {
    return transform_impl(f, r, spec, false);
}

double inverse_ft_gradient_radial(const MomentumProfile& f, double r,
                                  const QuadratureSpec& spec) {
    return transform_impl(f, r, spec, true);
}

}  // namespace dxl
