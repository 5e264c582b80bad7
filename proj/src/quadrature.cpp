#include "dxl/quadrature.hpp"
#include "dxl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace dxl {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 abscissae).
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

const double kXgl16[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
const double kWgl16[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

double gk15(const std::function<double(double)>& f, double a, double b,
            double* err_estimate) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    const double fc = f(c);
    resk += kWgk[7] * fc;
    resg += kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    if (err_estimate) {
        double e = std::abs(resk - resg) * std::abs(h);
        *err_estimate = std::pow(200.0 * e, 1.5) < e ? std::pow(200.0 * e, 1.5) : e;
    }
    return resk * h;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol, int max_panels) {
    if (!(a < b)) {
        if (a == b) return 0.0;
        return -integrate_adaptive(f, b, a, rel_tol, abs_tol, max_panels);
    }
    std::priority_queue<Panel> heap;
    double err0;
    double total = gk15(f, a, b, &err0);
    double total_err = err0;
    heap.push({a, b, total, err0});
    int panels = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (panels >= max_panels || heap.empty()) {
            throw NonConvergence("adaptive quadrature: panel budget exhausted");
        }
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at floating-point resolution; keep its estimate as-is
            continue;
        }
        double el, er;
        const double vl = gk15(f, worst.a, mid, &el);
        const double vr = gk15(f, mid, worst.b, &er);
        total += (vl + vr) - worst.value;
        total_err += (el + er) - worst.err;
        heap.push({worst.a, mid, vl, el});
        heap.push({mid, worst.b, vr, er});
        ++panels;
    }
    return total;
}

double gauss_legendre_16(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kXgl16[i];
        s += kWgl16[i] * (f(c - dx) + f(c + dx));
    }
    return s * h;
}

double wynn_epsilon(const std::vector<double>& partial_sums) {
    const int n = static_cast<int>(partial_sums.size());
    if (n == 0) throw DomainError("wynn_epsilon: empty sequence");
    if (n == 1) return partial_sums[0];
    // column sweep: cur = e_{k-1}, prev = e_{k-2}; estimates live in even columns
    std::vector<double> prev(n, 0.0);        // e_{-1} is identically 0
    std::vector<double> cur = partial_sums;  // e_0
    double best = cur.back();
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(n - k);
        for (int i = 0; i < n - k; ++i) {
            const double denom = cur[i + 1] - cur[i];
            if (denom == 0.0) {
                if (k % 2 == 1) return cur[i + 1];  // two even estimates agree exactly
                next[i] = prev[i + 1];
                continue;
            }
            next[i] = prev[i + 1] + 1.0 / denom;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (k % 2 == 0) best = cur.back();
    }
    return best;
}

double sine_integral(double x) {
    if (x == 0.0) return 0.0;
    if (x < 0.0) return -sine_integral(-x);
    auto sinc = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
    return integrate_adaptive(sinc, 0.0, x, 1e-14, 1e-15, 4000);
}

}  // namespace dxl
