#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>
#include <vector>

#include "dxl/errors.hpp"
#include "dxl/spinor.hpp"

using namespace dxl;
using cd = std::complex<double>;

namespace {

// Fixed seed for every randomized battery in this file.
constexpr std::uint64_t kSeed = 0xD1AC5EA0ull;

std::vector<ThreeVector> random_momenta(int count, std::uint64_t seed = kSeed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> comp(-3.0, 3.0);
    std::vector<ThreeVector> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        double x = comp(gen), y = comp(gen), z = comp(gen);
        out.push_back({x, y, z});
    }
    return out;
}

// Reference component table for the eight spinors, written out longhand the
// way the closed forms read, as an oracle independent of make_spinor.
Spinor reference_spinor(Family f, Spin s, const ThreeVector& p) {
    const double e = p.energy();
    const double n = std::sqrt((e + 1.0) / (2.0 * e));
    const double d = e + 1.0;
    const cd pz(p.z, 0.0), pp(p.x, p.y), pm(p.x, -p.y);
    Spinor r;
    if (f == Family::u && s == Spin::up) r << 1, 0, pz / d, pp / d;
    if (f == Family::u && s == Spin::down) r << 0, 1, pm / d, -pz / d;
    if (f == Family::u_hat && s == Spin::up) r << -pz / d, -pp / d, 1, 0;
    if (f == Family::u_hat && s == Spin::down) r << -pm / d, pz / d, 0, 1;
    if (f == Family::v && s == Spin::up) r << pm / d, -pz / d, 0, 1;
    if (f == Family::v && s == Spin::down) r << pz / d, pp / d, 1, 0;
    if (f == Family::v_hat && s == Spin::up) r << 0, 1, -pm / d, pz / d;
    if (f == Family::v_hat && s == Spin::down) r << 1, 0, -pz / d, -pp / d;
    return n * r;
}

// Direct assembly of the two-momentum sea ladder (00 insertion) from spinors
// and plane-wave phases, as the oracle for the closed two-cosine form.
double two_momentum_oracle(const ThreeVector& p, const ThreeVector& p2,
                           const ThreeVector& d) {
    const SpinorMatrix g0 = gamma(0);
    auto block = [&](Family f1, Family f2, const cd& phase) {
        cd tot{0.0, 0.0};
        for (Spin s : {Spin::up, Spin::down}) {
            for (Spin s2 : {Spin::up, Spin::down}) {
                const Spinor a = make_spinor(f1, s, p);
                const Spinor b = make_spinor(f2, s2, p2);
                const cd m1 = dirac_adjoint(a) * g0 * b;
                const cd m2 = dirac_adjoint(b) * g0 * a;
                tot += m1 * m2;
            }
        }
        const cd w = tot * phase;
        return (w + std::conj(w)).real();
    };
    const ThreeVector diff{p.x - p2.x, p.y - p2.y, p.z - p2.z};
    const ThreeVector sum{p.x + p2.x, p.y + p2.y, p.z + p2.z};
    const cd i{0.0, 1.0};
    const double t1 = block(Family::u_hat, Family::u_hat, std::exp(-i * diff.dot(d)));
    const double t2 = block(Family::v_hat, Family::v_hat, std::exp(+i * diff.dot(d)));
    const double t3 = block(Family::u_hat, Family::v_hat, std::exp(-i * sum.dot(d)));
    const double t4 = block(Family::v_hat, Family::u_hat, std::exp(+i * sum.dot(d)));
    return -0.5 * (t1 + t2 - t3 - t4);
}

const Family kFamilies[] = {Family::u, Family::u_hat, Family::v, Family::v_hat};
const Spin kSpins[] = {Spin::up, Spin::down};

}  // namespace

TEST_CASE("gamma matrices satisfy the Clifford algebra") {
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            SpinorMatrix anti = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
            SpinorMatrix want = 2.0 * metric(mu, nu) * SpinorMatrix::Identity();
            CHECK((anti - want).norm() < 1e-15);
        }
    }
    CHECK((gamma(0) - gamma(0).adjoint()).norm() < 1e-15);
    for (int i = 1; i <= 3; ++i) CHECK((gamma(i) + gamma(i).adjoint()).norm() < 1e-15);
    // sigma^{12} is the doubled spin operator: diag(1,-1,1,-1)
    SpinorMatrix s12 = sigma_tensor(1, 2);
    SpinorMatrix want = SpinorMatrix::Zero();
    want(0, 0) = 1; want(1, 1) = -1; want(2, 2) = 1; want(3, 3) = -1;
    CHECK((s12 - want).norm() < 1e-15);
    CHECK((sigma_tensor(2, 1) + s12).norm() < 1e-15);
    CHECK_THROWS_AS(gamma(4), DomainError);
    CHECK_THROWS_AS(sigma_tensor(0, -1), DomainError);
}

TEST_CASE("spinor components match their closed forms") {
    const ThreeVector p{0.3, -0.7, 1.1};
    for (Family f : kFamilies) {
        for (Spin s : kSpins) {
            CHECK((make_spinor(f, s, p) - reference_spinor(f, s, p)).norm() < 1e-15);
            CHECK(std::abs(make_spinor(f, s, p).squaredNorm() - 1.0) < 1e-14);
        }
    }
}

TEST_CASE("free-field, conjugation, and completeness residuals vanish") {
    auto momenta = random_momenta(100);
    momenta.push_back({0.0, 0.0, 0.0});
    for (const auto& p : momenta) {
        for (Family f : kFamilies) {
            for (Spin s : kSpins) {
                CHECK(dirac_residual(f, s, p) < 1e-13);
                CHECK(charge_conjugation_residual(f, s, p) < 1e-13);
            }
            CHECK(completeness_residual(f, p) < 1e-13);
        }
    }
}

TEST_CASE("conjugation map lands on the tabulated partners") {
    const SpinorMatrix c_mat = cd(0.0, 1.0) * gamma(2);
    for (const auto& p : random_momenta(10, kSeed + 1)) {
        const Spinor cu_up = c_mat * make_spinor(Family::u, Spin::up, p).conjugate();
        CHECK((cu_up - make_spinor(Family::v, Spin::up, p)).norm() < 1e-14);
        CHECK((cu_up - make_spinor(Family::u_hat, Spin::down, -p)).norm() < 1e-14);
        const Spinor cu_dn = c_mat * make_spinor(Family::u, Spin::down, p).conjugate();
        CHECK((cu_dn + make_spinor(Family::v, Spin::down, p)).norm() < 1e-14);
        CHECK((cu_dn + make_spinor(Family::u_hat, Spin::up, -p)).norm() < 1e-14);
        const Spinor ch_up = c_mat * make_spinor(Family::u_hat, Spin::up, p).conjugate();
        CHECK((ch_up + make_spinor(Family::v_hat, Spin::up, p)).norm() < 1e-14);
        CHECK((ch_up + make_spinor(Family::u, Spin::down, -p)).norm() < 1e-14);
        const Spinor ch_dn = c_mat * make_spinor(Family::u_hat, Spin::down, p).conjugate();
        CHECK((ch_dn - make_spinor(Family::v_hat, Spin::down, p)).norm() < 1e-14);
        CHECK((ch_dn - make_spinor(Family::u, Spin::up, -p)).norm() < 1e-14);
    }
}

TEST_CASE("scalar densities, particle densities, and currents") {
    for (const auto& p : random_momenta(20, kSeed + 2)) {
        const double e = p.energy();
        const double scalar_sign[] = {+1.0, -1.0, -1.0, +1.0};  // u, u_hat, v, v_hat
        const double current_sign[] = {+1.0, -1.0, +1.0, -1.0};
        const double comps[] = {p.x, p.y, p.z};
        for (int fi = 0; fi < 4; ++fi) {
            Family f = kFamilies[fi];
            for (Spin s : kSpins) {
                for (Spin s2 : kSpins) {
                    const double delta = (s == s2) ? 1.0 : 0.0;
                    cd sc = bilinear(f, s, Insertion::scalar(), f, s2, p);
                    CHECK(std::abs(sc - scalar_sign[fi] * delta / e) < 1e-14);
                    cd dens = bilinear(f, s, Insertion::vector(0), f, s2, p);
                    CHECK(std::abs(dens - delta) < 1e-14);
                    for (int i = 1; i <= 3; ++i) {
                        cd cur = bilinear(f, s, Insertion::vector(i), f, s2, p);
                        CHECK(std::abs(cur - current_sign[fi] * comps[i - 1] * delta / e) < 1e-14);
                    }
                }
            }
        }
        // cross-family particle densities vanish at equal momentum
        for (Spin s : kSpins) {
            for (Spin s2 : kSpins) {
                CHECK(std::abs(bilinear(Family::u, s, Insertion::vector(0), Family::u_hat, s2, p)) < 1e-14);
                CHECK(std::abs(bilinear(Family::v, s, Insertion::vector(0), Family::v_hat, s2, p)) < 1e-14);
            }
        }
    }
}

TEST_CASE("rest-frame densities of the sea reference spinor") {
    const ThreeVector rest{0.0, 0.0, 0.0};
    // four-current: only the time component survives, equal to +1
    CHECK(std::abs(bilinear(Family::u_hat, Spin::up, Insertion::vector(0),
                            Family::u_hat, Spin::up, rest) - 1.0) < 1e-15);
    for (int i = 1; i <= 3; ++i) {
        CHECK(std::abs(bilinear(Family::u_hat, Spin::up, Insertion::vector(i),
                                Family::u_hat, Spin::up, rest)) < 1e-15);
    }
    // scalar density: -1
    CHECK(std::abs(bilinear(Family::u_hat, Spin::up, Insertion::scalar(),
                            Family::u_hat, Spin::up, rest) + 1.0) < 1e-15);
    // spin density: -(delta^{m1} delta^{n2} - delta^{m2} delta^{n1})
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const double want = -((mu == 1 && nu == 2) ? 1.0 : 0.0) +
                                ((mu == 2 && nu == 1) ? 1.0 : 0.0);
            cd got = bilinear(Family::u_hat, Spin::up, Insertion::tensor(mu, nu),
                              Family::u_hat, Spin::up, rest);
            CHECK(std::abs(got - want) < 1e-15);
        }
    }
    // positive-energy electron at rest for comparison: +1, +1, +1 at (1,2)
    CHECK(std::abs(bilinear(Family::u, Spin::up, Insertion::vector(0),
                            Family::u, Spin::up, rest) - 1.0) < 1e-15);
    CHECK(std::abs(bilinear(Family::u, Spin::up, Insertion::scalar(),
                            Family::u, Spin::up, rest) - 1.0) < 1e-15);
    CHECK(std::abs(bilinear(Family::u, Spin::up, Insertion::tensor(1, 2),
                            Family::u, Spin::up, rest) - 1.0) < 1e-15);
    CHECK(std::abs(bilinear(Family::u, Spin::down, Insertion::tensor(1, 2),
                            Family::u, Spin::down, rest) + 1.0) < 1e-15);
}

TEST_CASE("one-momentum exchange kernel: vector channel is -g/E") {
    for (const auto& p : random_momenta(50, kSeed + 3)) {
        const double e = p.energy();
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                cd val = exchange_integrand_one_momentum(ExchangeChannel::vector(mu, nu), p);
                CHECK(std::abs(val.imag()) < 1e-13);
                CHECK(std::abs(val.real() - (-metric(mu, nu) / e)) < 1e-13);
            }
        }
        cd sc = exchange_integrand_one_momentum(ExchangeChannel::scalar(), p);
        CHECK(std::abs(sc - cd(-1.0 / e)) < 1e-13);
    }
    // at p = 0 the 00 component is exactly -1: one displaced sea electron
    cd at_rest = exchange_integrand_one_momentum(ExchangeChannel::vector(0, 0), {0, 0, 0});
    CHECK(std::abs(at_rest + 1.0) < 1e-15);
}

TEST_CASE("one-momentum exchange kernel: tensor channel") {
    // Full closed form: -(g^{mr} g^{ns} - g^{ms} g^{nr}) / E.  On the
    // antisymmetric (1,2)/(2,1) components selected by the rest-frame spin
    // density the second term drops and the kernel is -g^{mr} g^{ns} / E.
    for (const auto& p : random_momenta(20, kSeed + 4)) {
        const double e = p.energy();
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                for (int rho = 0; rho < 4; ++rho) {
                    for (int sg = 0; sg < 4; ++sg) {
                        cd val = exchange_integrand_one_momentum(
                            ExchangeChannel::tensor(mu, nu, rho, sg), p);
                        const double want =
                            -(metric(mu, rho) * metric(nu, sg) -
                              metric(mu, sg) * metric(nu, rho)) / e;
                        CHECK(std::abs(val.imag()) < 1e-13);
                        CHECK(std::abs(val.real() - want) < 1e-13);
                    }
                }
            }
        }
    }
    const ThreeVector p{0.9, 0.4, -1.3};
    const double e = p.energy();
    cd spin_comp = exchange_integrand_one_momentum(ExchangeChannel::tensor(1, 2, 1, 2), p);
    CHECK(std::abs(spin_comp - cd(-1.0 / e)) < 1e-13);
    cd swapped = exchange_integrand_one_momentum(ExchangeChannel::tensor(1, 2, 2, 1), p);
    CHECK(std::abs(swapped - cd(+1.0 / e)) < 1e-13);
}

TEST_CASE("two-momentum exchange kernel matches direct spinor assembly") {
    std::mt19937_64 gen(kSeed + 5);
    std::uniform_real_distribution<double> comp(-3.0, 3.0);
    for (int i = 0; i < 40; ++i) {
        const ThreeVector p{comp(gen), comp(gen), comp(gen)};
        const ThreeVector p2{comp(gen), comp(gen), comp(gen)};
        const ThreeVector d{comp(gen), comp(gen), comp(gen)};
        const double got = exchange_integrand_two_momenta(p, p2, d);
        const double want = two_momentum_oracle(p, p2, d);
        CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
    // both momenta at rest: exactly -4 regardless of separation
    CHECK(exchange_integrand_two_momenta({0, 0, 0}, {0, 0, 0}, {1.7, 0.2, -0.4}) ==
          doctest::Approx(-4.0).epsilon(1e-15));
    // zero separation: -4/(EE')
    const ThreeVector a{1.0, -2.0, 0.5}, b{0.3, 0.1, -1.1};
    CHECK(exchange_integrand_two_momenta(a, b, {0, 0, 0}) ==
          doctest::Approx(-4.0 / (a.energy() * b.energy())).epsilon(1e-14));
}
