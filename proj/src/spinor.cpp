#include "dxl/spinor.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "dxl/errors.hpp"

namespace dxl {

namespace {

using cd = std::complex<double>;
const cd kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int i) {
    Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
    switch (i) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::logic_error("pauli index");
    }
    return s;
}

std::array<SpinorMatrix, 4> build_gammas() {
    std::array<SpinorMatrix, 4> g;
    g[0] = SpinorMatrix::Zero();
    g[0].block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
    g[0].block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
    for (int i = 1; i <= 3; ++i) {
        g[i] = SpinorMatrix::Zero();
        g[i].block<2, 2>(0, 2) = pauli(i);
        g[i].block<2, 2>(2, 0) = -pauli(i);
    }
    return g;
}

const std::array<SpinorMatrix, 4>& gammas() {
    static const std::array<SpinorMatrix, 4> g = build_gammas();
    return g;
}

// gamma^0 E - gamma.pvec for a four-vector (e, pvec)
SpinorMatrix slash(double e, const ThreeVector& p) {
    const auto& g = gammas();
    return e * g[0] - p.x * g[1] - p.y * g[2] - p.z * g[3];
}

Eigen::Vector2cd chi(Spin s) {
    return s == Spin::up ? Eigen::Vector2cd(1, 0) : Eigen::Vector2cd(0, 1);
}

Spin flip(Spin s) { return s == Spin::up ? Spin::down : Spin::up; }

SpinorMatrix insertion_matrix(const Insertion& ins) {
    switch (ins.kind) {
        case Insertion::Kind::scalar: return SpinorMatrix::Identity();
        case Insertion::Kind::vector: return gamma(ins.mu);
        case Insertion::Kind::tensor: return sigma_tensor(ins.mu, ins.nu);
    }
    throw std::logic_error("insertion kind");
}

void check_index(int mu) {
    if (mu < 0 || mu > 3) throw DomainError("spinor index out of range 0..3");
}

}  // namespace

double ThreeVector::energy() const { return std::sqrt(1.0 + norm2()); }

const SpinorMatrix& gamma(int mu) {
    check_index(mu);
    return gammas()[mu];
}

SpinorMatrix sigma_tensor(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    const auto& g = gammas();
    return 0.5 * kI * (g[mu] * g[nu] - g[nu] * g[mu]);
}

double metric(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    if (mu != nu) return 0.0;
    return mu == 0 ? 1.0 : -1.0;
}

Spinor make_spinor(Family f, Spin s, const ThreeVector& p) {
    const double e = p.energy();
    const double norm = std::sqrt((e + 1.0) / (2.0 * e));
    const Eigen::Matrix2cd sp =
        (p.x * pauli(1) + p.y * pauli(2) + p.z * pauli(3)) / (e + 1.0);
    Spinor psi;
    // Upper/lower two-component blocks; the antiparticle families carry the
    // opposite spin label on their Pauli spinor.
    switch (f) {
        case Family::u: {
            Eigen::Vector2cd c = chi(s);
            psi << c, sp * c;
            break;
        }
        case Family::u_hat: {
            Eigen::Vector2cd c = chi(s);
            psi << -sp * c, c;
            break;
        }
        case Family::v: {
            Eigen::Vector2cd c = chi(flip(s));
            psi << sp * c, c;
            break;
        }
        case Family::v_hat: {
            Eigen::Vector2cd c = chi(flip(s));
            psi << c, -sp * c;
            break;
        }
    }
    return norm * psi;
}

Eigen::RowVector4cd dirac_adjoint(const Spinor& psi) {
    return psi.adjoint() * gamma(0);
}

std::complex<double> bilinear(Family bra_f, Spin bra_s, const Insertion& ins,
                              Family ket_f, Spin ket_s, const ThreeVector& p) {
    const Spinor bra = make_spinor(bra_f, bra_s, p);
    const Spinor ket = make_spinor(ket_f, ket_s, p);
    return dirac_adjoint(bra) * insertion_matrix(ins) * ket;
}

double dirac_residual(Family f, Spin s, const ThreeVector& p) {
    const double e = p.energy();
    SpinorMatrix op;
    switch (f) {
        case Family::u: op = slash(e, p) - SpinorMatrix::Identity(); break;
        case Family::u_hat: op = -slash(e, -p) - SpinorMatrix::Identity(); break;
        case Family::v: op = -slash(e, p) - SpinorMatrix::Identity(); break;
        case Family::v_hat: op = slash(e, -p) - SpinorMatrix::Identity(); break;
    }
    return (op * make_spinor(f, s, p)).norm();
}

double charge_conjugation_residual(Family f, Spin s, const ThreeVector& p) {
    const SpinorMatrix c_mat = kI * gamma(2);
    const Spinor mapped = c_mat * make_spinor(f, s, p).conjugate();
    // Conjugation swaps u <-> v and u_hat <-> v_hat with a spin-dependent
    // sign, and the partner is also reachable in the crossed family at -p
    // with flipped spin.
    double sign;
    Family partner, crossed;
    switch (f) {
        case Family::u:
            sign = (s == Spin::up) ? 1.0 : -1.0;
            partner = Family::v;
            crossed = Family::u_hat;
            break;
        case Family::u_hat:
            sign = (s == Spin::up) ? -1.0 : 1.0;
            partner = Family::v_hat;
            crossed = Family::u;
            break;
        case Family::v:
            sign = (s == Spin::up) ? 1.0 : -1.0;
            partner = Family::u;
            crossed = Family::v_hat;
            break;
        case Family::v_hat:
            sign = (s == Spin::up) ? -1.0 : 1.0;
            partner = Family::u_hat;
            crossed = Family::v;
            break;
    }
    const double r1 = (mapped - sign * make_spinor(partner, s, p)).norm();
    const double r2 = (mapped - sign * make_spinor(crossed, flip(s), -p)).norm();
    return std::max(r1, r2);
}

double completeness_residual(Family f, const ThreeVector& p) {
    const double e = p.energy();
    SpinorMatrix sum = SpinorMatrix::Zero();
    for (Spin s : {Spin::up, Spin::down}) {
        const Spinor psi = make_spinor(f, s, p);
        sum += psi * dirac_adjoint(psi);
    }
    SpinorMatrix proj;
    switch (f) {
        case Family::u: proj = (slash(e, p) + SpinorMatrix::Identity()) / (2.0 * e); break;
        case Family::v: proj = (slash(e, p) - SpinorMatrix::Identity()) / (2.0 * e); break;
        case Family::u_hat: proj = -(slash(-e, p) + SpinorMatrix::Identity()) / (2.0 * e); break;
        case Family::v_hat: proj = -(slash(-e, p) - SpinorMatrix::Identity()) / (2.0 * e); break;
    }
    return (sum - proj).norm();
}

namespace {

// Spin-summed sea ladder against the rest spinor for one insertion pair,
// with the plane-wave phases already stripped:
//   -1/2 [ (A + conj A) - (B + conj B) ],
// A running over sea electrons at p, B over sea positrons at p.
cd assemble_one_momentum(const SpinorMatrix& g1, const SpinorMatrix& g2,
                         const ThreeVector& p) {
    const ThreeVector rest{0.0, 0.0, 0.0};
    const Spinor ref = make_spinor(Family::u_hat, Spin::up, rest);
    const Eigen::RowVector4cd ref_bar = dirac_adjoint(ref);
    cd a{0.0, 0.0}, b{0.0, 0.0};
    for (Spin s : {Spin::up, Spin::down}) {
        const Spinor us = make_spinor(Family::u_hat, s, p);
        const Spinor vs = make_spinor(Family::v_hat, s, p);
        a += cd(dirac_adjoint(us) * g1 * ref) * cd(ref_bar * g2 * us);
        b += cd(dirac_adjoint(vs) * g1 * ref) * cd(ref_bar * g2 * vs);
    }
    return -0.5 * ((a + std::conj(a)) - (b + std::conj(b)));
}

}  // namespace

std::complex<double> exchange_integrand_one_momentum(const ExchangeChannel& ch,
                                                     const ThreeVector& p) {
    switch (ch.kind) {
        case ExchangeChannel::Kind::scalar: {
            const SpinorMatrix id = SpinorMatrix::Identity();
            return assemble_one_momentum(id, id, p);
        }
        case ExchangeChannel::Kind::vector: {
            // Average the two index orders, matching the symmetrized pair sum.
            const cd direct = assemble_one_momentum(gamma(ch.mu), gamma(ch.nu), p);
            const cd swapped = assemble_one_momentum(gamma(ch.nu), gamma(ch.mu), p);
            return 0.5 * (direct + swapped);
        }
        case ExchangeChannel::Kind::tensor: {
            const SpinorMatrix s1 = sigma_tensor(ch.mu, ch.nu);
            const SpinorMatrix s2 = sigma_tensor(ch.rho, ch.sigma);
            const cd direct = assemble_one_momentum(s1, s2, p);
            const cd swapped = assemble_one_momentum(s2, s1, p);
            return 0.5 * (direct + swapped);
        }
    }
    throw std::logic_error("exchange channel kind");
}

double exchange_integrand_two_momenta(const ThreeVector& p, const ThreeVector& p2,
                                      const ThreeVector& separation) {
    const double e1 = p.energy();
    const double e2 = p2.energy();
    const double pp = p.dot(p2);
    const ThreeVector diff{p.x - p2.x, p.y - p2.y, p.z - p2.z};
    const ThreeVector sum{p.x + p2.x, p.y + p2.y, p.z + p2.z};
    const double inv = 1.0 / (e1 * e2);
    return -2.0 * (inv + 1.0 + pp * inv) * std::cos(diff.dot(separation)) -
           2.0 * (inv - 1.0 - pp * inv) * std::cos(sum.dot(separation));
}

}  // namespace dxl
